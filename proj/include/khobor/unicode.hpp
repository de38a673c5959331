// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace khobor {

// Decodes UTF-8 to codepoints. Each rejected byte (truncated, overlong or
// surrogate sequence) becomes one U+FFFD, so the function is total.
std::vector<char32_t> decode_utf8(std::string_view text);

void append_utf8(char32_t cp, std::string& out);
std::string encode_utf8(const std::vector<char32_t>& codepoints);

// Unicode White_Space property.
bool is_unicode_space(char32_t cp);

// General categories P* and S* (table in src/unicode_ps_ranges.inc).
bool is_punct_or_symbol(char32_t cp);

}  // namespace khobor
