// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace khobor {

/// Character-removal switches. The defaults strip everything a raw Bangla
/// news article carries besides the script itself; individual rules exist
/// only for ablation runs.
struct FilterRules {
    bool remove_special = true;          ///< Unicode punctuation and symbols
    bool remove_digits = true;           ///< ASCII 0-9 and Bangla U+09E6..U+09EF
    bool remove_english_letters = true;  ///< ASCII A-Z, a-z
    bool remove_emoji = true;            ///< U+1F300..U+1FAFF and U+2600..U+27BF

    bool operator==(const FilterRules&) const = default;
};

bool is_removable(char32_t cp, const FilterRules& rules);

/// Replaces every removable character with a space, collapses whitespace
/// runs to a single space and trims. Substitution (rather than deletion)
/// keeps neighbouring words from fusing when a digit or symbol sits between
/// them. Idempotent; never fails. Bangla letters, vowel signs, virama and
/// ZWJ/ZWNJ pass through untouched.
std::string clean_text(std::string_view text, const FilterRules& rules = {});

using TokenList = std::vector<std::string>;

/// Splits on Unicode whitespace, preserving order. Never yields empty
/// tokens; empty input gives an empty list.
TokenList tokenize(std::string_view text);

}  // namespace khobor
