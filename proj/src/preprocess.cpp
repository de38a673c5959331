// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include "khobor/preprocess.hpp"

#include "khobor/unicode.hpp"

namespace khobor {

bool is_removable(char32_t cp, const FilterRules& rules) {
    if (rules.remove_special && is_punct_or_symbol(cp)) return true;
    if (rules.remove_digits &&
        ((cp >= U'0' && cp <= U'9') || (cp >= 0x09E6 && cp <= 0x09EF))) {
        return true;
    }
    if (rules.remove_english_letters &&
        ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z'))) {
        return true;
    }
    if (rules.remove_emoji &&
        ((cp >= 0x1F300 && cp <= 0x1FAFF) || (cp >= 0x2600 && cp <= 0x27BF))) {
        return true;
    }
    return false;
}

std::string clean_text(std::string_view text, const FilterRules& rules) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char32_t cp : decode_utf8(text)) {
        if (is_unicode_space(cp) || is_removable(cp, rules)) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        append_utf8(cp, out);
    }
    return out;
}

TokenList tokenize(std::string_view text) {
    TokenList tokens;
    std::string current;
    for (char32_t cp : decode_utf8(text)) {
        if (is_unicode_space(cp)) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
            continue;
        }
        append_utf8(cp, current);
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

}  // namespace khobor
