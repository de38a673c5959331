// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include <doctest.h>

#include <random>

#include "khobor/preprocess.hpp"
#include "khobor/unicode.hpp"

#include "oracles.hpp"

using namespace khobor;

TEST_CASE("clean_text strips punctuation, emoticons, digits and ASCII letters") {
    CHECK(clean_text("খবর!! :D 123 abc খবর") == "খবর খবর");
    CHECK(clean_text("খবর") == "খবর");  // fixed point
    CHECK(clean_text("@#$%") == "");
}

TEST_CASE("removed characters become spaces so neighbours never fuse") {
    CHECK(clean_text("ক৫খ") == "ক খ");   // Bangla digit between words
    CHECK(clean_text("৫টি") == "টি");
    CHECK(clean_text("ক-খ") == "ক খ");
    CHECK(clean_text("কxখ") == "ক খ");
}

TEST_CASE("clean_text handles emoji blocks") {
    CHECK(clean_text("ক\U0001F600খ") == "ক খ");  // emoji proper
    CHECK(clean_text("ক☂খ") == "ক খ");      // umbrella, misc symbols block
    FilterRules keep_emoji;
    keep_emoji.remove_emoji = false;
    keep_emoji.remove_special = false;
    CHECK(clean_text("ক\U0001F600খ", keep_emoji) == "ক\U0001F600খ");
}

TEST_CASE("clean_text preserves Bangla signs, ZWJ/ZWNJ and other scripts") {
    CHECK(clean_text("কাঁদা") == "কাঁদা");            // vowel sign + candrabindu
    CHECK(clean_text("র‍্য") == "র‍্য");    // ZWJ conjunct
    CHECK(clean_text("সুন্‌দর") == "সুন্‌দর");  // ZWNJ
    CHECK(clean_text("नमस्ते") == "नमस्ते");           // Devanagari is untouched
}

TEST_CASE("filter rules can be disabled one at a time") {
    FilterRules keep_english;
    keep_english.remove_english_letters = false;
    CHECK(clean_text("খবর abc 12!", keep_english) == "খবর abc");

    FilterRules keep_digits;
    keep_digits.remove_digits = false;
    CHECK(clean_text("খবর ৫টি 12!", keep_digits) == "খবর ৫টি 12");

    FilterRules keep_special;
    keep_special.remove_special = false;
    CHECK(clean_text("খবর!", keep_special) == "খবর!");
}

TEST_CASE("clean_text normalizes whitespace runs") {
    CHECK(clean_text("ক\n\nখ") == "ক খ");
    CHECK(clean_text("  ক\tখ  ") == "ক খ");
    CHECK(clean_text("ক　খ") == "ক খ");  // ideographic space
}

TEST_CASE("clean_text replaces invalid UTF-8 and strips the replacement char") {
    // lone continuation byte decodes to U+FFFD (symbol category)
    CHECK(clean_text("\x80\xE0ক") == "ক");
}

TEST_CASE("tokenize splits on Unicode whitespace") {
    CHECK(tokenize("খবর খবর") == TokenList{"খবর", "খবর"});
    CHECK(tokenize("") == TokenList{});
    CHECK(tokenize(" ক খ ") == TokenList{"ক", "খ"});
    CHECK(tokenize("ক\tখ\nগ") == TokenList{"ক", "খ", "গ"});
}

TEST_CASE("clean_text is idempotent over random Unicode strings") {
    std::mt19937_64 rng(2024);
    const FilterRules rules;
    for (int iter = 0; iter < 1500; ++iter) {
        const std::string text = oracle::random_unicode_string(rng, 64);
        const std::string once = clean_text(text, rules);
        CHECK(clean_text(once, rules) == once);
    }
}

TEST_CASE("tokens of cleaned text are closed under the filter rules") {
    std::mt19937_64 rng(2025);
    const FilterRules rules;
    for (int iter = 0; iter < 1500; ++iter) {
        const std::string text = oracle::random_unicode_string(rng, 64);
        for (const std::string& token : tokenize(clean_text(text, rules))) {
            CHECK(!token.empty());
            for (char32_t cp : decode_utf8(token)) {
                CHECK(!is_removable(cp, rules));
                CHECK(!is_unicode_space(cp));
            }
        }
    }
}

TEST_CASE("clean_text never grows the codepoint count") {
    std::mt19937_64 rng(2026);
    for (int iter = 0; iter < 1500; ++iter) {
        const std::string text = oracle::random_unicode_string(rng, 64);
        CHECK(decode_utf8(clean_text(text)).size() <= decode_utf8(text).size());
    }
}
