// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include "khobor/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "khobor/errors.hpp"
#include "khobor/rng.hpp"

namespace khobor {

namespace {

// Bangla vowels and consonants; synthetic tokens are base-43 numerals over
// this alphabet, padded to two letters.
const char* const kLetters[] = {
    "অ", "আ", "ই", "ঈ", "উ", "ঊ", "ঋ", "এ", "ঐ", "ও", "ঔ",
    "ক", "খ", "গ", "ঘ", "ঙ", "চ", "ছ", "জ", "ঝ", "ঞ",
    "ট", "ঠ", "ড", "ঢ", "ণ", "ত", "থ", "দ", "ধ", "ন",
    "প", "ফ", "ব", "ভ", "ম", "য", "র", "ল", "শ", "ষ", "স", "হ",
};
constexpr std::size_t kAlphabetSize = std::size(kLetters);

constexpr std::size_t kMinTokens = 20;
constexpr std::size_t kMaxTokens = 200;

}  // namespace

std::string synth_token(std::size_t index) {
    std::string token;
    do {
        token.insert(0, kLetters[index % kAlphabetSize]);
        index /= kAlphabetSize;
    } while (index > 0);
    // pad to two letters so tokens read as words rather than single vowels
    if (token.size() <= 3) token.insert(0, kLetters[0]);
    return token;
}

LabeledCorpus gen_synth(const SynthConfig& config) {
    if (config.n_docs < 4) throw InputError("gen_synth requires n_docs >= 4");
    if (config.vocab_size < 4) throw InputError("gen_synth requires vocab_size >= 4");
    if (!(config.fake_fraction > 0.0 && config.fake_fraction < 1.0))
        throw InputError("fake_fraction must be in (0,1)");
    if (!(config.separation >= 0.0 && config.separation <= 1.0))
        throw InputError("separation must be in [0,1]");

    std::mt19937_64 rng(config.seed);

    // Exact fake count (clamped so both classes appear), then a seeded
    // shuffle of the label sequence.
    const auto n = config.n_docs;
    auto n_fake = static_cast<std::size_t>(
        std::llround(static_cast<double>(n) * config.fake_fraction));
    n_fake = std::clamp<std::size_t>(n_fake, 1, n - 1);
    std::vector<Label> labels(n, Label::Real);
    std::fill_n(labels.begin(), n_fake, Label::Fake);
    shuffle_inplace(labels, rng);

    const std::size_t v = config.vocab_size;
    const std::size_t half = v / 2;  // Real draws from [0, half), Fake from [half, v)

    LabeledCorpus corpus;
    corpus.documents.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t len = kMinTokens + draw_below(rng, kMaxTokens - kMinTokens + 1);
        std::string text;
        text.reserve(len * 7);
        for (std::size_t k = 0; k < len; ++k) {
            std::size_t term;
            if (draw_unit(rng) < config.separation) {
                term = labels[i] == Label::Real ? draw_below(rng, half)
                                                : half + draw_below(rng, v - half);
            } else {
                term = draw_below(rng, v);
            }
            if (k > 0) text.push_back(' ');
            text += synth_token(term);
        }
        corpus.documents.push_back({"doc-" + std::to_string(i), std::move(text), labels[i]});
    }
    return corpus;
}

void write_jsonl(const LabeledCorpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write corpus file \"" + path + "\"");
    for (const Document& doc : corpus.documents) {
        const nlohmann::json line{
            {"id", doc.id}, {"text", doc.text}, {"label", label_name(doc.label)}};
        out << line.dump() << '\n';
    }
    if (!out) throw InputError("failed writing corpus file \"" + path + "\"");
}

}  // namespace khobor
