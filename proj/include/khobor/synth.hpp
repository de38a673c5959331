// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "khobor/corpus.hpp"

namespace khobor {

/// Seeded two-class multinomial corpus generator. Each class draws tokens
/// from a mixture of a uniform background over the whole vocabulary and a
/// uniform distribution over its own half of the vocabulary; `separation`
/// is the mixture weight of the class half, so 0 makes the classes
/// identical and 1 gives them disjoint supports.
struct SynthConfig {
    std::size_t n_docs = 2541;
    double fake_fraction = 0.3908;  // in (0,1)
    std::size_t vocab_size = 2000;
    double separation = 0.8;  // in [0,1]
    std::uint64_t seed = 0;
};

// The fake count is rounded (and clamped so both classes appear), then the
// label sequence is shuffled with the seeded generator. Documents carry
// 20-200 tokens. Throws InputError on parameter bounds violations
// (n_docs >= 4, vocab_size >= 4).
LabeledCorpus gen_synth(const SynthConfig& config);

// Deterministic Bangla-script token for a term index; round-trips through
// clean_text untouched.
std::string synth_token(std::size_t index);

void write_jsonl(const LabeledCorpus& corpus, const std::string& path);

}  // namespace khobor
