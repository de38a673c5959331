// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace khobor {

enum class Label : std::uint8_t { Real = 0, Fake = 1 };

inline constexpr std::size_t kNumClasses = 2;

const char* label_name(Label label);

// Case-insensitive "real"/"fake"; anything else throws UnknownLabel.
Label parse_label(std::string_view text);

struct Document {
    std::string id;
    std::string text;  // raw UTF-8 article body; non-empty at ingestion
    Label label = Label::Real;
};

/// Documents in file order. Ids are unique; duplicate texts are allowed.
struct LabeledCorpus {
    std::vector<Document> documents;

    std::size_t size() const { return documents.size(); }
    bool empty() const { return documents.empty(); }
};

enum class CorpusFormat { Jsonl, Csv };

CorpusFormat parse_corpus_format(std::string_view name);

LabeledCorpus load_corpus(const std::string& path, CorpusFormat format);
LabeledCorpus parse_corpus(std::istream& in, CorpusFormat format);

struct ClassStat {
    std::size_t count = 0;
    double percent = 0.0;  // of total; 0 for an empty corpus
};

struct CorpusStats {
    std::size_t total = 0;
    ClassStat real;
    ClassStat fake;
};

CorpusStats corpus_stats(const LabeledCorpus& corpus);

struct SplitConfig {
    double test_fraction = 0.3;  // in (0,1)
    std::uint64_t seed = 0;
};

struct CorpusSplit {
    LabeledCorpus train;
    LabeledCorpus test;
};

// floor((1 - test_fraction) * n_docs). Products within one part in 1e9 of
// an integer count as hitting it, so 0.1 of 1e6 documents means exactly
// 100000 despite the binary value of 0.1.
std::size_t train_size_for(std::size_t n_docs, double test_fraction);

/// Seeded split: the sorted id list is shuffled (Fisher-Yates over
/// mt19937_64) and its prefix becomes the training set, so the partition
/// depends only on (id set, seed, test_fraction) and not on file order.
/// Both halves keep corpus order. Warns on stderr when a class is missing
/// from the training half; throws CorpusTooSmall when n_docs < 2.
CorpusSplit split_corpus(const LabeledCorpus& corpus, const SplitConfig& config);

}  // namespace khobor
