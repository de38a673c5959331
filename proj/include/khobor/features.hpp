// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "khobor/corpus.hpp"
#include "khobor/preprocess.hpp"

namespace khobor {

using TermId = std::uint32_t;

/// Bijective term <-> dense id mapping, fitted on the training split only.
struct Vocabulary {
    std::unordered_map<std::string, TermId> term_to_id;
    std::vector<std::string> id_to_term;

    std::size_t size() const { return id_to_term.size(); }

    std::optional<TermId> find(const std::string& term) const {
        auto it = term_to_id.find(term);
        if (it == term_to_id.end()) return std::nullopt;
        return it->second;
    }
};

// Ids assigned in first-occurrence order over the given documents.
// Throws EmptyTrainingCorpus when no tokens exist at all.
Vocabulary build_vocabulary(const std::vector<TokenList>& train_docs);

struct SparseEntry {
    TermId term;
    double weight;  // > 0

    bool operator==(const SparseEntry&) const = default;
};

/// One document as (term id, weight) pairs with strictly increasing ids;
/// zero weights are never stored.
struct SparseVector {
    std::vector<SparseEntry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t nnz() const { return entries.size(); }

    bool operator==(const SparseVector&) const = default;
};

// Raw term counts; out-of-vocabulary tokens are dropped.
SparseVector vectorize_counts(const TokenList& doc, const Vocabulary& vocab);

/// Smoothed inverse document frequencies over the training corpus:
/// idf[t] = ln((1 + n_docs) / (1 + df(t))) + 1, strictly positive.
struct IdfWeights {
    std::vector<double> idf;  // dense, indexed by term id
    std::size_t n_docs = 0;
};

IdfWeights compute_idf(const std::vector<SparseVector>& matrix_rows, std::size_t vocab_size,
                       std::size_t n_docs);

// weight[t] = tf(t) * idf[t]; no normalization, sparsity pattern unchanged.
SparseVector transform_tfidf(const SparseVector& counts, const IdfWeights& idf);

struct DocumentTermMatrix {
    std::vector<SparseVector> rows;
    std::vector<Label> labels;  // parallel to rows
    std::size_t vocab_size = 0;
};

}  // namespace khobor
