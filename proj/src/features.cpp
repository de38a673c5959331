// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include "khobor/features.hpp"

#include <algorithm>
#include <cmath>

#include "khobor/errors.hpp"

namespace khobor {

Vocabulary build_vocabulary(const std::vector<TokenList>& train_docs) {
    Vocabulary vocab;
    for (const TokenList& doc : train_docs) {
        for (const std::string& token : doc) {
            if (vocab.term_to_id.emplace(token, static_cast<TermId>(vocab.id_to_term.size()))
                    .second) {
                vocab.id_to_term.push_back(token);
            }
        }
    }
    if (vocab.id_to_term.empty()) throw EmptyTrainingCorpus();
    return vocab;
}

SparseVector vectorize_counts(const TokenList& doc, const Vocabulary& vocab) {
    std::unordered_map<TermId, double> counts;
    for (const std::string& token : doc) {
        if (auto id = vocab.find(token)) counts[*id] += 1.0;
    }
    SparseVector vec;
    vec.entries.reserve(counts.size());
    for (const auto& [term, weight] : counts) vec.entries.push_back({term, weight});
    std::sort(vec.entries.begin(), vec.entries.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.term < b.term; });
    return vec;
}

IdfWeights compute_idf(const std::vector<SparseVector>& matrix_rows, std::size_t vocab_size,
                       std::size_t n_docs) {
    if (n_docs < 1) throw InputError("compute_idf requires n_docs >= 1");
    std::vector<std::size_t> df(vocab_size, 0);
    for (const SparseVector& row : matrix_rows) {
        for (const SparseEntry& entry : row.entries) {
            if (entry.term >= vocab_size) throw TermIdOutOfRange(entry.term, vocab_size);
            df[entry.term]++;
        }
    }
    IdfWeights weights;
    weights.n_docs = n_docs;
    weights.idf.resize(vocab_size);
    const double n_plus_one = 1.0 + static_cast<double>(n_docs);
    for (std::size_t t = 0; t < vocab_size; ++t) {
        weights.idf[t] = std::log(n_plus_one / (1.0 + static_cast<double>(df[t]))) + 1.0;
    }
    return weights;
}

SparseVector transform_tfidf(const SparseVector& counts, const IdfWeights& idf) {
    SparseVector out;
    out.entries.reserve(counts.entries.size());
    for (const SparseEntry& entry : counts.entries) {
        if (entry.term >= idf.idf.size()) throw TermIdOutOfRange(entry.term, idf.idf.size());
        out.entries.push_back({entry.term, entry.weight * idf.idf[entry.term]});
    }
    return out;
}

}  // namespace khobor
