// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include <doctest.h>

#include <cmath>
#include <random>

#include "khobor/errors.hpp"
#include "khobor/features.hpp"
#include "khobor/rng.hpp"

#include "oracles.hpp"

using namespace khobor;

namespace {

// random token lists over a tiny closed alphabet
std::vector<TokenList> random_docs(std::mt19937_64& rng, std::size_t max_docs,
                                   std::size_t max_len, std::size_t alphabet) {
    static const std::vector<std::string> kAlphabet = {"ক", "খ", "গ", "ঘ", "ঙ",
                                                       "চ", "ছ", "জ", "ঝ", "ঞ"};
    const std::size_t n = 1 + draw_below(rng, max_docs);
    std::vector<TokenList> docs(n);
    for (auto& doc : docs) {
        const std::size_t len = draw_below(rng, max_len + 1);
        for (std::size_t k = 0; k < len; ++k) {
            doc.push_back(kAlphabet[draw_below(rng, alphabet)]);
        }
    }
    return docs;
}

}  // namespace

TEST_CASE("build_vocabulary assigns ids in first-occurrence order") {
    const Vocabulary vocab = build_vocabulary({{"ক", "খ", "ক"}, {"গ"}});
    REQUIRE(vocab.size() == 3);
    CHECK(vocab.find("ক") == TermId{0});
    CHECK(vocab.find("খ") == TermId{1});
    CHECK(vocab.find("গ") == TermId{2});
    CHECK(vocab.id_to_term == std::vector<std::string>{"ক", "খ", "গ"});
}

TEST_CASE("build_vocabulary edge cases") {
    const Vocabulary single = build_vocabulary({{"ক"}});
    CHECK(single.size() == 1);
    CHECK(single.find("ক") == TermId{0});

    CHECK_THROWS_AS(build_vocabulary({{}, {}}), EmptyTrainingCorpus);
    CHECK_THROWS_AS(build_vocabulary({}), EmptyTrainingCorpus);
}

TEST_CASE("vectorize_counts counts in-vocabulary tokens and drops the rest") {
    const Vocabulary vocab = build_vocabulary({{"ক", "খ"}});
    const SparseVector counts = vectorize_counts({"ক", "ক", "খ"}, vocab);
    CHECK(counts.entries == std::vector<SparseEntry>{{0, 2.0}, {1, 1.0}});

    CHECK(vectorize_counts({"ঘ"}, vocab).entries.empty());  // OOV only
    CHECK(vectorize_counts({}, vocab).entries.empty());
}

TEST_CASE("compute_idf matches the smoothed formula") {
    // two documents; term 0 in both, term 1 in one
    const std::vector<SparseVector> rows = {
        {{{0, 1.0}, {1, 2.0}}},
        {{{0, 3.0}}},
    };
    const IdfWeights idf = compute_idf(rows, 2, 2);
    REQUIRE(idf.idf.size() == 2);
    CHECK(idf.idf[0] == doctest::Approx(1.0).epsilon(1e-12));                    // ln(3/3)+1
    CHECK(idf.idf[1] == doctest::Approx(std::log(1.5) + 1.0).epsilon(1e-12));    // ln(3/2)+1
    CHECK(idf.n_docs == 2);

    const IdfWeights one_doc = compute_idf({{{{0, 1.0}}}}, 1, 1);
    CHECK(one_doc.idf[0] == doctest::Approx(1.0).epsilon(1e-12));  // ln(2/2)+1

    // a term the rows never mention gets the df = 0 weight
    const IdfWeights unseen = compute_idf(rows, 3, 2);
    CHECK(unseen.idf[2] == doctest::Approx(std::log(3.0) + 1.0).epsilon(1e-12));
}

TEST_CASE("transform_tfidf multiplies counts by idf") {
    const IdfWeights idf{{1.0, std::log(1.5) + 1.0}, 2};
    const SparseVector counts{{{0, 2.0}, {1, 1.0}}};
    const SparseVector weighted = transform_tfidf(counts, idf);
    REQUIRE(weighted.nnz() == 2);
    CHECK(weighted.entries[0].weight == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(weighted.entries[1].weight ==
          doctest::Approx(std::log(1.5) + 1.0).epsilon(1e-12));

    CHECK(transform_tfidf({}, idf).entries.empty());

    const IdfWeights unit{{1.0}, 1};
    const SparseVector identity = transform_tfidf({{{0, 1.0}}}, unit);
    CHECK(identity.entries == std::vector<SparseEntry>{{0, 1.0}});

    CHECK_THROWS_AS(transform_tfidf({{{5, 1.0}}}, unit), TermIdOutOfRange);
}

TEST_CASE("count vectors conserve the number of in-vocabulary tokens") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto docs = random_docs(rng, 6, 30, 5);
        std::vector<TokenList> nonempty;
        for (const auto& d : docs)
            if (!d.empty()) nonempty.push_back(d);
        if (nonempty.empty()) continue;
        const Vocabulary vocab = build_vocabulary(nonempty);

        // probe with fresh docs over a wider alphabet so OOV happens
        const auto probes = random_docs(rng, 4, 30, 10);
        for (const auto& probe : probes) {
            const SparseVector counts = vectorize_counts(probe, vocab);
            double total = 0.0;
            std::size_t in_vocab = 0;
            for (const auto& e : counts.entries) total += e.weight;
            for (const auto& token : probe)
                if (vocab.find(token)) ++in_vocab;
            CHECK(total == doctest::Approx(static_cast<double>(in_vocab)));
            for (std::size_t k = 1; k < counts.entries.size(); ++k) {
                CHECK(counts.entries[k - 1].term < counts.entries[k].term);
            }
        }
    }
}

TEST_CASE("tf-idf keeps sparsity and positivity; rarer terms weigh more") {
    std::mt19937_64 rng(32);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto docs = random_docs(rng, 6, 20, 8);
        std::vector<TokenList> nonempty;
        for (const auto& d : docs)
            if (!d.empty()) nonempty.push_back(d);
        if (nonempty.empty()) continue;
        const Vocabulary vocab = build_vocabulary(nonempty);
        std::vector<SparseVector> rows;
        for (const auto& d : nonempty) rows.push_back(vectorize_counts(d, vocab));
        const IdfWeights idf = compute_idf(rows, vocab.size(), rows.size());

        std::vector<std::size_t> df(vocab.size(), 0);
        for (const auto& row : rows)
            for (const auto& e : row.entries) df[e.term]++;
        for (std::size_t a = 0; a < vocab.size(); ++a) {
            CHECK(idf.idf[a] > 0.0);
            for (std::size_t b = 0; b < vocab.size(); ++b) {
                if (df[a] < df[b]) CHECK(idf.idf[a] > idf.idf[b]);
            }
        }

        for (const auto& row : rows) {
            const SparseVector weighted = transform_tfidf(row, idf);
            REQUIRE(weighted.nnz() == row.nnz());
            for (std::size_t k = 0; k < weighted.entries.size(); ++k) {
                CHECK(weighted.entries[k].term == row.entries[k].term);
                CHECK(weighted.entries[k].weight > 0.0);
            }
        }
    }
}

TEST_CASE("pipeline tf-idf agrees with the brute-force recomputation") {
    std::mt19937_64 rng(33);
    for (int iter = 0; iter < 400; ++iter) {
        auto docs = random_docs(rng, 5, 12, 10);
        bool any_token = false;
        for (const auto& d : docs) any_token = any_token || !d.empty();
        if (!any_token) continue;

        const Vocabulary vocab = build_vocabulary(docs);
        REQUIRE(vocab.size() <= 10);
        std::vector<SparseVector> rows;
        for (const auto& d : docs) rows.push_back(vectorize_counts(d, vocab));
        const IdfWeights idf = compute_idf(rows, vocab.size(), rows.size());

        const auto expected = oracle::tfidf_by_hand(docs);
        for (std::size_t i = 0; i < docs.size(); ++i) {
            const SparseVector weighted = transform_tfidf(rows[i], idf);
            REQUIRE(weighted.nnz() == expected[i].size());
            for (const auto& entry : weighted.entries) {
                const std::string& term = vocab.id_to_term[entry.term];
                const auto it = expected[i].find(term);
                REQUIRE(it != expected[i].end());
                CHECK(entry.weight == doctest::Approx(it->second).epsilon(1e-12));
            }
        }
    }
}
