// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "khobor/corpus.hpp"
#include "khobor/features.hpp"

namespace khobor {

struct TrainConfig {
    double alpha = 1.0;           // MNB Laplace smoothing, > 0
    double c_param = 1.0;         // SVM box constraint, > 0
    double tol = 1e-4;            // SVM stop: max projected-gradient violation per epoch
    std::size_t max_epochs = 1000;
    std::uint64_t seed = 0;       // SVM coordinate shuffling
};

struct Prediction {
    Label label = Label::Real;
    double score = 0.0;  // MNB: winning minus losing log-posterior (>= 0);
                         // SVM: signed decision value (> 0 means Fake)
};

/// Multinomial naive Bayes in log space. Class order is [Real, Fake].
struct MnbModel {
    std::array<double, kNumClasses> class_log_prior{};
    std::array<std::vector<double>, kNumClasses> feature_log_prob;  // dense over V per class
    double alpha = 1.0;
    std::size_t vocab_size = 0;
};

// class_log_prior[c] = ln(N_c / N);
// feature_log_prob[c][t] = ln((count(t,c) + alpha) / (total_count(c) + alpha * V)).
// Weights may be fractional (tf-idf rows train the same way as counts).
MnbModel train_mnb(const DocumentTermMatrix& matrix, const TrainConfig& config);

// argmax of class_log_prior[c] + sum_t x[t] * feature_log_prob[c][t].
// Log-posterior margins below 1e-12 count as ties and resolve to Real;
// empty vectors fall back to the prior argmax.
Prediction predict_mnb(const MnbModel& model, const SparseVector& x);

/// Linear SVM trained in the dual. The bias rides as an implicit constant-1
/// feature, so weights has V+1 entries with the bias weight last.
struct SvmModel {
    std::vector<double> weights;    // length V+1
    std::vector<double> dual_vars;  // one per training row, in [0, C]
    double c_param = 1.0;
    bool converged = false;
    double final_gap = 0.0;  // duality gap at termination
};

// Dual coordinate descent for the L2-regularized L1-loss (hinge) linear
// SVM: maximize sum(alpha) - 0.5 * ||sum alpha_i y_i x^_i||^2 subject to
// 0 <= alpha_i <= C, with y = +1 for Fake and -1 for Real and x^ the
// bias-augmented row. Coordinates are visited in a fresh seeded random
// permutation each epoch; stops when the largest projected-gradient
// violation of an epoch drops below tol, or at max_epochs with
// converged = false.
SvmModel train_svm(const DocumentTermMatrix& matrix, const TrainConfig& config);

// score = <weights[0..V), x> + weights[V]; Fake iff score > 0
// (score == 0 maps to Real).
Prediction predict_svm(const SvmModel& model, const SparseVector& x);

// Elementwise prediction; element errors are rethrown with the row index
// attached.
std::vector<Prediction> predict_batch(const MnbModel& model, const std::vector<SparseVector>& rows);
std::vector<Prediction> predict_batch(const SvmModel& model, const std::vector<SparseVector>& rows);

}  // namespace khobor
