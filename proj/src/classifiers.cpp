// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include "khobor/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "khobor/errors.hpp"
#include "khobor/rng.hpp"

namespace khobor {

namespace {

constexpr std::size_t kReal = static_cast<std::size_t>(Label::Real);
constexpr std::size_t kFake = static_cast<std::size_t>(Label::Fake);

void require_both_classes(const DocumentTermMatrix& matrix) {
    if (matrix.rows.empty() || matrix.rows.size() != matrix.labels.size())
        throw TrainError("training matrix is empty or rows/labels disagree");
    bool has_real = false, has_fake = false;
    for (Label label : matrix.labels) (label == Label::Real ? has_real : has_fake) = true;
    if (!has_real || !has_fake) throw SingleClassCorpus();
}

void require_ids_below(const SparseVector& row, std::size_t limit) {
    for (const SparseEntry& entry : row.entries) {
        if (entry.term >= limit) throw TermIdOutOfRange(entry.term, limit);
    }
}

template <typename Predict>
std::vector<Prediction> predict_rows(const std::vector<SparseVector>& rows, Predict&& predict) {
    std::vector<Prediction> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
            out.push_back(predict(rows[i]));
        } catch (const TermIdOutOfRange& e) {
            throw TermIdOutOfRange("row " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

MnbModel train_mnb(const DocumentTermMatrix& matrix, const TrainConfig& config) {
    if (!(config.alpha > 0.0)) throw NonPositiveAlpha(config.alpha);
    require_both_classes(matrix);

    const std::size_t v = matrix.vocab_size;
    MnbModel model;
    model.alpha = config.alpha;
    model.vocab_size = v;

    std::array<std::size_t, kNumClasses> doc_counts{};
    std::array<std::vector<double>, kNumClasses> term_weight;
    std::array<double, kNumClasses> total_weight{};
    term_weight[kReal].assign(v, 0.0);
    term_weight[kFake].assign(v, 0.0);

    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        require_ids_below(matrix.rows[i], v);
        const auto c = static_cast<std::size_t>(matrix.labels[i]);
        doc_counts[c]++;
        for (const SparseEntry& entry : matrix.rows[i].entries) {
            term_weight[c][entry.term] += entry.weight;
            total_weight[c] += entry.weight;
        }
    }

    const auto n_docs = static_cast<double>(matrix.rows.size());
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        model.class_log_prior[c] = std::log(static_cast<double>(doc_counts[c]) / n_docs);
        model.feature_log_prob[c].resize(v);
        const double denom = total_weight[c] + config.alpha * static_cast<double>(v);
        for (std::size_t t = 0; t < v; ++t) {
            model.feature_log_prob[c][t] = std::log((term_weight[c][t] + config.alpha) / denom);
        }
    }
    return model;
}

Prediction predict_mnb(const MnbModel& model, const SparseVector& x) {
    std::array<double, kNumClasses> joint = model.class_log_prior;
    for (const SparseEntry& entry : x.entries) {
        if (entry.term >= model.vocab_size) throw TermIdOutOfRange(entry.term, model.vocab_size);
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            joint[c] += entry.weight * model.feature_log_prob[c][entry.term];
        }
    }
    // log-posterior differences below 1e-12 are numerically a tie; ties
    // break toward Real
    const Label label = joint[kFake] - joint[kReal] > 1e-12 ? Label::Fake : Label::Real;
    const auto w = static_cast<std::size_t>(label);
    return {label, std::max(joint[w] - joint[1 - w], 0.0)};
}

SvmModel train_svm(const DocumentTermMatrix& matrix, const TrainConfig& config) {
    if (!(config.c_param > 0.0)) throw TrainError("c_param must be > 0");
    require_both_classes(matrix);

    const std::size_t n = matrix.rows.size();
    const std::size_t v = matrix.vocab_size;
    const double c_bound = config.c_param;

    std::vector<double> y(n);
    std::vector<double> q_diag(n);  // <x^_i, x^_i>, bias feature included
    for (std::size_t i = 0; i < n; ++i) {
        require_ids_below(matrix.rows[i], v);
        y[i] = matrix.labels[i] == Label::Fake ? 1.0 : -1.0;
        double sq = 1.0;
        for (const SparseEntry& e : matrix.rows[i].entries) sq += e.weight * e.weight;
        q_diag[i] = sq;
    }

    SvmModel model;
    model.c_param = c_bound;
    model.dual_vars.assign(n, 0.0);
    model.weights.assign(v + 1, 0.0);
    std::vector<double>& w = model.weights;
    std::vector<double>& alpha = model.dual_vars;

    const auto margin = [&](std::size_t i) {
        double dot = w[v];
        for (const SparseEntry& e : matrix.rows[i].entries) dot += w[e.term] * e.weight;
        return dot;
    };

    std::mt19937_64 rng(config.seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    for (std::size_t epoch = 0; epoch < config.max_epochs; ++epoch) {
        shuffle_inplace(order, rng);
        double max_violation = 0.0;
        for (std::size_t i : order) {
            const double g = y[i] * margin(i) - 1.0;
            if (!std::isfinite(g)) throw NoProgress();
            double pg = g;
            if (alpha[i] <= 0.0) {
                pg = std::min(g, 0.0);
            } else if (alpha[i] >= c_bound) {
                pg = std::max(g, 0.0);
            }
            max_violation = std::max(max_violation, std::abs(pg));
            if (std::abs(pg) > 1e-12) {
                const double next = std::clamp(alpha[i] - g / q_diag[i], 0.0, c_bound);
                const double delta = (next - alpha[i]) * y[i];
                alpha[i] = next;
                w[v] += delta;
                for (const SparseEntry& e : matrix.rows[i].entries) w[e.term] += delta * e.weight;
            }
        }
        if (max_violation < config.tol) {
            model.converged = true;
            break;
        }
    }

    // duality gap at termination: primal minus dual objective
    double w_sq = 0.0;
    for (double wt : w) w_sq += wt * wt;
    double hinge = 0.0, alpha_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        hinge += std::max(0.0, 1.0 - y[i] * margin(i));
        alpha_sum += alpha[i];
    }
    const double primal = 0.5 * w_sq + c_bound * hinge;
    const double dual = alpha_sum - 0.5 * w_sq;
    model.final_gap = primal - dual;
    if (!std::isfinite(model.final_gap)) throw NoProgress();
    return model;
}

Prediction predict_svm(const SvmModel& model, const SparseVector& x) {
    const std::size_t v = model.weights.size() - 1;
    double score = model.weights[v];
    for (const SparseEntry& entry : x.entries) {
        if (entry.term >= v) throw TermIdOutOfRange(entry.term, v);
        score += model.weights[entry.term] * entry.weight;
    }
    return {score > 0.0 ? Label::Fake : Label::Real, score};
}

std::vector<Prediction> predict_batch(const MnbModel& model,
                                      const std::vector<SparseVector>& rows) {
    return predict_rows(rows, [&](const SparseVector& x) { return predict_mnb(model, x); });
}

std::vector<Prediction> predict_batch(const SvmModel& model,
                                      const std::vector<SparseVector>& rows) {
    return predict_rows(rows, [&](const SparseVector& x) { return predict_svm(model, x); });
}

}  // namespace khobor
