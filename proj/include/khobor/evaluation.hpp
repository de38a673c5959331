// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "khobor/corpus.hpp"

namespace khobor {

/// 2x2 counts indexed [actual][predicted] in class order [Real, Fake].
struct ConfusionMatrix {
    std::array<std::array<std::uint64_t, kNumClasses>, kNumClasses> counts{};

    std::uint64_t total() const;
    std::uint64_t row_sum(std::size_t actual) const;
    std::uint64_t col_sum(std::size_t predicted) const;

    bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix confusion(const std::vector<Label>& gold, const std::vector<Label>& predicted);

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    bool operator==(const ClassMetrics&) const = default;
};

struct EvaluationReport {
    ConfusionMatrix matrix;
    std::array<ClassMetrics, kNumClasses> per_class;  // [real, fake]
    ClassMetrics macro;                               // unweighted mean of the two classes
    double accuracy = 0.0;

    bool operator==(const EvaluationReport&) const = default;
};

// precision(c) = counts[c][c] / column sum, recall(c) = counts[c][c] /
// row sum, f1 = 2pr/(p+r); every zero denominator yields a 0 metric.
// Throws EmptyMatrix when the matrix holds no observations.
EvaluationReport report(const ConfusionMatrix& matrix);

enum class ReportFormat { TextTable, Json };

// TextTable rounds half-up to two decimals (presentation only); Json
// carries full precision and is the authoritative form.
std::string render_report(const EvaluationReport& report, ReportFormat format);

// Inverse of the Json rendering.
EvaluationReport report_from_json(const std::string& json_text);

}  // namespace khobor
