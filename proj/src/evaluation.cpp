// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include "khobor/evaluation.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "khobor/errors.hpp"
#include "khobor/util.hpp"

namespace khobor {

namespace {

constexpr std::size_t kReal = static_cast<std::size_t>(Label::Real);
constexpr std::size_t kFake = static_cast<std::size_t>(Label::Fake);

double ratio_or_zero(std::uint64_t num, std::uint64_t denom) {
    return denom == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(denom);
}

nlohmann::json metrics_to_json(const ClassMetrics& m) {
    return {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
}

ClassMetrics metrics_from_json(const nlohmann::json& j) {
    return {j.at("precision").get<double>(), j.at("recall").get<double>(),
            j.at("f1").get<double>()};
}

}  // namespace

std::uint64_t ConfusionMatrix::total() const {
    return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t actual) const {
    return counts[actual][0] + counts[actual][1];
}

std::uint64_t ConfusionMatrix::col_sum(std::size_t predicted) const {
    return counts[0][predicted] + counts[1][predicted];
}

ConfusionMatrix confusion(const std::vector<Label>& gold, const std::vector<Label>& predicted) {
    if (gold.size() != predicted.size()) throw LengthMismatch(gold.size(), predicted.size());
    if (gold.empty()) throw EmptyInput("confusion requires at least one observation");
    ConfusionMatrix matrix;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        matrix.counts[static_cast<std::size_t>(gold[i])][static_cast<std::size_t>(predicted[i])]++;
    }
    return matrix;
}

EvaluationReport report(const ConfusionMatrix& matrix) {
    if (matrix.total() == 0) throw EmptyMatrix();
    EvaluationReport rep;
    rep.matrix = matrix;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        ClassMetrics& m = rep.per_class[c];
        m.precision = ratio_or_zero(matrix.counts[c][c], matrix.col_sum(c));
        m.recall = ratio_or_zero(matrix.counts[c][c], matrix.row_sum(c));
        const double pr = m.precision + m.recall;
        m.f1 = pr > 0.0 ? 2.0 * m.precision * m.recall / pr : 0.0;
    }
    rep.macro.precision = (rep.per_class[0].precision + rep.per_class[1].precision) / 2.0;
    rep.macro.recall = (rep.per_class[0].recall + rep.per_class[1].recall) / 2.0;
    rep.macro.f1 = (rep.per_class[0].f1 + rep.per_class[1].f1) / 2.0;
    rep.accuracy = static_cast<double>(matrix.counts[0][0] + matrix.counts[1][1]) /
                   static_cast<double>(matrix.total());
    return rep;
}

std::string render_report(const EvaluationReport& rep, ReportFormat format) {
    if (format == ReportFormat::Json) {
        nlohmann::json j{
            {"accuracy", rep.accuracy},
            {"matrix",
             {{rep.matrix.counts[0][0], rep.matrix.counts[0][1]},
              {rep.matrix.counts[1][0], rep.matrix.counts[1][1]}}},
            {"classes",
             {{"real", metrics_to_json(rep.per_class[kReal])},
              {"fake", metrics_to_json(rep.per_class[kFake])}}},
            {"macro", metrics_to_json(rep.macro)},
            {"n", rep.matrix.total()},
        };
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << std::left << std::setw(6) << "" << std::right << std::setw(9) << "precision"
        << std::setw(9) << "recall" << std::setw(10) << "f1-score" << '\n';
    const auto row = [&](const char* name, const ClassMetrics& m) {
        out << std::left << std::setw(6) << name << std::right << std::setw(9)
            << format_fixed2(m.precision) << std::setw(9) << format_fixed2(m.recall)
            << std::setw(10) << format_fixed2(m.f1) << '\n';
    };
    row("Real", rep.per_class[kReal]);
    row("Fake", rep.per_class[kFake]);
    row("avg", rep.macro);
    out << "\naccuracy: " << format_fixed2(100.0 * rep.accuracy) << "%  (n=" << rep.matrix.total()
        << ")\n";
    return out.str();
}

EvaluationReport report_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid report JSON: ") + e.what());
    }
    try {
        EvaluationReport rep;
        rep.accuracy = j.at("accuracy").get<double>();
        for (std::size_t a = 0; a < kNumClasses; ++a)
            for (std::size_t p = 0; p < kNumClasses; ++p)
                rep.matrix.counts[a][p] = j.at("matrix").at(a).at(p).get<std::uint64_t>();
        rep.per_class[kReal] = metrics_from_json(j.at("classes").at("real"));
        rep.per_class[kFake] = metrics_from_json(j.at("classes").at("fake"));
        rep.macro = metrics_from_json(j.at("macro"));
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid report JSON: ") + e.what());
    }
}

}  // namespace khobor
