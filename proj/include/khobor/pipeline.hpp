// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <string>
#include <vector>

#include "khobor/classifiers.hpp"
#include "khobor/corpus.hpp"
#include "khobor/evaluation.hpp"
#include "khobor/model_io.hpp"

namespace khobor {

struct RunConfig {
    SplitConfig split;
    FeatureType feature_type = FeatureType::Tfidf;
    ClassifierType classifier_type = ClassifierType::Svm;
    TrainConfig train;
    FilterRules filter_rules;
};

struct TrainOutcome {
    ModelArtifact artifact;
    EvaluationReport report;  // on the held-out split
    LabeledCorpus test_split;
};

// clean/tokenize -> split -> fit vocabulary (+idf) on train -> train
// classifier -> evaluate on the held-out split. Vocabulary and idf never
// see test documents.
TrainOutcome run_training(const LabeledCorpus& corpus, const RunConfig& config);

TokenList prepare_tokens(const std::string& text, const FilterRules& rules);

// Applies the artifact's recorded preprocessing and feature transform.
SparseVector vectorize_document(const ModelArtifact& artifact, const std::string& text);
Prediction predict_document(const ModelArtifact& artifact, const std::string& text);
std::vector<Prediction> predict_corpus(const ModelArtifact& artifact, const LabeledCorpus& corpus);

EvaluationReport evaluate_on(const ModelArtifact& artifact, const LabeledCorpus& corpus);

}  // namespace khobor
