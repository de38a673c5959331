// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "khobor/classifiers.hpp"
#include "khobor/corpus.hpp"
#include "khobor/features.hpp"
#include "khobor/preprocess.hpp"

namespace khobor {

enum class FeatureType { Count, Tfidf };
enum class ClassifierType { Mnb, Svm };

const char* feature_type_name(FeatureType type);
const char* classifier_type_name(ClassifierType type);
FeatureType parse_feature_type(std::string_view name);
ClassifierType parse_classifier_type(std::string_view name);

inline constexpr int kArtifactFormatVersion = 1;
inline constexpr const char* kIdfVariantSmoothPlusOne = "smooth_plus_one";

struct Provenance {
    std::uint64_t seed = 0;
    std::string corpus_fingerprint;
    std::string created_at;  // ISO-8601 UTC; the one non-deterministic field
};

/// A trained pipeline in one versioned file: loading an artifact is all
/// that prediction ever needs.
struct ModelArtifact {
    int format_version = kArtifactFormatVersion;
    FilterRules filter_rules;
    FeatureType feature_type = FeatureType::Tfidf;
    std::string idf_variant = kIdfVariantSmoothPlusOne;
    Vocabulary vocabulary;
    std::optional<IdfWeights> idf;  // present iff feature_type == Tfidf
    ClassifierType classifier_type = ClassifierType::Svm;
    std::variant<MnbModel, SvmModel> classifier;
    TrainConfig train_config;
    Provenance provenance;
};

// FNV-1a over ids, texts and labels, hex encoded.
std::string corpus_fingerprint(const LabeledCorpus& corpus);

// dual_vars are dead weight for prediction and stay out of the file unless
// asked for.
nlohmann::json artifact_to_json(const ModelArtifact& artifact, bool include_dual_vars = false);

// Validates format_version first (VersionMismatch), then every structural
// invariant (CorruptArtifact): dense vocabulary bijection, parameter array
// lengths, MNB distributions summing to 1 within 1e-9, SVM dual
// feasibility, positive idf.
ModelArtifact artifact_from_json(const nlohmann::json& doc);

void save_model(const ModelArtifact& artifact, const std::string& path,
                bool include_dual_vars = false);
ModelArtifact load_model(const std::string& path);

}  // namespace khobor
