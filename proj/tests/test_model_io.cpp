// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include <unistd.h>

#include "khobor/errors.hpp"
#include "khobor/model_io.hpp"
#include "khobor/pipeline.hpp"
#include "khobor/rng.hpp"
#include "khobor/synth.hpp"

using namespace khobor;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() /
           ("khobor_test_" + std::to_string(::getpid()) + "_" + name);
}

ModelArtifact trained_artifact(ClassifierType classifier, FeatureType features) {
    SynthConfig synth;
    synth.n_docs = 120;
    synth.vocab_size = 60;
    synth.separation = 0.7;
    synth.seed = 5;
    RunConfig config;
    config.split = {0.3, 5};
    config.classifier_type = classifier;
    config.feature_type = features;
    config.train.seed = 5;
    return run_training(gen_synth(synth), config).artifact;
}

std::string random_synth_text(std::mt19937_64& rng) {
    std::string text;
    const std::size_t len = 1 + draw_below(rng, 40);
    for (std::size_t k = 0; k < len; ++k) {
        if (k > 0) text.push_back(' ');
        text += synth_token(draw_below(rng, 90));  // includes OOV ids
    }
    return text;
}

}  // namespace

TEST_CASE("artifacts round-trip through disk with identical predictions") {
    for (const auto classifier : {ClassifierType::Mnb, ClassifierType::Svm}) {
        for (const auto features : {FeatureType::Count, FeatureType::Tfidf}) {
            const ModelArtifact artifact = trained_artifact(classifier, features);
            const auto path = temp_path("roundtrip.json");
            save_model(artifact, path.string());
            const ModelArtifact loaded = load_model(path.string());
            std::filesystem::remove(path);

            CHECK(loaded.feature_type == artifact.feature_type);
            CHECK(loaded.classifier_type == artifact.classifier_type);
            CHECK(loaded.vocabulary.id_to_term == artifact.vocabulary.id_to_term);
            CHECK(loaded.provenance.corpus_fingerprint ==
                  artifact.provenance.corpus_fingerprint);

            std::mt19937_64 rng(99);
            for (int i = 0; i < 100; ++i) {
                const std::string text = random_synth_text(rng);
                const Prediction before = predict_document(artifact, text);
                const Prediction after = predict_document(loaded, text);
                CHECK(before.label == after.label);
                CHECK(before.score == after.score);  // bit-exact reals
            }
        }
    }
}

TEST_CASE("dual variables are omitted unless requested") {
    const ModelArtifact artifact = trained_artifact(ClassifierType::Svm, FeatureType::Tfidf);
    const nlohmann::json lean = artifact_to_json(artifact, false);
    CHECK(!lean["pipeline"]["classifier"].contains("dual_vars"));
    const nlohmann::json full = artifact_to_json(artifact, true);
    REQUIRE(full["pipeline"]["classifier"].contains("dual_vars"));
    CHECK(full["pipeline"]["classifier"]["dual_vars"].size() ==
          std::get<SvmModel>(artifact.classifier).dual_vars.size());

    // a lean artifact still predicts
    const ModelArtifact loaded = artifact_from_json(lean);
    CHECK(std::get<SvmModel>(loaded.classifier).dual_vars.empty());
}

TEST_CASE("format_version mismatch is rejected before anything else") {
    const ModelArtifact artifact = trained_artifact(ClassifierType::Mnb, FeatureType::Count);
    nlohmann::json doc = artifact_to_json(artifact);
    doc["format_version"] = 999;
    CHECK_THROWS_AS(artifact_from_json(doc), VersionMismatch);
}

TEST_CASE("invariant violations surface as CorruptArtifact") {
    const ModelArtifact artifact = trained_artifact(ClassifierType::Mnb, FeatureType::Tfidf);
    const nlohmann::json good = artifact_to_json(artifact);

    SUBCASE("MNB distribution must sum to one") {
        nlohmann::json doc = good;
        doc["pipeline"]["classifier"]["feature_log_prob"][0][0] = -0.01;
        CHECK_THROWS_AS(artifact_from_json(doc), CorruptArtifact);
    }
    SUBCASE("vocabulary ids must be dense") {
        nlohmann::json doc = good;
        doc["pipeline"]["vocabulary"][artifact.vocabulary.id_to_term[0]] = 100000;
        CHECK_THROWS_AS(artifact_from_json(doc), CorruptArtifact);
    }
    SUBCASE("idf must stay positive") {
        nlohmann::json doc = good;
        doc["pipeline"]["idf"]["values"][0] = 0.0;
        CHECK_THROWS_AS(artifact_from_json(doc), CorruptArtifact);
    }
    SUBCASE("tfidf artifacts need idf") {
        nlohmann::json doc = good;
        doc["pipeline"].erase("idf");
        CHECK_THROWS_AS(artifact_from_json(doc), CorruptArtifact);
    }
    SUBCASE("unknown idf variant") {
        nlohmann::json doc = good;
        doc["pipeline"]["idf_variant"] = "plain";
        CHECK_THROWS_AS(artifact_from_json(doc), CorruptArtifact);
    }
    SUBCASE("missing fields") {
        nlohmann::json doc = good;
        doc["pipeline"].erase("classifier");
        CHECK_THROWS_AS(artifact_from_json(doc), CorruptArtifact);
    }
    SUBCASE("the unmodified artifact still loads") {
        CHECK_NOTHROW(artifact_from_json(good));
    }
}

TEST_CASE("svm artifacts validate weight length and dual feasibility") {
    const ModelArtifact artifact = trained_artifact(ClassifierType::Svm, FeatureType::Count);
    const nlohmann::json good = artifact_to_json(artifact, true);

    SUBCASE("weights must be V+1 long") {
        nlohmann::json doc = good;
        doc["pipeline"]["classifier"]["weights"].erase(0);
        CHECK_THROWS_AS(artifact_from_json(doc), CorruptArtifact);
    }
    SUBCASE("dual variables must lie in [0, C]") {
        nlohmann::json doc = good;
        doc["pipeline"]["classifier"]["dual_vars"][0] =
            std::get<SvmModel>(artifact.classifier).c_param + 1.0;
        CHECK_THROWS_AS(artifact_from_json(doc), CorruptArtifact);
    }
}

TEST_CASE("corpus fingerprint reacts to any document change") {
    LabeledCorpus corpus;
    corpus.documents.push_back({"a", "খবর", Label::Real});
    corpus.documents.push_back({"b", "অন্য খবর", Label::Fake});
    const std::string base = corpus_fingerprint(corpus);

    LabeledCorpus label_flip = corpus;
    label_flip.documents[1].label = Label::Real;
    CHECK(corpus_fingerprint(label_flip) != base);

    LabeledCorpus text_edit = corpus;
    text_edit.documents[0].text += " আরও";
    CHECK(corpus_fingerprint(text_edit) != base);

    CHECK(corpus_fingerprint(corpus) == base);  // stable
}
