// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include "khobor/model_io.hpp"

#include <cmath>
#include <fstream>

#include "khobor/errors.hpp"
#include "khobor/util.hpp"

namespace khobor {

namespace {

nlohmann::json filter_rules_to_json(const FilterRules& rules) {
    return {{"remove_special", rules.remove_special},
            {"remove_digits", rules.remove_digits},
            {"remove_english_letters", rules.remove_english_letters},
            {"remove_emoji", rules.remove_emoji}};
}

FilterRules filter_rules_from_json(const nlohmann::json& j) {
    FilterRules rules;
    rules.remove_special = j.at("remove_special").get<bool>();
    rules.remove_digits = j.at("remove_digits").get<bool>();
    rules.remove_english_letters = j.at("remove_english_letters").get<bool>();
    rules.remove_emoji = j.at("remove_emoji").get<bool>();
    return rules;
}

nlohmann::json train_config_to_json(const TrainConfig& config) {
    return {{"alpha", config.alpha},
            {"c_param", config.c_param},
            {"tol", config.tol},
            {"max_epochs", config.max_epochs},
            {"seed", config.seed}};
}

TrainConfig train_config_from_json(const nlohmann::json& j) {
    TrainConfig config;
    config.alpha = j.at("alpha").get<double>();
    config.c_param = j.at("c_param").get<double>();
    config.tol = j.at("tol").get<double>();
    config.max_epochs = j.at("max_epochs").get<std::size_t>();
    config.seed = j.at("seed").get<std::uint64_t>();
    return config;
}

Vocabulary vocabulary_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw CorruptArtifact("vocabulary must be an object");
    Vocabulary vocab;
    vocab.id_to_term.resize(j.size());
    std::vector<bool> seen(j.size(), false);
    for (const auto& [term, id_json] : j.items()) {
        if (!id_json.is_number_unsigned())
            throw CorruptArtifact("vocabulary id for \"" + term + "\" must be unsigned");
        const auto id = id_json.get<std::uint64_t>();
        if (id >= j.size() || seen[id])
            throw CorruptArtifact("vocabulary ids must form a dense bijection");
        seen[id] = true;
        vocab.id_to_term[id] = term;
        vocab.term_to_id.emplace(term, static_cast<TermId>(id));
    }
    return vocab;
}

void validate_mnb(const MnbModel& model) {
    double prior_sum = 0.0;
    for (double lp : model.class_log_prior) prior_sum += std::exp(lp);
    if (std::abs(prior_sum - 1.0) > 1e-9)
        throw CorruptArtifact("MNB class priors do not sum to 1");
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        if (model.feature_log_prob[c].size() != model.vocab_size)
            throw CorruptArtifact("MNB feature_log_prob length mismatch");
        double sum = 0.0;
        for (double lp : model.feature_log_prob[c]) sum += std::exp(lp);
        if (std::abs(sum - 1.0) > 1e-9)
            throw CorruptArtifact("MNB class-conditional distribution does not sum to 1");
    }
    if (!(model.alpha > 0.0)) throw CorruptArtifact("MNB alpha must be > 0");
}

nlohmann::json mnb_to_json(const MnbModel& model) {
    return {{"alpha", model.alpha},
            {"vocab_size", model.vocab_size},
            {"class_log_prior", model.class_log_prior},
            {"feature_log_prob", model.feature_log_prob}};
}

MnbModel mnb_from_json(const nlohmann::json& j) {
    MnbModel model;
    model.alpha = j.at("alpha").get<double>();
    model.vocab_size = j.at("vocab_size").get<std::size_t>();
    const auto& priors = j.at("class_log_prior");
    const auto& probs = j.at("feature_log_prob");
    if (priors.size() != kNumClasses || probs.size() != kNumClasses)
        throw CorruptArtifact("MNB parameter arrays must cover both classes");
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        model.class_log_prior[c] = priors.at(c).get<double>();
        model.feature_log_prob[c] = probs.at(c).get<std::vector<double>>();
    }
    return model;
}

nlohmann::json svm_to_json(const SvmModel& model, bool include_dual_vars) {
    nlohmann::json j{{"c_param", model.c_param},
                     {"weights", model.weights},
                     {"converged", model.converged},
                     {"final_gap", model.final_gap}};
    if (include_dual_vars) j["dual_vars"] = model.dual_vars;
    return j;
}

SvmModel svm_from_json(const nlohmann::json& j) {
    SvmModel model;
    model.c_param = j.at("c_param").get<double>();
    model.weights = j.at("weights").get<std::vector<double>>();
    model.converged = j.at("converged").get<bool>();
    model.final_gap = j.at("final_gap").get<double>();
    if (j.contains("dual_vars")) model.dual_vars = j["dual_vars"].get<std::vector<double>>();
    return model;
}

void validate_svm(const SvmModel& model, std::size_t vocab_size) {
    if (model.weights.size() != vocab_size + 1)
        throw CorruptArtifact("SVM weight vector must have vocabulary size + 1 entries");
    if (!(model.c_param > 0.0)) throw CorruptArtifact("SVM c_param must be > 0");
    for (double w : model.weights)
        if (!std::isfinite(w)) throw CorruptArtifact("SVM weights must be finite");
    for (double a : model.dual_vars) {
        if (!(a >= 0.0 && a <= model.c_param))
            throw CorruptArtifact("SVM dual variables must lie in [0, C]");
    }
}

}  // namespace

const char* feature_type_name(FeatureType type) {
    return type == FeatureType::Count ? "count" : "tfidf";
}

const char* classifier_type_name(ClassifierType type) {
    return type == ClassifierType::Mnb ? "mnb" : "svm";
}

FeatureType parse_feature_type(std::string_view name) {
    if (name == "count") return FeatureType::Count;
    if (name == "tfidf") return FeatureType::Tfidf;
    throw InputError("unknown feature type \"" + std::string(name) + "\"");
}

ClassifierType parse_classifier_type(std::string_view name) {
    if (name == "mnb") return ClassifierType::Mnb;
    if (name == "svm") return ClassifierType::Svm;
    throw InputError("unknown classifier type \"" + std::string(name) + "\"");
}

std::string corpus_fingerprint(const LabeledCorpus& corpus) {
    std::uint64_t state = fnv1a64("khobor.corpus.v1");
    for (const Document& doc : corpus.documents) {
        state = fnv1a64(doc.id, state);
        state = fnv1a64(std::string_view("\x1f", 1), state);
        state = fnv1a64(doc.text, state);
        state = fnv1a64(std::string_view("\x1f", 1), state);
        state = fnv1a64(label_name(doc.label), state);
        state = fnv1a64(std::string_view("\n", 1), state);
    }
    return to_hex(state);
}

nlohmann::json artifact_to_json(const ModelArtifact& artifact, bool include_dual_vars) {
    nlohmann::json vocab = nlohmann::json::object();
    for (const auto& [term, id] : artifact.vocabulary.term_to_id) vocab[term] = id;

    nlohmann::json pipeline{
        {"filter_rules", filter_rules_to_json(artifact.filter_rules)},
        {"feature_type", feature_type_name(artifact.feature_type)},
        {"idf_variant", artifact.idf_variant},
        {"vocabulary", std::move(vocab)},
        {"classifier_type", classifier_type_name(artifact.classifier_type)},
        {"train_config", train_config_to_json(artifact.train_config)},
    };
    if (artifact.idf) {
        pipeline["idf"] = {{"n_docs", artifact.idf->n_docs}, {"values", artifact.idf->idf}};
    }
    if (artifact.classifier_type == ClassifierType::Mnb) {
        pipeline["classifier"] = mnb_to_json(std::get<MnbModel>(artifact.classifier));
    } else {
        pipeline["classifier"] =
            svm_to_json(std::get<SvmModel>(artifact.classifier), include_dual_vars);
    }

    return {{"format_version", artifact.format_version},
            {"pipeline", std::move(pipeline)},
            {"provenance",
             {{"seed", artifact.provenance.seed},
              {"corpus_fingerprint", artifact.provenance.corpus_fingerprint},
              {"created_at", artifact.provenance.created_at}}}};
}

ModelArtifact artifact_from_json(const nlohmann::json& doc) {
    try {
        const int version = doc.at("format_version").get<int>();
        if (version != kArtifactFormatVersion)
            throw VersionMismatch(version, kArtifactFormatVersion);

        ModelArtifact artifact;
        artifact.format_version = version;
        const auto& pipeline = doc.at("pipeline");
        artifact.filter_rules = filter_rules_from_json(pipeline.at("filter_rules"));
        artifact.feature_type =
            parse_feature_type(pipeline.at("feature_type").get<std::string>());
        artifact.idf_variant = pipeline.at("idf_variant").get<std::string>();
        if (artifact.idf_variant != kIdfVariantSmoothPlusOne)
            throw CorruptArtifact("unknown idf_variant \"" + artifact.idf_variant + "\"");
        artifact.vocabulary = vocabulary_from_json(pipeline.at("vocabulary"));
        const std::size_t v = artifact.vocabulary.size();

        if (pipeline.contains("idf")) {
            IdfWeights idf;
            idf.n_docs = pipeline["idf"].at("n_docs").get<std::size_t>();
            idf.idf = pipeline["idf"].at("values").get<std::vector<double>>();
            if (idf.idf.size() != v) throw CorruptArtifact("idf length mismatch");
            for (double value : idf.idf)
                if (!(value > 0.0)) throw CorruptArtifact("idf values must be > 0");
            artifact.idf = std::move(idf);
        }
        if (artifact.feature_type == FeatureType::Tfidf && !artifact.idf)
            throw CorruptArtifact("tfidf artifact is missing idf weights");

        artifact.classifier_type =
            parse_classifier_type(pipeline.at("classifier_type").get<std::string>());
        if (artifact.classifier_type == ClassifierType::Mnb) {
            MnbModel model = mnb_from_json(pipeline.at("classifier"));
            if (model.vocab_size != v)
                throw CorruptArtifact("MNB vocab_size does not match the vocabulary");
            validate_mnb(model);
            artifact.classifier = std::move(model);
        } else {
            SvmModel model = svm_from_json(pipeline.at("classifier"));
            validate_svm(model, v);
            artifact.classifier = std::move(model);
        }
        artifact.train_config = train_config_from_json(pipeline.at("train_config"));

        const auto& provenance = doc.at("provenance");
        artifact.provenance.seed = provenance.at("seed").get<std::uint64_t>();
        artifact.provenance.corpus_fingerprint =
            provenance.at("corpus_fingerprint").get<std::string>();
        artifact.provenance.created_at = provenance.at("created_at").get<std::string>();
        return artifact;
    } catch (const nlohmann::json::exception& e) {
        throw CorruptArtifact(e.what());
    }
}

void save_model(const ModelArtifact& artifact, const std::string& path, bool include_dual_vars) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write model file \"" + path + "\"");
    out << artifact_to_json(artifact, include_dual_vars).dump(2) << '\n';
    if (!out) throw InputError("failed writing model file \"" + path + "\"");
}

ModelArtifact load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open model file \"" + path + "\"");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw CorruptArtifact(e.what());
    }
    return artifact_from_json(doc);
}

}  // namespace khobor
