// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include "khobor/pipeline.hpp"

#include "khobor/errors.hpp"
#include "khobor/preprocess.hpp"
#include "khobor/util.hpp"

namespace khobor {

TokenList prepare_tokens(const std::string& text, const FilterRules& rules) {
    return tokenize(clean_text(text, rules));
}

TrainOutcome run_training(const LabeledCorpus& corpus, const RunConfig& config) {
    CorpusSplit split = split_corpus(corpus, config.split);

    std::vector<TokenList> train_tokens;
    train_tokens.reserve(split.train.size());
    for (const Document& doc : split.train.documents) {
        train_tokens.push_back(prepare_tokens(doc.text, config.filter_rules));
    }

    ModelArtifact artifact;
    artifact.filter_rules = config.filter_rules;
    artifact.feature_type = config.feature_type;
    artifact.classifier_type = config.classifier_type;
    artifact.train_config = config.train;
    artifact.vocabulary = build_vocabulary(train_tokens);

    DocumentTermMatrix matrix;
    matrix.vocab_size = artifact.vocabulary.size();
    matrix.labels.reserve(split.train.size());
    matrix.rows.reserve(split.train.size());
    for (std::size_t i = 0; i < train_tokens.size(); ++i) {
        matrix.rows.push_back(vectorize_counts(train_tokens[i], artifact.vocabulary));
        matrix.labels.push_back(split.train.documents[i].label);
    }
    if (config.feature_type == FeatureType::Tfidf) {
        artifact.idf = compute_idf(matrix.rows, matrix.vocab_size, matrix.rows.size());
        for (SparseVector& row : matrix.rows) row = transform_tfidf(row, *artifact.idf);
    }

    if (config.classifier_type == ClassifierType::Mnb) {
        artifact.classifier = train_mnb(matrix, config.train);
    } else {
        artifact.classifier = train_svm(matrix, config.train);
    }

    artifact.provenance.seed = config.split.seed;
    artifact.provenance.corpus_fingerprint = corpus_fingerprint(corpus);
    artifact.provenance.created_at = iso8601_now();

    TrainOutcome outcome;
    outcome.report = evaluate_on(artifact, split.test);
    outcome.artifact = std::move(artifact);
    outcome.test_split = std::move(split.test);
    return outcome;
}

SparseVector vectorize_document(const ModelArtifact& artifact, const std::string& text) {
    const TokenList tokens = prepare_tokens(text, artifact.filter_rules);
    SparseVector counts = vectorize_counts(tokens, artifact.vocabulary);
    if (artifact.feature_type == FeatureType::Tfidf) {
        return transform_tfidf(counts, *artifact.idf);
    }
    return counts;
}

Prediction predict_document(const ModelArtifact& artifact, const std::string& text) {
    const SparseVector x = vectorize_document(artifact, text);
    if (artifact.classifier_type == ClassifierType::Mnb) {
        return predict_mnb(std::get<MnbModel>(artifact.classifier), x);
    }
    return predict_svm(std::get<SvmModel>(artifact.classifier), x);
}

std::vector<Prediction> predict_corpus(const ModelArtifact& artifact,
                                       const LabeledCorpus& corpus) {
    std::vector<SparseVector> rows;
    rows.reserve(corpus.size());
    for (const Document& doc : corpus.documents) {
        rows.push_back(vectorize_document(artifact, doc.text));
    }
    if (artifact.classifier_type == ClassifierType::Mnb) {
        return predict_batch(std::get<MnbModel>(artifact.classifier), rows);
    }
    return predict_batch(std::get<SvmModel>(artifact.classifier), rows);
}

EvaluationReport evaluate_on(const ModelArtifact& artifact, const LabeledCorpus& corpus) {
    const std::vector<Prediction> predictions = predict_corpus(artifact, corpus);
    std::vector<Label> gold, predicted;
    gold.reserve(corpus.size());
    predicted.reserve(corpus.size());
    for (const Document& doc : corpus.documents) gold.push_back(doc.label);
    for (const Prediction& p : predictions) predicted.push_back(p.label);
    return report(confusion(gold, predicted));
}

}  // namespace khobor
