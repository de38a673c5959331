// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "khobor/corpus.hpp"
#include "khobor/errors.hpp"
#include "khobor/evaluation.hpp"
#include "khobor/model_io.hpp"
#include "khobor/pipeline.hpp"
#include "khobor/synth.hpp"
#include "khobor/util.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitTrainError = 3;

struct TrainArgs {
    std::string input;
    std::string format = "jsonl";
    std::string classifier = "svm";
    std::string features = "tfidf";
    double test_fraction = 0.3;
    std::uint64_t seed = 0;
    khobor::TrainConfig train;
    khobor::FilterRules filter_rules;
    std::string model_out = "model.json";
    std::string report_out;
    std::string test_out;
    bool include_dual_vars = false;
};

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw khobor::InputError("cannot write \"" + path + "\"");
    out << content;
    if (!out) throw khobor::InputError("failed writing \"" + path + "\"");
}

int run_train(const TrainArgs& args) {
    const khobor::LabeledCorpus corpus =
        khobor::load_corpus(args.input, khobor::parse_corpus_format(args.format));

    khobor::RunConfig config;
    config.split = {args.test_fraction, args.seed};
    config.feature_type = khobor::parse_feature_type(args.features);
    config.classifier_type = khobor::parse_classifier_type(args.classifier);
    config.train = args.train;
    config.train.seed = args.seed;
    config.filter_rules = args.filter_rules;

    const khobor::TrainOutcome outcome = khobor::run_training(corpus, config);
    khobor::save_model(outcome.artifact, args.model_out, args.include_dual_vars);
    if (!args.report_out.empty()) {
        write_text_file(args.report_out,
                        khobor::render_report(outcome.report, khobor::ReportFormat::Json));
    }
    if (!args.test_out.empty()) khobor::write_jsonl(outcome.test_split, args.test_out);

    const khobor::CorpusStats stats = khobor::corpus_stats(corpus);
    std::cout << "documents: " << stats.total << "  (real "
              << khobor::format_fixed2(stats.real.percent) << "%, fake "
              << khobor::format_fixed2(stats.fake.percent) << "%)\n"
              << "train/test: " << (stats.total - outcome.test_split.size()) << "/"
              << outcome.test_split.size() << "  vocabulary: "
              << outcome.artifact.vocabulary.size() << "\n\n"
              << khobor::render_report(outcome.report, khobor::ReportFormat::TextTable);
    return kExitOk;
}

struct PredictArgs {
    std::string model;
    std::string text;
    bool has_text = false;
    std::string input;
};

void emit_prediction(const std::string& id, const khobor::Prediction& prediction) {
    const nlohmann::json line{{"id", id},
                              {"label", khobor::label_name(prediction.label)},
                              {"score", prediction.score}};
    std::cout << line.dump() << '\n';
}

int run_predict(const PredictArgs& args) {
    const khobor::ModelArtifact artifact = khobor::load_model(args.model);
    if (args.has_text) {
        emit_prediction("text-0", khobor::predict_document(artifact, args.text));
        return kExitOk;
    }

    std::ifstream in(args.input, std::ios::binary);
    if (!in) throw khobor::InputError("cannot open input file \"" + args.input + "\"");
    std::string line;
    std::size_t index = 0;
    for (; std::getline(in, line); ++index) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json record;
        try {
            record = nlohmann::json::parse(line);
            if (!record.is_object() || !record.contains("text") || !record["text"].is_string())
                throw khobor::InputError("missing string field \"text\"");
        } catch (const std::exception& e) {
            // keep going; batch prediction should survive a bad line
            std::cerr << "line " << (index + 1) << ": skipped (" << e.what() << ")\n";
            continue;
        }
        const std::string id = record.contains("id") && record["id"].is_string()
                                   ? record["id"].get<std::string>()
                                   : std::to_string(index);
        emit_prediction(id,
                        khobor::predict_document(artifact, record["text"].get<std::string>()));
    }
    return kExitOk;
}

struct EvaluateArgs {
    std::string model;
    std::string input;
    std::string format = "jsonl";
    std::string report_out;
};

int run_evaluate(const EvaluateArgs& args) {
    const khobor::ModelArtifact artifact = khobor::load_model(args.model);
    const khobor::LabeledCorpus corpus =
        khobor::load_corpus(args.input, khobor::parse_corpus_format(args.format));
    if (corpus.empty()) throw khobor::EmptyInput("input corpus is empty");

    const khobor::EvaluationReport rep = khobor::evaluate_on(artifact, corpus);
    std::cout << khobor::render_report(rep, khobor::ReportFormat::TextTable);
    if (!args.report_out.empty()) {
        write_text_file(args.report_out, khobor::render_report(rep, khobor::ReportFormat::Json));
    }
    return kExitOk;
}

int run_gen_synth(const khobor::SynthConfig& config, const std::string& out_path) {
    const khobor::LabeledCorpus corpus = khobor::gen_synth(config);
    khobor::write_jsonl(corpus, out_path);
    const khobor::CorpusStats stats = khobor::corpus_stats(corpus);
    std::cerr << "wrote " << stats.total << " documents to " << out_path << " (real "
              << khobor::format_fixed2(stats.real.percent) << "%, fake "
              << khobor::format_fixed2(stats.fake.percent) << "%)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bangla news authenticity classifier"};
    app.require_subcommand(1);
    app.set_config("--config");

    TrainArgs train_args;
    auto* train = app.add_subcommand("train", "Train a classifier and evaluate the held-out split");
    train->add_option("--input", train_args.input, "Labeled corpus file")->required();
    train->add_option("--format", train_args.format, "Corpus format: jsonl or csv")
        ->capture_default_str();
    train->add_option("--classifier", train_args.classifier, "Classifier: mnb or svm")
        ->capture_default_str();
    train->add_option("--features", train_args.features, "Features: count or tfidf")
        ->capture_default_str();
    train->add_option("--test-fraction", train_args.test_fraction, "Held-out fraction in (0,1)")
        ->capture_default_str();
    train->add_option("--seed", train_args.seed, "Split and solver seed")->capture_default_str();
    train->add_option("--alpha", train_args.train.alpha, "MNB smoothing (> 0)")
        ->capture_default_str();
    train->add_option("--c", train_args.train.c_param, "SVM box constraint (> 0)")
        ->capture_default_str();
    train->add_option("--tol", train_args.train.tol, "SVM stopping tolerance")
        ->capture_default_str();
    train->add_option("--max-epochs", train_args.train.max_epochs, "SVM epoch cap")
        ->capture_default_str();
    train->add_option("--model-out", train_args.model_out, "Model artifact path")
        ->capture_default_str();
    train->add_option("--report-out", train_args.report_out, "JSON evaluation report path");
    train->add_option("--test-out", train_args.test_out, "Write the held-out split as JSONL");
    train->add_flag("--dual-vars,!--no-dual-vars", train_args.include_dual_vars,
                    "Keep SVM dual variables in the artifact");
    train->add_flag("--filter-special,!--no-filter-special",
                    train_args.filter_rules.remove_special, "Strip punctuation and symbols");
    train->add_flag("--filter-digits,!--no-filter-digits", train_args.filter_rules.remove_digits,
                    "Strip ASCII and Bangla digits");
    train->add_flag("--filter-english,!--no-filter-english",
                    train_args.filter_rules.remove_english_letters, "Strip ASCII letters");
    train->add_flag("--filter-emoji,!--no-filter-emoji", train_args.filter_rules.remove_emoji,
                    "Strip pictographic emoji");

    PredictArgs predict_args;
    auto* predict = app.add_subcommand("predict", "Label documents with a saved model");
    predict->add_option("--model", predict_args.model, "Model artifact path")->required();
    auto* text_opt = predict->add_option("--text", predict_args.text, "Classify a single string");
    predict->add_option("--input", predict_args.input, "JSONL file of documents to classify")
        ->excludes(text_opt);

    EvaluateArgs evaluate_args;
    auto* evaluate = app.add_subcommand("evaluate", "Score a saved model on a labeled corpus");
    evaluate->add_option("--model", evaluate_args.model, "Model artifact path")->required();
    evaluate->add_option("--input", evaluate_args.input, "Labeled corpus file")->required();
    evaluate->add_option("--format", evaluate_args.format, "Corpus format: jsonl or csv")
        ->capture_default_str();
    evaluate->add_option("--report-out", evaluate_args.report_out, "JSON report path");

    khobor::SynthConfig synth_config;
    std::string synth_out = "synth.jsonl";
    auto* gen = app.add_subcommand("gen-synth", "Generate a seeded synthetic labeled corpus");
    gen->add_option("--n", synth_config.n_docs, "Number of documents (>= 4)")
        ->capture_default_str();
    gen->add_option("--fake-fraction", synth_config.fake_fraction, "Fake share in (0,1)")
        ->capture_default_str();
    gen->add_option("--vocab", synth_config.vocab_size, "Vocabulary size (>= 4)")
        ->capture_default_str();
    gen->add_option("--separation", synth_config.separation,
                    "Class separation in [0,1]: 0 identical, 1 disjoint")
        ->capture_default_str();
    gen->add_option("--seed", synth_config.seed, "Generator seed")->capture_default_str();
    gen->add_option("--out", synth_out, "Output JSONL path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (train->parsed()) return run_train(train_args);
        if (predict->parsed()) {
            predict_args.has_text = text_opt->count() > 0;
            if (!predict_args.has_text && predict_args.input.empty())
                throw khobor::InputError("predict needs --text or --input");
            return run_predict(predict_args);
        }
        if (evaluate->parsed()) return run_evaluate(evaluate_args);
        if (gen->parsed()) return run_gen_synth(synth_config, synth_out);
    } catch (const khobor::TrainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTrainError;
    } catch (const khobor::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
