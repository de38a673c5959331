// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#include "khobor/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "khobor/errors.hpp"
#include "khobor/rng.hpp"

namespace khobor {

namespace {

std::string ascii_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

void append_document(LabeledCorpus& corpus, std::unordered_set<std::string>& seen_ids,
                     std::string id, std::string text, Label label) {
    if (!seen_ids.insert(id).second) throw DuplicateId(id);
    corpus.documents.push_back({std::move(id), std::move(text), label});
}

LabeledCorpus parse_jsonl(std::istream& in) {
    LabeledCorpus corpus;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t index = 0;  // zero-based physical line index, used for auto ids
    for (; std::getline(in, line); ++index) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json record;
        try {
            record = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw MalformedRecord(index + 1, e.what());
        }
        if (!record.is_object()) throw MalformedRecord(index + 1, "expected a JSON object");
        if (!record.contains("text") || !record["text"].is_string())
            throw MalformedRecord(index + 1, "missing required string field \"text\"");
        if (!record.contains("label") || !record["label"].is_string())
            throw MalformedRecord(index + 1, "missing required string field \"label\"");
        std::string text = record["text"].get<std::string>();
        if (text.empty()) throw MalformedRecord(index + 1, "\"text\" must be non-empty");
        std::string id;
        if (record.contains("id")) {
            if (!record["id"].is_string())
                throw MalformedRecord(index + 1, "\"id\" must be a string");
            id = record["id"].get<std::string>();
        } else {
            id = std::to_string(index);
        }
        const Label label = parse_label(record["label"].get<std::string>());
        append_document(corpus, seen_ids, std::move(id), std::move(text), label);
    }
    return corpus;
}

struct CsvRecord {
    std::vector<std::string> fields;
    std::size_t line = 1;
};

// RFC 4180: quoted fields may contain commas, newlines and doubled quotes.
std::vector<CsvRecord> parse_csv_records(std::istream& in) {
    std::vector<CsvRecord> records;
    CsvRecord current;
    std::string field;
    bool in_quotes = false;
    std::size_t line = 1;

    auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&] {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        end_field();
        const bool blank = current.fields.size() == 1 && current.fields[0].empty();
        if (!blank) records.push_back(std::move(current));
        current = {};
        current.line = line;
    };

    int c;
    bool any = false;
    while ((c = in.get()) != std::istream::traits_type::eof()) {
        const char ch = static_cast<char>(c);
        any = true;
        if (in_quotes) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n') ++line;
                field.push_back(ch);
            }
        } else if (ch == '"') {
            in_quotes = true;
        } else if (ch == ',') {
            end_field();
        } else if (ch == '\n') {
            ++line;
            end_record();
        } else {
            field.push_back(ch);
        }
    }
    if (in_quotes) throw MalformedRecord(current.line, "unterminated quoted field");
    if (any && (!field.empty() || !current.fields.empty())) end_record();
    return records;
}

LabeledCorpus parse_csv(std::istream& in) {
    const auto records = parse_csv_records(in);
    if (records.empty()) return {};
    const auto& header = records.front().fields;
    if (header != std::vector<std::string>{"id", "text", "label"})
        throw MalformedRecord(records.front().line, "expected header \"id,text,label\"");

    LabeledCorpus corpus;
    std::unordered_set<std::string> seen_ids;
    std::size_t row = 0;  // zero-based data row, used for auto ids
    for (std::size_t r = 1; r < records.size(); ++r, ++row) {
        const auto& rec = records[r];
        if (rec.fields.size() != 3)
            throw MalformedRecord(rec.line, "expected 3 fields, got " +
                                                std::to_string(rec.fields.size()));
        if (rec.fields[1].empty()) throw MalformedRecord(rec.line, "\"text\" must be non-empty");
        std::string id = rec.fields[0].empty() ? std::to_string(row) : rec.fields[0];
        const Label label = parse_label(rec.fields[2]);
        append_document(corpus, seen_ids, std::move(id), rec.fields[1], label);
    }
    return corpus;
}

}  // namespace

const char* label_name(Label label) { return label == Label::Real ? "real" : "fake"; }

Label parse_label(std::string_view text) {
    const std::string lowered = ascii_lower(text);
    if (lowered == "real") return Label::Real;
    if (lowered == "fake") return Label::Fake;
    throw UnknownLabel(std::string(text));
}

CorpusFormat parse_corpus_format(std::string_view name) {
    const std::string lowered = ascii_lower(name);
    if (lowered == "jsonl") return CorpusFormat::Jsonl;
    if (lowered == "csv") return CorpusFormat::Csv;
    throw InputError("unknown corpus format \"" + std::string(name) + "\"");
}

LabeledCorpus parse_corpus(std::istream& in, CorpusFormat format) {
    return format == CorpusFormat::Jsonl ? parse_jsonl(in) : parse_csv(in);
}

LabeledCorpus load_corpus(const std::string& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open corpus file \"" + path + "\"");
    return parse_corpus(in, format);
}

CorpusStats corpus_stats(const LabeledCorpus& corpus) {
    CorpusStats stats;
    stats.total = corpus.size();
    for (const Document& doc : corpus.documents) {
        (doc.label == Label::Real ? stats.real : stats.fake).count++;
    }
    if (stats.total > 0) {
        stats.real.percent = 100.0 * static_cast<double>(stats.real.count) /
                             static_cast<double>(stats.total);
        stats.fake.percent = 100.0 * static_cast<double>(stats.fake.count) /
                             static_cast<double>(stats.total);
    }
    return stats;
}

std::size_t train_size_for(std::size_t n_docs, double test_fraction) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw InputError("test_fraction must be in (0,1), got " + std::to_string(test_fraction));
    // floor((1-f)*n) = n - ceil(f*n) when f*n is fractional, n - f*n when it
    // is whole. Products within one part in 1e9 of an integer count as
    // hitting it: decimal fractions like 0.1 are not binary-representable
    // and would otherwise tip the boundary document.
    const double x = test_fraction * static_cast<double>(n_docs);
    const double nearest = std::round(x);
    double test_real = std::ceil(x);
    if (nearest >= 1.0 && std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) test_real = nearest;
    const auto test_size = static_cast<std::size_t>(test_real);
    return n_docs - test_size;
}

CorpusSplit split_corpus(const LabeledCorpus& corpus, const SplitConfig& config) {
    const std::size_t n = corpus.size();
    if (n < 2) throw CorpusTooSmall(n);
    const std::size_t n_train = train_size_for(n, config.test_fraction);

    // Sort ids before shuffling: the partition then depends only on the id
    // set, never on file order.
    std::vector<std::string> ids;
    ids.reserve(n);
    for (const Document& doc : corpus.documents) ids.push_back(doc.id);
    std::sort(ids.begin(), ids.end());

    std::mt19937_64 rng(config.seed);
    shuffle_inplace(ids, rng);

    std::unordered_set<std::string> train_ids(ids.begin(),
                                              ids.begin() + static_cast<std::ptrdiff_t>(n_train));

    CorpusSplit split;
    split.train.documents.reserve(n_train);
    split.test.documents.reserve(n - n_train);
    for (const Document& doc : corpus.documents) {
        (train_ids.contains(doc.id) ? split.train : split.test).documents.push_back(doc);
    }

    const CorpusStats train_stats = corpus_stats(split.train);
    if (train_stats.real.count == 0 || train_stats.fake.count == 0) {
        std::cerr << "warning: class \""
                  << (train_stats.real.count == 0 ? "real" : "fake")
                  << "\" is absent from the training split\n";
    }
    return split;
}

}  // namespace khobor
