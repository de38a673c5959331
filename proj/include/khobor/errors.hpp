// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Khobor Contributors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace khobor {

// Base of all library errors. The CLI maps InputError to exit code 2 and
// TrainError to exit code 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public Error {
public:
    using Error::Error;
};

class TrainError : public Error {
public:
    using Error::Error;
};

class MalformedRecord : public InputError {
public:
    MalformedRecord(std::size_t line, const std::string& detail)
        : InputError("malformed record at line " + std::to_string(line) + ": " + detail),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnknownLabel : public InputError {
public:
    explicit UnknownLabel(const std::string& value)
        : InputError("unknown label \"" + value + "\" (expected \"real\" or \"fake\")"),
          value_(value) {}

    const std::string& value() const { return value_; }

private:
    std::string value_;
};

class DuplicateId : public InputError {
public:
    explicit DuplicateId(const std::string& id)
        : InputError("duplicate document id \"" + id + "\""), id_(id) {}

    const std::string& id() const { return id_; }

private:
    std::string id_;
};

class CorpusTooSmall : public InputError {
public:
    explicit CorpusTooSmall(std::size_t n_docs)
        : InputError("corpus has " + std::to_string(n_docs) +
                     " document(s); at least 2 are required to split") {}
};

class LengthMismatch : public InputError {
public:
    LengthMismatch(std::size_t gold, std::size_t predicted)
        : InputError("gold and predicted streams differ in length (" + std::to_string(gold) +
                     " vs " + std::to_string(predicted) + ")") {}
};

class EmptyInput : public InputError {
public:
    using InputError::InputError;
};

class EmptyMatrix : public InputError {
public:
    EmptyMatrix() : InputError("confusion matrix has no observations") {}
};

class TermIdOutOfRange : public InputError {
public:
    using InputError::InputError;
    TermIdOutOfRange(std::size_t term_id, std::size_t limit)
        : InputError("term id " + std::to_string(term_id) + " out of range (vocabulary size " +
                     std::to_string(limit) + ")") {}
};

class VersionMismatch : public InputError {
public:
    VersionMismatch(int found, int expected)
        : InputError("model artifact format_version " + std::to_string(found) +
                     " does not match supported version " + std::to_string(expected)) {}
};

class CorruptArtifact : public InputError {
public:
    explicit CorruptArtifact(const std::string& detail)
        : InputError("corrupt model artifact: " + detail) {}
};

class EmptyTrainingCorpus : public TrainError {
public:
    EmptyTrainingCorpus() : TrainError("training corpus contains no tokens") {}
};

class SingleClassCorpus : public TrainError {
public:
    SingleClassCorpus() : TrainError("training corpus contains only one class") {}
};

class NonPositiveAlpha : public TrainError {
public:
    explicit NonPositiveAlpha(double alpha)
        : TrainError("smoothing alpha must be > 0, got " + std::to_string(alpha)) {}
};

class NoProgress : public TrainError {
public:
    NoProgress() : TrainError("optimizer objective became non-finite; check feature scaling") {}
};

}  // namespace khobor
