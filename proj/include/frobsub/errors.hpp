#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace frobsub {

struct SourcePos {
    int line = 0;  // 1-based; 0 means unknown
    int col = 0;
};

// User-facing failure: bad expression, bad manifest, bad dimensions, ...
class InputError : public std::runtime_error {
public:
    explicit InputError(std::string msg) : std::runtime_error(std::move(msg)) {}
    InputError(std::string msg, SourcePos pos)
        : std::runtime_error(std::move(msg)), pos_(pos) {}
    const std::optional<SourcePos>& pos() const { return pos_; }

private:
    std::optional<SourcePos> pos_;
};

class ParseError : public InputError {
public:
    ParseError(std::string msg, SourcePos pos) : InputError(std::move(msg), pos) {}
};

class SingularMatrixError : public InputError {
public:
    explicit SingularMatrixError(std::string msg) : InputError(std::move(msg)) {}
};

class DegenerateMetricError : public InputError {
public:
    explicit DegenerateMetricError(std::string msg) : InputError(std::move(msg)) {}
};

class IntegrabilityError : public InputError {
public:
    IntegrabilityError(std::string msg, std::size_t i, std::size_t j)
        : InputError(std::move(msg)), index_i(i), index_j(j) {}
    std::size_t index_i = 0;
    std::size_t index_j = 0;
};

// Term-count ceiling or other configured resource limit exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// A proven identity failed to hold: indicates a bug, not bad input.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(std::string msg) : std::logic_error(std::move(msg)) {}
};

}  // namespace frobsub
