#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mobility {

class MobilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by parse_graph with a 1-based line number and a failure kind.
class ParseError : public MobilityError {
public:
    enum class Kind { Syntax, NonIncreasingTime, SelfLoop, UnknownVertex };

    ParseError(Kind kind, int line, const std::string& what)
        : MobilityError("line " + std::to_string(line) + ": " + what),
          kind_(kind),
          line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

class UnknownVertexError : public MobilityError {
public:
    using MobilityError::MobilityError;
};

class NotACliqueError : public MobilityError {
public:
    using MobilityError::MobilityError;
};

class MissingEdgeError : public MobilityError {
public:
    using MobilityError::MobilityError;
};

class BoundExceededError : public MobilityError {
public:
    using MobilityError::MobilityError;
};

class InvalidScheduleError : public MobilityError {
public:
    InvalidScheduleError(std::size_t index, const std::string& what)
        : MobilityError(what), index_(index) {}
    // 1-based index of the first infeasible crossing.
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class VertexMismatchError : public MobilityError {
public:
    using MobilityError::MobilityError;
};

class NotASubgraphError : public MobilityError {
public:
    using MobilityError::MobilityError;
};

class NotAcceptedError : public MobilityError {
public:
    using MobilityError::MobilityError;
};

class CoincidentCrossingsError : public MobilityError {
public:
    using MobilityError::MobilityError;
};

class OddCountError : public MobilityError {
public:
    using MobilityError::MobilityError;
};

}  // namespace mobility
