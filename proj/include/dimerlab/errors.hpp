#pragma once

#include <stdexcept>
#include <string>

namespace dimerlab {

// An operation's stated precondition does not hold (unknown id, wrong degree,
// parity, disconnected input, ...). CLI exit code 3.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation would exceed a configured resource bound (frontier
// width, symbol budget of the weighted DP, retry budget). Never a wrong
// answer — the caller can fall back to another backend. CLI exit code 4.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document (graph JSON, polynomial JSON). CLI exit code 2.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dimerlab
