#pragma once

#include <stdexcept>
#include <string>

namespace talex {

/// Input text could not be parsed. Carries the 1-based source line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A structural invariant of the input data does not hold.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values from incompatible contexts were combined
/// (different generator alphabets, variable sets, or coefficient rings).
class MismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace talex
