#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acyc {

// Bad arguments: out-of-range ids, loops where none are allowed, malformed paths.
class InputDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Edge-list text that cannot be parsed. `line` is 1-based.
class ParseError : public InputDomainError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputDomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A configured size cap (brute-force edge cap, Tutte edge cap) or a 64-bit
// counter would be exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called on a state where its precondition does not hold,
// e.g. clicking a vertex that is not a source.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Raised by apply_click_sequence; `position` is the 0-based index of the
// first click that could not be applied.
class ClickSequenceError : public PreconditionError {
public:
    ClickSequenceError(std::size_t position, const std::string& what)
        : PreconditionError("click #" + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Something that must hold by construction did not. Always a bug.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace acyc
