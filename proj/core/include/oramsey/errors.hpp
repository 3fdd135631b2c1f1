#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace oramsey {

// Input violates an operation's domain (bad vertex, overlapping sets, cycle).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numeric parameter is outside the range an operation accepts.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a digraph that must be acyclic is not; carries a witness cycle
// (0-based vertex indices, first vertex not repeated).
class CycleError : public DomainError {
public:
    CycleError(std::string what, std::vector<std::size_t> cycle)
        : DomainError(std::move(what)), cycle_(std::move(cycle)) {}
    const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::size_t> cycle_;
};

// Text-format parse failure. line() is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Randomized generation ran out of attempts.
class GenerationFailure : public std::runtime_error {
public:
    GenerationFailure(const std::string& what, std::size_t tries)
        : std::runtime_error(what), tries_(tries) {}
    std::size_t tries() const noexcept { return tries_; }

private:
    std::size_t tries_;
};

// An internal postcondition failed. Indicates a bug, never bad input.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace oramsey
