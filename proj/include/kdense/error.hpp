#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdense {

// Base for all toolkit errors so callers can catch one type at the CLI
// boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument or violated precondition (unknown node, k out of range, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed input line; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Ingestion produced no usable edges.
class EmptyGraphError : public Error {
public:
    explicit EmptyGraphError(const std::string& what) : Error(what) {}
};

// H_kmax extraction on a triangle-free graph (k_max = 2, no proper core).
class DegenerateCoreError : public Error {
public:
    explicit DegenerateCoreError(const std::string& what) : Error(what) {}
};

}  // namespace kdense
