#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgeshadow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct FreqDenMismatch : Error {
    FreqDenMismatch(int lhs, int rhs)
        : Error("frequency denominator mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

struct UnsupportedEndpoint : Error {
    explicit UnsupportedEndpoint(const std::string& what) : Error("unsupported endpoint: " + what) {}
};

// RHS carries a term at the operator frequency; the particular solution would
// need secular phi*sin / phi*cos terms outside the trig-poly space.
struct ResonantTerm : Error {
    explicit ResonantTerm(const std::string& freq, const std::string& context = {})
        : Error("resonant right-hand side term at frequency " + freq + (context.empty() ? "" : " [" + context + "]")),
          frequency(freq) {}
    std::string frequency;
};

struct MissingDependency : Error {
    explicit MissingDependency(const std::string& key) : Error("missing table entry " + key) {}
};

struct IncompatibleBC : Error {
    explicit IncompatibleBC(const std::string& what) : Error(what) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    ParseError(int line, int column, const std::string& expected)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected),
          line(line), column(column), expected(expected) {}
    int line;
    int column;
    std::string expected;
};

}  // namespace edgeshadow
