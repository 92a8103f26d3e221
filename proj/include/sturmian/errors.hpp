#pragma once

#include <stdexcept>
#include <string>

namespace sturmian {

// Base class for every library error.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid values or operations on otherwise well-formed inputs: rational
// slopes where irrational ones are required, mixed quadratic fields,
// division by zero, exceeded step budgets, degenerate substitutions,
// unusable seeds, exhausted precision.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Malformed textual input: number grammar, rules grammar, CLI flags.
// Messages carry the offending position where applicable.
class usage_error : public error {
public:
    explicit usage_error(const std::string& what) : error(what) {}
};

// Broken internal invariants. Seeing one of these is a bug report.
class internal_error : public error {
public:
    explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace sturmian
