#pragma once

#include <stdexcept>
#include <string>

namespace incidence {

/// Malformed input data (board files, QBF files, bad parameters).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

/// A computation was refused because it exceeds a configured budget.
/// Distinct from a wrong answer: callers may retry with a larger budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace incidence
