#pragma once

#include <stdexcept>
#include <string>

namespace ternary {

/// Error taxonomy shared by the library and the CLI.
/// The CLI maps these to process exit codes: parse(2), precondition(3),
/// not-invertible(4), cap-exceeded(5).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

class NotInvertibleError : public std::runtime_error {
public:
    explicit NotInvertibleError(const std::string& what) : std::runtime_error(what) {}
};

class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ternary
