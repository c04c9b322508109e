#ifndef NHP_ERROR_HPP
#define NHP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nhp {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed construction input (bad endpoints, loops, empty part lists, ...).
struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

// Graph text / JSON parsing failures.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// An exponential oracle refused an input larger than its size guard.
struct SizeGuardError : Error {
    SizeGuardError(const std::string& what_op, int n, int guard)
        : Error(what_op + ": input size " + std::to_string(n) +
                " exceeds guard " + std::to_string(guard) +
                " (raise max_n to override)"),
          size(n), limit(guard) {}
    int size;
    int limit;
};

// Input graph is neither P4-tidy nor a tree-cograph.
struct UnsupportedClassError : Error {
    explicit UnsupportedClassError(const std::string& msg) : Error(msg) {}
};

}  // namespace nhp

#endif
