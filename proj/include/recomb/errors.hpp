#pragma once

#include <stdexcept>

namespace recomb {

// Raised when a diagram exceeds what the state sum or renderer accepts.
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a model invariant is violated at run time.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace recomb
