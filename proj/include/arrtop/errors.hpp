#pragma once

#include <stdexcept>
#include <string>

namespace arrtop {

// Bad user input (malformed files, violated preconditions the caller controls).
// The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated internal invariant (sign convention bug, square-zero failure, ...).
// Never the user's fault. CLI exit code 2.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two computation routes disagreed where they must agree. CLI exit code 3.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace arrtop
