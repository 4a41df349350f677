#pragma once

#include <stdexcept>
#include <string>

namespace quintic {

// Malformed or inconsistent caller input (mixed fields, bad shapes, bad files).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed; signals a bug rather than bad input.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Rejection sampling could not find a generic configuration within its budget.
struct FieldTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested operation has no defined meaning for this input.
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quintic
