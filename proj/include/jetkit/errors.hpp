#pragma once

#include <stdexcept>
#include <string>

namespace jetkit {

// Malformed input: bad JSON, unknown object tag, wrong shape.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller-side condition does not hold: base-point mismatch, lower orders
// disagree, index out of range, wrong object.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An identity the library relies on failed. Always a defect or a falsified
// mathematical claim, never a user error.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace jetkit
