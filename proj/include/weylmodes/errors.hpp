#pragma once

#include <stdexcept>
#include <string>

namespace weylmodes {

// Requested family/rank combination outside the supported tables.
struct UnsupportedRank : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Root closure did not terminate at the expected positive-root count.
// Indicates a corrupted Cartan table, never a user error.
struct InternalClosureError : std::logic_error {
    using std::logic_error::logic_error;
};

// Potential evaluated at a point where some pairing q_alpha leaves (0, pi).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Newton iteration exhausted its budget or the line search underflowed.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix handed to the symmetric eigensolver is not symmetric within tolerance.
struct NotSymmetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Degenerate input to a fit (e.g. zero Frobenius norm).
struct SingularInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace weylmodes
