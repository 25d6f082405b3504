#pragma once

#include <stdexcept>

namespace entconc {

// Invalid input: malformed matrices, out-of-range parameters, bad files.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A matrix required to be positive semidefinite has an eigenvalue below tolerance.
struct NotPositiveSemidefinite : ValidationError {
    using ValidationError::ValidationError;
};

// The requested routine does not apply to this input (e.g. X-state fast path
// on a matrix with entries off the X pattern).
struct NotApplicable : ValidationError {
    using ValidationError::ValidationError;
};

// Post-selection on coincidences retained (numerically) zero probability mass.
struct DegeneratePostSelection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No transmission settings can equalize the amplitudes (a coefficient is zero).
struct NoDistillationPossible : ValidationError {
    using ValidationError::ValidationError;
};

}
