#pragma once

#include <stdexcept>
#include <string>

namespace qmpl {

/// Base class for all errors raised by the kernel.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A polynomial evaluation was requested with an incomplete assignment.
struct MissingSymbolError : Error {
    using Error::Error;
};

/// Division by a zero rational or a fraction with zero numerator.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// q := 1 substitution hit a denominator that vanishes identically.
struct IndeterminateLimitError : Error {
    using Error::Error;
};

/// An exact polynomial division left a nonzero remainder (internal bug signal).
struct InexactDivisionError : Error {
    using Error::Error;
};

/// An operation would exceed the configured term budget.
struct ResourceLimitError : Error {
    using Error::Error;
};

/// Bad command-line flags or configuration.
struct UsageError : Error {
    using Error::Error;
};

/// Global term budget shared by all polynomial operations.
std::size_t term_budget();
void set_term_budget(std::size_t budget);

}  // namespace qmpl
