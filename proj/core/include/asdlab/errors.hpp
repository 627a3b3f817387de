#pragma once
#include <stdexcept>
#include <string>

namespace asdlab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-supplied parameters: non-prime p, p <= 3, B < 1, weight mismatch,
// precision below the budget formula, and similar. CLI maps this to exit 2.
struct ConfigError : Error {
    using Error::Error;
};

// Inversion of a non-unit (valuation > 0 residue, or +-1 over the integers).
struct NotAUnitError : Error {
    using Error::Error;
};

// p | a_p: there is no unit root, the whole p-column is skipped upstream.
struct SupersingularPrimeError : Error {
    using Error::Error;
};

// p divides the curve discriminant.
struct BadReductionError : Error {
    using Error::Error;
};

// A coefficient past the stored truncation was requested. Never silently zero.
struct InsufficientTruncationError : Error {
    using Error::Error;
};

// A check needs a valuation the ambient precision cannot certify and the
// caller asked for strict behaviour instead of an INCONCLUSIVE record.
struct InsufficientPrecisionError : Error {
    using Error::Error;
};

// Two series (or a series and a scalar) live over incompatible rings.
struct RingMismatchError : Error {
    using Error::Error;
};

// calibrate(): the convention-free annihilator check failed on data where it
// is an established fact, i.e. the implementation itself is broken.
struct NoConventionPassesError : Error {
    using Error::Error;
};

} // namespace asdlab
