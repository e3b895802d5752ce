#pragma once

#include <stdexcept>
#include <string>

namespace qpde {

// Base class for every error the library throws on purpose.  Each condition
// gets its own type so callers (and the CLI) can map them to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested comparison or coefficient lies at or beyond a truncation order.
struct OrderExceedsTruncation : Error {
    using Error::Error;
};

// Series inversion needs an invertible leading coefficient.
struct NonInvertibleLeadingTerm : Error {
    using Error::Error;
};

// The theta series in a mu denominator vanishes identically (u = v pole).
struct ThetaDenominatorVanishes : Error {
    using Error::Error;
};

// Numeric evaluation requested too close to a lattice pole.
struct PoleProximity : Error {
    using Error::Error;
};

// Numeric evaluation cannot reach the requested tolerance.
struct ToleranceUnreachable : Error {
    using Error::Error;
};

// Combinatorial enumeration beyond the configured safety limit.
struct LimitExceeded : Error {
    using Error::Error;
};

// Name lookup failures and malformed user input.
struct UnknownIdentity : Error {
    using Error::Error;
};
struct InvalidModulus : Error {
    using Error::Error;
};

struct MissingParams : Error {
    using Error::Error;
};
struct BadInput : Error {
    using Error::Error;
};

}  // namespace qpde
