#ifndef GROWFRAG_ERRORS_HPP
#define GROWFRAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace growfrag {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// z within tolerance of a pole of Gamma (non-positive integer), or a
// Gamma factor of a closed-form expression lands on a pole.
struct PoleError : Error {
    using Error::Error;
};

// Series exceeded its term budget without meeting the stopping rule.
struct NonConvergenceError : Error {
    using Error::Error;
};

// z > z_switch and c-a-b too close to an integer for the linear
// connection formula to be well conditioned.
struct DegenerateConnectionError : Error {
    using Error::Error;
};

struct InvalidParam : Error {
    using Error::Error;
};

struct InvalidDomain : Error {
    using Error::Error;
};

struct TimeOutOfRange : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    using Error::Error;
};

// Truncated inversion contour cannot meet the requested tolerance.
struct ContourTooShort : Error {
    using Error::Error;
};

struct CFLViolation : Error {
    using Error::Error;
};

struct DomainTooSmall : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace growfrag

#endif
