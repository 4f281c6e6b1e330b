#pragma once

#include <stdexcept>
#include <string>

namespace otto {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (non-Hermitian matrix, time outside a
// stroke, |r| > 1, invalid probability vector, zero gap, ...).
struct DomainError : Error {
    using Error::Error;
};

// A stated precondition between arguments is violated (e.g. reference state
// not diagonal in the dephasing basis).
struct PreconditionError : Error {
    using Error::Error;
};

// Requested resolution is too coarse for the guaranteed accuracy.
struct AccuracyError : Error {
    using Error::Error;
};

// Step doubling hit the step cap without meeting the tolerance.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double est, int steps_reached)
        : Error(msg), est_error(est), steps(steps_reached) {}
    double est_error;
    int steps;
};

// Configuration text rejected; carries the offending key path.
struct ParseError : Error {
    ParseError(const std::string& msg, std::string key)
        : Error(msg), key_path(std::move(key)) {}
    std::string key_path;
};

} // namespace otto
