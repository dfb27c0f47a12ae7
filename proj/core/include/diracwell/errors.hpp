#pragma once

#include <stdexcept>
#include <string>

namespace diracwell {

// Base class for all domain errors raised by this library. Precondition
// violations that are plain programming errors throw std::invalid_argument
// instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// |E| = m or |E + V| = m: a wave number vanishes and the matching spinor
// ratio degenerates, so kinematic quantities are undefined.
class EdgeEnergyError : public Error {
public:
    using Error::Error;
};

// The wall-continuity linear system is singular or near-singular; reported
// with diagnostics instead of silently regularizing.
class SingularMatchingError : public Error {
public:
    using Error::Error;
};

// Two solutions offered for superposition carry different energies.
class MismatchedEnergyError : public Error {
public:
    using Error::Error;
};

// An operation was invoked on a solution outside its applicable energy zone.
class WrongRegimeError : public Error {
public:
    using Error::Error;
};

// A Klein-zone operation was requested for a well with V <= 2m.
class NoKleinZoneError : public Error {
public:
    using Error::Error;
};

// The integrator's half-step repeat disagrees with the full-step result
// beyond tolerance; the requested step cannot resolve the solution.
class StepTooCoarseError : public Error {
public:
    using Error::Error;
};

}  // namespace diracwell
