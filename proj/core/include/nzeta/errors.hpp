#pragma once

#include <stdexcept>
#include <string>

namespace nzeta {

// Base class for every error this library raises deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error { using Error::Error; };
struct PoleEvaluation : Error { using Error::Error; };
struct HigherOrderPole : Error { using Error::Error; };
struct PoleAtOrigin : Error { using Error::Error; };

struct WeilViolation : Error { using Error::Error; };
struct TraceOutOfRange : Error { using Error::Error; };

struct NonIntegralExponent : Error { using Error::Error; };

// An exact identity required by the assembly failed; always a bug in the
// formula transcription, never a data condition.
struct StructureViolation : Error { using Error::Error; };

struct NonConvergence : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

}  // namespace nzeta
