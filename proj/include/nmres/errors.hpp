#pragma once

#include <stdexcept>
#include <string>

namespace nmres {

// Base class for every failure the engine can signal. The CLI maps these to
// exit code 1 (engine fault), as opposed to exit code 2 (reproducible
// disagreement between a claimed closed form and the brute-force oracle).
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by the zero rational function.
struct DegenerateScalar : EngineError {
    using EngineError::EngineError;
};

// Evaluation point hits a pole of the rational function.
struct PoleAtSample : EngineError {
    using EngineError::EngineError;
};

// Parameter sample with a0*b0 == 0; the operator family degenerates there.
struct DegenerateParameters : EngineError {
    using EngineError::EngineError;
};

// Leading symbol is not invertible over the coefficient field.
struct NonInvertibleLeading : EngineError {
    using EngineError::EngineError;
};

// Coefficient extraction found a functional shape the bracket cannot carry.
struct PatternBroken : EngineError {
    using EngineError::EngineError;
};

// A half-integral |xi| power survived where an even one was required.
struct OddDenomPow : EngineError {
    using EngineError::EngineError;
};

// Integrand does not decay fast enough for the contour integral.
struct NonIntegrable : EngineError {
    using EngineError::EngineError;
};

// Order-1 symbol whose square is not a scalar multiple of |xi|^2.
struct SingularSymbol : EngineError {
    using EngineError::EngineError;
};

struct UnknownTag : EngineError {
    using EngineError::EngineError;
};

struct UnknownFunctional : EngineError {
    using EngineError::EngineError;
};

}  // namespace nmres
