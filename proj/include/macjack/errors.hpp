#pragma once

#include <stdexcept>
#include <string>

namespace macjack {

// Every failure in this library is a diagnosis: either a caller error
// (bad arguments) or a violated mathematical identity.  The latter are
// first-class results, so they carry enough text to be actionable.

struct MacjackError : std::runtime_error {
    explicit MacjackError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : MacjackError {
    explicit DivisionByZero(const std::string& msg = "division by zero") : MacjackError(msg) {}
};

struct ConductorMismatch : MacjackError {
    explicit ConductorMismatch(const std::string& msg) : MacjackError(msg) {}
};

// A specialized denominator vanished identically: the polynomial is not
// well-defined at this parameter point.
struct PoleAtSpecialization : MacjackError {
    explicit PoleAtSpecialization(const std::string& msg) : MacjackError(msg) {}
};

struct NotDivisible : MacjackError {
    explicit NotDivisible(const std::string& msg) : MacjackError(msg) {}
};

struct ZeroPolynomial : MacjackError {
    explicit ZeroPolynomial(const std::string& msg = "zero polynomial") : MacjackError(msg) {}
};

// Triangular eigen-solve hit a repeated diagonal value tying the target
// index to another composition.
struct NonUniqueEigenfunction : MacjackError {
    explicit NonUniqueEigenfunction(const std::string& msg) : MacjackError(msg) {}
};

struct PathInconsistency : MacjackError {
    explicit PathInconsistency(const std::string& msg) : MacjackError(msg) {}
};

struct ShapeMismatch : MacjackError {
    explicit ShapeMismatch(const std::string& msg) : MacjackError(msg) {}
};

struct InvalidParams : MacjackError {
    explicit InvalidParams(const std::string& msg) : MacjackError(msg) {}
};

struct NotEigenvector : MacjackError {
    explicit NotEigenvector(const std::string& msg) : MacjackError(msg) {}
};

struct CostGateExceeded : MacjackError {
    explicit CostGateExceeded(const std::string& msg) : MacjackError(msg) {}
};

struct ParseError : MacjackError {
    explicit ParseError(const std::string& msg) : MacjackError(msg) {}
};

}  // namespace macjack
