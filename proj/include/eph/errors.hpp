#pragma once

#include <stdexcept>
#include <string>

namespace eph {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct KindMismatch : Error {
    explicit KindMismatch(const std::string& w = "mixed hypercomplex kinds") : Error(w) {}
};

struct ZeroDivisor : Error {
    explicit ZeroDivisor(const std::string& w = "zero divisor is not invertible") : Error(w) {}
};

struct ArgumentUndefined : Error {
    explicit ArgumentUndefined(const std::string& w = "argument undefined for this element") : Error(w) {}
};

struct NonInvertibleDenominator : Error {
    explicit NonInvertibleDenominator(const std::string& w = "Moebius denominator is a zero divisor") : Error(w) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& w = "value outside the admissible domain") : Error(w) {}
};

struct GridMismatch : Error {
    explicit GridMismatch(const std::string& w = "incompatible grids") : Error(w) {}
};

struct QuadratureDomainError : Error {
    explicit QuadratureDomainError(const std::string& w = "quadrature domain unusable") : Error(w) {}
};

struct PhaseDomainError : Error {
    explicit PhaseDomainError(const std::string& w = "interference coefficient outside mode range") : Error(w) {}
};

struct DivergentIntegrand : Error {
    explicit DivergentIntegrand(const std::string& w = "integrand does not decay on the truncated domain") : Error(w) {}
};

struct StabilityViolation : Error {
    explicit StabilityViolation(const std::string& w = "time step violates the stability guard") : Error(w) {}
};

struct BoundaryUnderflowViolation : Error {
    explicit BoundaryUnderflowViolation(const std::string& w = "state mass near the grid boundary") : Error(w) {}
};

struct ValueAlgebraMismatch : Error {
    explicit ValueAlgebraMismatch(const std::string& w = "state value algebra does not match the representation") : Error(w) {}
};

struct UnknownVariant : Error {
    explicit UnknownVariant(const std::string& w = "unknown representation variant") : Error(w) {}
};

struct NotAGeneratorCase : Error {
    explicit NotAGeneratorCase(const std::string& w = "vector is not one of the subgroup generators") : Error(w) {}
};

} // namespace eph
