#pragma once
#include <stdexcept>
#include <string>

namespace hopftube {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct BaseMismatchError : Error {
    using Error::Error;
};

// chart tangents lost rank; carries the offending singular value
struct DegenerateChartError : Error {
    double sigma_min;
    explicit DegenerateChartError(double s)
        : Error("chart tangent set is rank-deficient (sigma_min = " +
                std::to_string(s) + ")"),
          sigma_min(s) {}
};

// shape operator asymmetry above tolerance before symmetrization
struct NoisyDerivativeError : Error {
    double asymmetry;
    explicit NoisyDerivativeError(double a)
        : Error("finite-difference shape operator too asymmetric (" +
                std::to_string(a) + "); adjust the step"),
          asymmetry(a) {}
};

// radius sits on a cot pole of the predicted tube spectrum
struct FocalDegeneracyError : Error {
    using Error::Error;
};

struct SingularPointError : Error {
    using Error::Error;
};

struct OffVarietyError : Error {
    double residual;
    explicit OffVarietyError(double r)
        : Error("point is not on the variety (|f| residual = " +
                std::to_string(r) + ")"),
          residual(r) {}
};

struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int ln, const std::string& what)
        : Error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

}  // namespace hopftube
