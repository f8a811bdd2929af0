#pragma once

#include <stdexcept>
#include <string>

namespace bernstein {

/// Base class for all domain errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A field refused to produce a jet at the requested point
/// (non-finite point, range guard, or a custom provider rejection).
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// Unknown catalog / construction identifier.
class UnknownIdError : public Error {
public:
    using Error::Error;
};

/// Finite-difference step below the cancellation floor.
class StepSizeError : public Error {
public:
    using Error::Error;
};

/// (gamma, epsilon) outside the families for which a variational
/// density is defined.
class InadmissibleParamsError : public Error {
public:
    using Error::Error;
};

/// A denominator of lambda or of the Nitsche integrand vanished.
class PoleError : public Error {
public:
    using Error::Error;
};

/// p-Laplace residual requested at a critical point with p < 2.
class SingularGradientError : public Error {
public:
    using Error::Error;
};

/// Newton iteration failed to reach the residual tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, int iteration)
        : Error(what), iteration_(iteration) {}
    int iteration() const noexcept { return iteration_; }

private:
    int iteration_ = -1;
};

/// The linearized Newton system was singular or produced non-finite values.
class LinearSolveError : public Error {
public:
    LinearSolveError(const std::string& what, int iteration)
        : Error(what), iteration_(iteration) {}
    int iteration() const noexcept { return iteration_; }

private:
    int iteration_ = -1;
};

} // namespace bernstein
