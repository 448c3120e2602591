#pragma once

#include <stdexcept>
#include <string>

namespace stieltjes {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument lies outside its documented domain.
class ParameterError : public Error {
public:
  using Error::Error;
};

// Coincident (or nearly coincident) charges / vortices / field poles.
class DegenerateConfigurationError : public Error {
public:
  using Error::Error;
};

// Evaluation requested at, or too close to, a pole.
class PoleEvaluationError : public Error {
public:
  using Error::Error;
};

// Dense linear-algebra failure (eigenvalue non-convergence etc).
class NumericError : public Error {
public:
  using Error::Error;
};

// An iterative solver stopped before reaching its tolerance. Carries the
// best residual norm seen so the caller can report how close it got.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}

  double best_residual() const { return best_residual_; }

private:
  double best_residual_;
};

}  // namespace stieltjes
