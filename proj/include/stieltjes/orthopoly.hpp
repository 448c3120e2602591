#pragma once

#include <Eigen/Dense>

#include "stieltjes/errors.hpp"

namespace stieltjes::orthopoly {

enum class Family { hermite, laguerre, jacobi };

// One member of a classical orthogonal polynomial family: physicists'
// Hermite H_n (weight e^{-x^2}), generalized Laguerre L_n^(alpha)
// (weight x^alpha e^{-x}, alpha > -1) or Jacobi P_n^(alpha,beta)
// (weight (1-x)^alpha (1+x)^beta, alpha, beta > -1).
struct PolynomialSpec {
  Family family = Family::hermite;
  int degree = 0;
  double alpha = 0.0;  // laguerre and jacobi
  double beta = 0.0;   // jacobi only
};

PolynomialSpec hermite(int degree);
PolynomialSpec laguerre(int degree, double alpha);
PolynomialSpec jacobi(int degree, double alpha, double beta);

// Throws ParameterError on degree < 0 or weight parameters outside the
// integrable range.
void validate(const PolynomialSpec& spec);

// Forward three-term recurrence evaluation.
double eval(const PolynomialSpec& spec, double x);

// First or second derivative (order in {1, 2}) via the family's
// derivative identities.
double derivative_eval(const PolynomialSpec& spec, double x, int order);

// All degree-many real roots, strictly increasing. Eigenvalues of the
// symmetrized Jacobi matrix of the recurrence, then a few Newton steps.
// The polished roots satisfy |eval(spec, r)| <= 1e-10 * max(1, |f'(r)|).
Eigen::VectorXd roots(const PolynomialSpec& spec);

}  // namespace stieltjes::orthopoly
