#pragma once

#include <cstdint>
#include <optional>

#include "stieltjes/field.hpp"

namespace stieltjes {

// N charges of identical complex strength gamma at pairwise distinct
// complex positions, immersed in a rational background field. The
// equilibrium residual per charge is
//
//   r_j = sum_{k != j} gamma / (x_j - x_k) + Q(x_j).
struct ChargeConfiguration {
  Eigen::VectorXcd positions;
  Complex strength{1.0, 0.0};
  RationalField field;
  double min_separation = 1e-10;
};

// Throws DegenerateConfigurationError when positions violate the minimum
// pairwise separation or sit on a field pole.
void validate(const ChargeConfiguration& config);

Eigen::VectorXcd equilibrium_residual(const ChargeConfiguration& config);

// Complex Jacobian d r_j / d x_k of the residual map.
Eigen::MatrixXcd equilibrium_jacobian(const ChargeConfiguration& config);

struct SolveOptions {
  double tolerance = 1e-12;  // infinity norm of the residual
  int max_iterations = 200;
  double min_separation = 1e-10;
};

// Damped Newton with analytic Jacobian. Default initialization spreads
// Chebyshev-like points over an interval inferred from the field shape;
// pass `initial` to override. Throws ConvergenceError (carrying the best
// residual norm reached) when the iteration stalls or runs out.
ChargeConfiguration solve_equilibrium(const RationalField& field, int count,
                                      Complex strength = Complex{1.0, 0.0},
                                      std::optional<Eigen::VectorXcd> initial = std::nullopt,
                                      const SolveOptions& options = {});

// Monic polynomial whose roots are the given (distinct) positions,
// built by multiplying out the linear factors.
CoefficientPolynomial node_polynomial(const Eigen::VectorXcd& positions);

// Two independent routes to sum_{k != j} 1/(x_j - x_k): the direct pair
// sum versus f''(x_j) / (2 f'(x_j)) from the expanded node polynomial.
struct IdentityCheck {
  Complex direct_sum;
  Complex polynomial_ratio;
};

IdentityCheck interaction_identity(const Eigen::VectorXcd& positions, int j);

// Residual of the constant-background equilibrium condition expressed
// through the node polynomial: f''(z_j) + 2 (P / gamma) f'(z_j) per
// charge. Equals (2 f'(z_j) / gamma) * r_j, so it vanishes exactly when
// the force residual does.
Eigen::VectorXcd node_polynomial_residual(const ChargeConfiguration& config,
                                          Complex background);

struct SearchOptions {
  int restarts = 20;
  std::uint64_t seed = 0;
  int max_iterations = 300;
};

struct SearchResult {
  ChargeConfiguration config;
  double residual_inf = 0.0;
  double residual_l2 = 0.0;
};

// Multi-start Levenberg-Marquardt minimization of ||r||_2 for N charges
// in the constant field Q == background. Always returns the best
// configuration found. For background != 0 and N >= 1 the infinity norm
// is bounded below by |background|: summing r_j over j cancels the
// interactions pairwise, so sum_j r_j = N * background identically.
SearchResult constant_background_search(int count, Complex background,
                                        Complex strength,
                                        const SearchOptions& options = {});

// Logarithmic energy diagnostic for configurations with real positions:
// -sum_{j<k} log|x_j - x_k| + sum_j V(x_j) with V' = -Re Q along the
// real axis. Not used by the solver.
double logarithmic_energy(const ChargeConfiguration& config);

}  // namespace stieltjes
