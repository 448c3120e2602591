#include "stieltjes/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "stieltjes/log.hpp"

namespace stieltjes {

namespace {

double min_pairwise_gap(const Eigen::VectorXcd& positions) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < positions.size(); ++j)
    for (Eigen::Index k = j + 1; k < positions.size(); ++k)
      gap = std::min(gap, std::abs(positions[j] - positions[k]));
  return gap;
}

double min_pole_gap(const RationalField& field, const Eigen::VectorXcd& positions) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < positions.size(); ++j)
    gap = std::min(gap, pole_distance(field, positions[j]));
  return gap;
}

Eigen::VectorXcd residual_unchecked(const Eigen::VectorXcd& x, Complex gamma,
                                    const RationalField& field) {
  const Eigen::Index n = x.size();
  Eigen::VectorXcd r(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Complex sum{0.0, 0.0};
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k == j) continue;
      sum += gamma / (x[j] - x[k]);
    }
    r[j] = sum + evaluate(field, x[j]);
  }
  return r;
}

Eigen::MatrixXcd jacobian_unchecked(const Eigen::VectorXcd& x, Complex gamma,
                                    const RationalField& field) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXcd jac(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Complex diag = derivative(field, x[j]);
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k == j) continue;
      const Complex d = x[j] - x[k];
      const Complex coupling = gamma / (d * d);
      jac(j, k) = coupling;
      diag -= coupling;
    }
    jac(j, j) = diag;
  }
  return jac;
}

bool all_real(const Eigen::VectorXcd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i].imag() != 0.0) return false;
  return true;
}

bool field_real(const RationalField& field) {
  if (field.linear.imag() != 0.0 || field.constant.imag() != 0.0) return false;
  for (const auto& pole : field.poles)
    if (pole.location.imag() != 0.0 || pole.charge.imag() != 0.0) return false;
  return true;
}

// Chebyshev-like spread over an interval inferred from the field shape.
Eigen::VectorXcd default_initial(const RationalField& field, int count) {
  const double pi = std::acos(-1.0);
  Eigen::VectorXd t(count);
  for (int i = 0; i < count; ++i)
    t[i] = std::cos(pi * (2.0 * (count - 1 - i) + 1.0) / (2.0 * count));

  Eigen::VectorXcd x(count);
  if (field.poles.size() >= 2) {
    // Two fixed charges bracket the configuration (Jacobi-like).
    Complex lo = field.poles[0].location;
    Complex hi = field.poles[1].location;
    double best = std::abs(hi - lo);
    for (std::size_t m = 0; m < field.poles.size(); ++m)
      for (std::size_t l = m + 1; l < field.poles.size(); ++l) {
        const double d = std::abs(field.poles[l].location - field.poles[m].location);
        if (d > best) {
          best = d;
          lo = field.poles[m].location;
          hi = field.poles[l].location;
        }
      }
    const Complex mid = 0.5 * (lo + hi);
    const Complex half = 0.5 * (hi - lo);
    for (int i = 0; i < count; ++i) x[i] = mid + half * t[i];
  } else if (field.poles.size() == 1 && field.linear == Complex{0.0, 0.0} &&
             field.constant != Complex{0.0, 0.0}) {
    // A single fixed charge plus a constant drift (Laguerre-like):
    // rescaling by -1/(2 c0) maps onto the canonical (0, 4N) support.
    const Complex scale = -0.5 / field.constant;
    for (int i = 0; i < count; ++i)
      x[i] = field.poles[0].location + scale * (2.0 * count * (t[i] + 1.0));
  } else if (field.linear != Complex{0.0, 0.0}) {
    // Linear confinement (Hermite-like): support half-width sqrt(2N/|c1|),
    // rotated so that the interaction balances the field direction.
    const Complex scale = std::sqrt(2.0 * count / -field.linear);
    for (int i = 0; i < count; ++i) x[i] = scale * t[i];
  } else {
    const double w = std::sqrt(2.0 * count);
    for (int i = 0; i < count; ++i) x[i] = Complex{w * t[i], 0.0};
  }
  return x;
}

}  // namespace

void validate(const ChargeConfiguration& config) {
  if (config.positions.size() < 1)
    throw ParameterError("configuration needs at least one charge");
  if (config.strength == Complex{0.0, 0.0})
    throw ParameterError("charge strength must be nonzero");
  validate(config.field);
  if (config.positions.size() > 1 &&
      !(min_pairwise_gap(config.positions) > config.min_separation))
    throw DegenerateConfigurationError("charges closer than the minimum separation");
  if (!(min_pole_gap(config.field, config.positions) > config.min_separation))
    throw DegenerateConfigurationError("charge coincides with a field pole");
}

Eigen::VectorXcd equilibrium_residual(const ChargeConfiguration& config) {
  validate(config);
  return residual_unchecked(config.positions, config.strength, config.field);
}

Eigen::MatrixXcd equilibrium_jacobian(const ChargeConfiguration& config) {
  validate(config);
  return jacobian_unchecked(config.positions, config.strength, config.field);
}

ChargeConfiguration solve_equilibrium(const RationalField& field, int count,
                                      Complex strength,
                                      std::optional<Eigen::VectorXcd> initial,
                                      const SolveOptions& options) {
  validate(field);
  if (count < 1) throw ParameterError("solve_equilibrium requires N >= 1");
  if (strength == Complex{0.0, 0.0})
    throw ParameterError("charge strength must be nonzero");

  Eigen::VectorXcd x;
  if (initial) {
    if (initial->size() != count)
      throw ParameterError("initial guess size does not match charge count");
    x = *initial;
  } else {
    x = default_initial(field, count);
  }

  // When the whole problem lives on the real axis the iteration stays
  // there exactly; keeping the charges strictly ordered is then a strong
  // line-search guard (the equilibrium cannot reorder them).
  const bool ordered_real_case = all_real(x) && field_real(field) &&
                                 strength.imag() == 0.0 && strength.real() > 0.0;

  const auto admissible = [&](const Eigen::VectorXcd& candidate) {
    if (candidate.size() > 1 &&
        !(min_pairwise_gap(candidate) > options.min_separation))
      return false;
    if (!(min_pole_gap(field, candidate) > options.min_separation)) return false;
    if (ordered_real_case)
      for (Eigen::Index i = 1; i < candidate.size(); ++i)
        if (!(candidate[i].real() > candidate[i - 1].real())) return false;
    return true;
  };

  if (!admissible(x))
    throw DegenerateConfigurationError("initial guess violates the separation guard");

  Eigen::VectorXcd r = residual_unchecked(x, strength, field);
  double merit = r.norm();
  double best_inf = r.cwiseAbs().maxCoeff();

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const double rinf = r.cwiseAbs().maxCoeff();
    best_inf = std::min(best_inf, rinf);
    if (rinf <= options.tolerance) {
      ChargeConfiguration out{x, strength, field, options.min_separation};
      log_debug("solve_equilibrium converged after ", iter, " iterations, |r|_inf=", rinf);
      return out;
    }

    const Eigen::MatrixXcd jac = jacobian_unchecked(x, strength, field);
    const Eigen::VectorXcd delta = jac.partialPivLu().solve(-r);
    if (!delta.allFinite())
      throw ConvergenceError("equilibrium Newton step is not finite", best_inf);

    bool accepted = false;
    double lambda = 1.0;
    for (int halving = 0; halving < 60; ++halving) {
      const Eigen::VectorXcd candidate = x + lambda * delta;
      if (admissible(candidate)) {
        const Eigen::VectorXcd rc = residual_unchecked(candidate, strength, field);
        if (rc.norm() <= (1.0 - 1e-4 * lambda) * merit) {
          x = candidate;
          r = rc;
          merit = rc.norm();
          accepted = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!accepted)
      throw ConvergenceError(
          "equilibrium Newton stalled (no admissible decreasing step)", best_inf);
  }
  throw ConvergenceError("equilibrium Newton did not converge within max_iterations",
                         best_inf);
}

CoefficientPolynomial node_polynomial(const Eigen::VectorXcd& positions) {
  for (Eigen::Index j = 0; j < positions.size(); ++j)
    for (Eigen::Index k = j + 1; k < positions.size(); ++k)
      if (positions[j] == positions[k])
        throw DegenerateConfigurationError("node polynomial requires distinct roots");

  std::vector<Complex> coeffs{Complex{1.0, 0.0}};
  for (Eigen::Index m = 0; m < positions.size(); ++m) {
    std::vector<Complex> next(coeffs.size() + 1, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= positions[m] * coeffs[k];
    }
    coeffs = std::move(next);
  }

  CoefficientPolynomial poly;
  poly.coefficients = Eigen::Map<Eigen::VectorXcd>(coeffs.data(), coeffs.size());
  return poly;
}

IdentityCheck interaction_identity(const Eigen::VectorXcd& positions, int j) {
  if (j < 0 || j >= positions.size())
    throw ParameterError("interaction_identity index out of range");

  using LComplex = std::complex<long double>;
  const LComplex xj{static_cast<long double>(positions[j].real()),
                    static_cast<long double>(positions[j].imag())};
  LComplex sum{0.0L, 0.0L};
  for (Eigen::Index k = 0; k < positions.size(); ++k) {
    if (k == j) continue;
    const LComplex xk{static_cast<long double>(positions[k].real()),
                      static_cast<long double>(positions[k].imag())};
    sum += LComplex{1.0L, 0.0L} / (xj - xk);
  }

  const PolynomialJet jet = evaluate_jet(node_polynomial(positions), positions[j]);

  IdentityCheck check;
  check.direct_sum = Complex{static_cast<double>(sum.real()),
                             static_cast<double>(sum.imag())};
  check.polynomial_ratio = jet.second / (2.0 * jet.first);
  return check;
}

Eigen::VectorXcd node_polynomial_residual(const ChargeConfiguration& config,
                                          Complex background) {
  const CoefficientPolynomial poly = node_polynomial(config.positions);
  const Complex k = background / config.strength;
  Eigen::VectorXcd out(config.positions.size());
  for (Eigen::Index j = 0; j < config.positions.size(); ++j) {
    const PolynomialJet jet = evaluate_jet(poly, config.positions[j]);
    out[j] = jet.second + 2.0 * k * jet.first;
  }
  return out;
}

namespace {

// Bit-portable normal sampler (mt19937_64 + Box-Muller); the standard
// library's normal_distribution sequence is implementation defined.
class GaussianSampler {
public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  Complex standard_complex() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double pi = std::acos(-1.0);
    return Complex{radius * std::cos(2.0 * pi * u2),
                   radius * std::sin(2.0 * pi * u2)};
  }

private:
  std::mt19937_64 rng_;
};

std::optional<Eigen::VectorXcd> try_residual(const Eigen::VectorXcd& x,
                                             Complex gamma,
                                             const RationalField& field) {
  if (x.size() > 1 && !(min_pairwise_gap(x) > 1e-12)) return std::nullopt;
  if (!(min_pole_gap(field, x) > 1e-12)) return std::nullopt;
  return residual_unchecked(x, gamma, field);
}

}  // namespace

SearchResult constant_background_search(int count, Complex background,
                                        Complex strength,
                                        const SearchOptions& options) {
  if (count < 1) throw ParameterError("search requires N >= 1");
  if (strength == Complex{0.0, 0.0})
    throw ParameterError("charge strength must be nonzero");
  const RationalField field = constant_field(background);

  GaussianSampler sampler(options.seed);
  const double spread =
      std::sqrt(static_cast<double>(count)) * std::max(1.0, std::abs(strength));

  std::optional<SearchResult> best;
  const int restarts = std::max(1, options.restarts);
  for (int restart = 0; restart < restarts; ++restart) {
    Eigen::VectorXcd x(count);
    for (int i = 0; i < count; ++i) x[i] = spread * sampler.standard_complex();
    auto r0 = try_residual(x, strength, field);
    if (!r0) continue;

    // Levenberg-Marquardt on ||r||_2^2; for holomorphic r the complex
    // normal equations coincide with the real ones in (x, y) coordinates.
    Eigen::VectorXcd r = *r0;
    double damping = 1e-3;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
      const Eigen::MatrixXcd jac = jacobian_unchecked(x, strength, field);
      const Eigen::MatrixXcd normal = jac.adjoint() * jac;
      const Eigen::VectorXcd gradient = jac.adjoint() * r;
      if (gradient.norm() < 1e-14 * (1.0 + r.norm())) break;

      Eigen::MatrixXcd damped = normal;
      damped.diagonal().array() += Complex{damping, 0.0};
      const Eigen::VectorXcd delta = damped.ldlt().solve(-gradient);
      if (!delta.allFinite()) break;

      const auto rc = try_residual(x + delta, strength, field);
      if (rc && rc->squaredNorm() < r.squaredNorm()) {
        x += delta;
        r = *rc;
        damping = std::max(damping / 3.0, 1e-12);
      } else {
        damping *= 2.5;
        if (damping > 1e12) break;
      }
    }

    SearchResult result;
    result.config = ChargeConfiguration{x, strength, field, 1e-12};
    result.residual_inf = r.cwiseAbs().maxCoeff();
    result.residual_l2 = r.norm();
    if (!best || result.residual_l2 < best->residual_l2) best = result;
  }

  if (!best) throw NumericError("constant background search found no admissible start");
  log_info("constant_background_search N=", count, " best |r|_inf=", best->residual_inf);
  return *best;
}

double logarithmic_energy(const ChargeConfiguration& config) {
  validate(config);
  if (!all_real(config.positions))
    throw ParameterError("logarithmic energy is defined for real configurations");

  const auto& x = config.positions;
  double energy = 0.0;
  for (Eigen::Index j = 0; j < x.size(); ++j)
    for (Eigen::Index k = j + 1; k < x.size(); ++k)
      energy -= std::log(std::abs(x[j] - x[k]));

  // External potential with V' = -Re Q along the real axis.
  const auto& field = config.field;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const Complex xj = x[j];
    Complex antiderivative = 0.5 * field.linear * xj * xj + field.constant * xj;
    for (const auto& pole : field.poles)
      antiderivative += pole.charge * std::log(xj - pole.location);
    energy -= antiderivative.real();
  }
  return energy;
}

}  // namespace stieltjes
