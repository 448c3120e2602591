#include "stieltjes/qhj.hpp"

#include <cmath>

namespace stieltjes::qhj {

void validate(const QuantumProblem& problem) {
  if (!(problem.mass > 0.0)) throw ParameterError("mass must be positive");
  if (!(problem.omega > 0.0)) throw ParameterError("omega must be positive");
  if (!(problem.hbar > 0.0)) throw ParameterError("hbar must be positive");
  if (problem.level < 0) throw ParameterError("quantum level must be >= 0");
}

namespace {

void require_off_pole(const MomentumFunction& p, Complex x) {
  for (Eigen::Index k = 0; k < p.poles.size(); ++k)
    if (std::abs(x - p.poles[k]) < 1e-12)
      throw PoleEvaluationError("momentum function evaluated at a pole");
}

}  // namespace

Complex evaluate(const MomentumFunction& p, Complex x) {
  require_off_pole(p, x);
  Complex value = evaluate(p.smooth_part, x);
  for (Eigen::Index k = 0; k < p.poles.size(); ++k)
    value += p.pole_strength / (x - p.poles[k]);
  return value;
}

Complex derivative(const MomentumFunction& p, Complex x) {
  require_off_pole(p, x);
  Complex value = derivative(p.smooth_part, x);
  for (Eigen::Index k = 0; k < p.poles.size(); ++k) {
    const Complex d = x - p.poles[k];
    value -= p.pole_strength / (d * d);
  }
  return value;
}

Complex momentum_from_wavefunction(const std::function<Complex(double)>& psi,
                                   const std::function<Complex(double)>& psi_prime,
                                   double x, double hbar) {
  const Complex value = psi(x);
  if (value == Complex{0.0, 0.0})
    throw PoleEvaluationError("wavefunction node: momentum function has a pole here");
  return Complex{0.0, -hbar} * psi_prime(x) / value;
}

Complex riccati_residual(const MomentumFunction& p, const QuantumProblem& problem,
                         double energy, double x) {
  validate(problem);
  const Complex value = evaluate(p, Complex{x, 0.0});
  const Complex slope = derivative(p, Complex{x, 0.0});
  const double potential =
      0.5 * problem.mass * problem.omega * problem.omega * x * x;
  return value * value - Complex{0.0, problem.hbar} * slope -
         2.0 * problem.mass * (energy - potential);
}

BoundState solve_bound_state(const QuantumProblem& problem) {
  validate(problem);
  const int n = problem.level;
  const double scale = std::sqrt(problem.hbar / (problem.mass * problem.omega));

  BoundState state;
  state.poles.resize(n);
  if (n > 0) {
    // In units hbar = m = omega = 1 the poles balance sum 1/(x_j - x_k) = x_j,
    // the unit-strength equilibrium in the field -x; dividing the pole
    // condition by -i hbar reduces it to exactly that system.
    const ChargeConfiguration equilibrium =
        solve_equilibrium(hermite_field(), n, Complex{1.0, 0.0});
    for (int j = 0; j < n; ++j)
      state.poles[j] = scale * equilibrium.positions[j].real();
  }

  state.energy = (n + 0.5) * problem.hbar * problem.omega;

  state.momentum.poles.resize(n);
  for (int j = 0; j < n; ++j) state.momentum.poles[j] = Complex{state.poles[j], 0.0};
  state.momentum.pole_strength = Complex{0.0, -problem.hbar};
  state.momentum.smooth_part = RationalField{};
  // Sign choice makes the pole-free level decay: p = + i m omega x.
  state.momentum.smooth_part.linear = Complex{0.0, problem.mass * problem.omega};
  return state;
}

Complex wavefunction_from_poles(const Eigen::VectorXd& poles,
                                const QuantumProblem& problem, double x) {
  validate(problem);
  Complex product{1.0, 0.0};
  for (Eigen::Index k = 0; k < poles.size(); ++k) product *= Complex{x - poles[k], 0.0};
  const double exponent =
      -problem.mass * problem.omega * x * x / (2.0 * problem.hbar);
  return product * std::exp(exponent);
}

}  // namespace stieltjes::qhj
