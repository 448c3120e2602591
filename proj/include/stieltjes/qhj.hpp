#pragma once

#include <functional>

#include "stieltjes/equilibrium.hpp"

namespace stieltjes::qhj {

// Harmonic-oscillator bound-state problem V(x) = m omega^2 x^2 / 2 at
// quantum level n.
struct QuantumProblem {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  int level = 0;
};

void validate(const QuantumProblem& problem);

// Quantum momentum function as a pole expansion
//
//   p(x) = sum_k s / (x - x_k) + Q(x),  s = -i hbar,
//
// with a pole-free smooth part Q.
struct MomentumFunction {
  Eigen::VectorXcd poles;
  Complex pole_strength{0.0, 0.0};
  RationalField smooth_part;
};

Complex evaluate(const MomentumFunction& p, Complex x);
Complex derivative(const MomentumFunction& p, Complex x);

// p = -i hbar psi'(x) / psi(x). Throws PoleEvaluationError at a node of psi.
Complex momentum_from_wavefunction(const std::function<Complex(double)>& psi,
                                   const std::function<Complex(double)>& psi_prime,
                                   double x, double hbar);

// Residual of p^2 - i hbar p' - 2m (E - V(x)); identically zero when p is
// the momentum function of an energy-E eigenstate. dp/dx comes from the
// pole expansion analytically. Throws PoleEvaluationError within 1e-12 of
// a pole.
Complex riccati_residual(const MomentumFunction& p, const QuantumProblem& problem,
                         double energy, double x);

struct BoundState {
  Eigen::VectorXd poles;  // ascending, exactly `level` of them
  double energy = 0.0;
  MomentumFunction momentum;
};

// Maps the level-n problem to a charge equilibrium: in scaled coordinates
// the n poles satisfy sum_{k != j} 1/(x_j - x_k) - x_j = 0, i.e. they are
// the zeros of the degree-n Hermite polynomial; physical positions follow
// by x -> sqrt(hbar/(m omega)) x. The assembled momentum function is
// p(x) = sum_k -i hbar/(x - x_k) + i m omega x and E = (n + 1/2) hbar omega.
BoundState solve_bound_state(const QuantumProblem& problem);

// Unnormalized eigenfunction prod_k (x - x_k) * exp(-m omega x^2 / (2 hbar));
// its node set is exactly the pole set.
Complex wavefunction_from_poles(const Eigen::VectorXd& poles,
                                const QuantumProblem& problem, double x);

}  // namespace stieltjes::qhj
