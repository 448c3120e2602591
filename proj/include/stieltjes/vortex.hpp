#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stieltjes/field.hpp"

namespace stieltjes::vortex {

// N point vortices on the complex plane with per-vortex strengths and an
// optional rational background flow. The conjugate velocity of vortex a is
//
//   dzbar_a/dt = sum_{b != a} Gamma_b / (z_a - z_b) + W(z_a)
//
// with no 1/(2 pi i) hydrodynamic prefactor, so an equal pair moves
// radially rather than orbiting. Charge equilibria are exactly the
// stationary points of this flow.
struct VortexSystem {
  Eigen::VectorXcd positions;
  Eigen::VectorXcd strengths;
  RationalField background;
  double time = 0.0;
  double min_separation = 1e-8;
};

VortexSystem make_system(const Eigen::VectorXcd& positions, Complex strength,
                         const RationalField& background = {});

void validate(const VortexSystem& system);

// Conjugate velocities dzbar_a/dt, one per vortex.
Eigen::VectorXcd velocity(const VortexSystem& system);

// sum_a Gamma_a z_a; conserved under pure pairwise interaction.
Complex linear_impulse(const VortexSystem& system);

enum class TrajectoryStatus { completed, collision_abort };

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
  std::vector<Complex> impulses;
  TrajectoryStatus status = TrajectoryStatus::completed;
  std::string diagnostic;

  int vortex_count() const {
    return states.empty() ? 0 : static_cast<int>(states.front().size());
  }
};

struct IntegrationOptions {
  int output_stride = 1;
  // With Im(Gamma) != 0 the flow is not Hamiltonian and trajectories
  // generically collapse or blow up; refuse unless asked explicitly.
  bool allow_complex_strength = false;
};

// Classical fixed-step 4th-order integration of the 2N real ODEs from
// system.time to t_end (backward when t_end < system.time). Sampled every
// output_stride steps plus the endpoint. If any pairwise gap falls below
// min_separation the run aborts and the partial trajectory is returned
// with status collision_abort.
Trajectory integrate(const VortexSystem& system, double t_end, double dt,
                     const IntegrationOptions& options = {});

// Observable of the vortex coordinates with analytic partial derivatives
// with respect to x_a and y_a (z_a = x_a + i y_a).
struct Observable {
  std::function<Complex(const Eigen::VectorXcd&)> value;
  std::function<Complex(const Eigen::VectorXcd&, int)> dx;
  std::function<Complex(const Eigen::VectorXcd&, int)> dy;
};

Observable position_observable(int alpha);    // z_alpha
Observable conjugate_observable(int alpha);   // zbar_alpha
Observable coordinate_sum_x();                // sum_a x_a
Observable coordinate_sum_y();                // sum_a y_a
Observable constant_observable(Complex c);

Observable operator+(const Observable& f, const Observable& g);
Observable operator*(const Observable& f, const Observable& g);
Observable operator*(Complex c, const Observable& f);

// Kirchhoff bracket
//
//   [f, g] = sum_a Gamma_a (df/dx_a dg/dy_a - df/dy_a dg/dx_a)
//
// evaluated at the system's current positions. Coordinate pairs give
// [z_a, zbar_b] = -2i delta_ab Gamma_a and [sum x, sum y] = sum Gamma_a.
Complex bracket(const Observable& f, const Observable& g,
                const VortexSystem& system);

}  // namespace stieltjes::vortex
