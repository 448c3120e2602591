#include "stieltjes/vortex.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "stieltjes/errors.hpp"
#include "stieltjes/log.hpp"

namespace stieltjes::vortex {

namespace {

double min_pairwise_gap(const Eigen::VectorXcd& positions) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < positions.size(); ++j)
    for (Eigen::Index k = j + 1; k < positions.size(); ++k)
      gap = std::min(gap, std::abs(positions[j] - positions[k]));
  return gap;
}

Eigen::VectorXcd conjugate_velocity(const Eigen::VectorXcd& positions,
                                    const Eigen::VectorXcd& strengths,
                                    const RationalField& background) {
  const Eigen::Index n = positions.size();
  Eigen::VectorXcd v(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    Complex sum{0.0, 0.0};
    for (Eigen::Index b = 0; b < n; ++b) {
      if (b == a) continue;
      sum += strengths[b] / (positions[a] - positions[b]);
    }
    v[a] = sum + evaluate(background, positions[a]);
  }
  return v;
}

}  // namespace

VortexSystem make_system(const Eigen::VectorXcd& positions, Complex strength,
                         const RationalField& background) {
  VortexSystem system;
  system.positions = positions;
  system.strengths = Eigen::VectorXcd::Constant(positions.size(), strength);
  system.background = background;
  return system;
}

void validate(const VortexSystem& system) {
  if (system.positions.size() < 1)
    throw ParameterError("vortex system needs at least one vortex");
  if (system.positions.size() != system.strengths.size())
    throw ParameterError("positions and strengths differ in length");
  for (Eigen::Index a = 0; a < system.strengths.size(); ++a)
    if (system.strengths[a] == Complex{0.0, 0.0})
      throw ParameterError("vortex strengths must be nonzero");
  validate(system.background);
  if (system.positions.size() > 1 &&
      !(min_pairwise_gap(system.positions) > system.min_separation))
    throw DegenerateConfigurationError("vortices closer than the minimum separation");
}

Eigen::VectorXcd velocity(const VortexSystem& system) {
  validate(system);
  return conjugate_velocity(system.positions, system.strengths, system.background);
}

Complex linear_impulse(const VortexSystem& system) {
  Complex sum{0.0, 0.0};
  for (Eigen::Index a = 0; a < system.positions.size(); ++a)
    sum += system.strengths[a] * system.positions[a];
  return sum;
}

Trajectory integrate(const VortexSystem& system, double t_end, double dt,
                     const IntegrationOptions& options) {
  validate(system);
  if (!(dt > 0.0)) throw ParameterError("integration step must be positive");
  if (options.output_stride < 1) throw ParameterError("output stride must be >= 1");
  if (!options.allow_complex_strength)
    for (Eigen::Index a = 0; a < system.strengths.size(); ++a)
      if (system.strengths[a].imag() != 0.0)
        throw ParameterError(
            "complex vortex strength makes the flow non-Hamiltonian; "
            "pass allow_complex_strength to integrate anyway");

  const double t0 = system.time;
  const double span = t_end - t0;
  const double direction = span < 0.0 ? -1.0 : 1.0;
  const double total = std::abs(span);
  if (total / dt > 1e9) throw ParameterError("step count exceeds 1e9");
  const long steps = total == 0.0 ? 0 : std::max(1L, std::lround(std::ceil(total / dt - 1e-12)));

  Trajectory trajectory;
  const auto record = [&](double t, const Eigen::VectorXcd& x) {
    trajectory.times.push_back(t);
    trajectory.states.push_back(x);
    Complex impulse{0.0, 0.0};
    for (Eigen::Index a = 0; a < x.size(); ++a)
      impulse += system.strengths[a] * x[a];
    trajectory.impulses.push_back(impulse);
  };

  const auto stage = [&](const Eigen::VectorXcd& x) -> std::optional<Eigen::VectorXcd> {
    if (x.size() > 1 && !(min_pairwise_gap(x) > system.min_separation))
      return std::nullopt;
    return conjugate_velocity(x, system.strengths, system.background)
        .conjugate()
        .eval();
  };

  Eigen::VectorXcd x = system.positions;
  record(t0, x);

  for (long step = 0; step < steps; ++step) {
    const double done = static_cast<double>(step) * dt;
    const double h = direction * std::min(dt, total - done);

    const auto k1 = stage(x);
    const auto k2 = k1 ? stage(x + (0.5 * h) * *k1) : std::nullopt;
    const auto k3 = k2 ? stage(x + (0.5 * h) * *k2) : std::nullopt;
    const auto k4 = k3 ? stage(x + h * *k3) : std::nullopt;
    std::optional<Eigen::VectorXcd> next;
    if (k4) {
      const Eigen::VectorXcd candidate =
          x + (h / 6.0) * (*k1 + 2.0 * *k2 + 2.0 * *k3 + *k4);
      if (candidate.size() <= 1 ||
          min_pairwise_gap(candidate) > system.min_separation)
        next = candidate;
    }

    if (!next) {
      trajectory.status = TrajectoryStatus::collision_abort;
      std::ostringstream what;
      what << "pairwise separation fell below " << system.min_separation
           << " near t = " << t0 + direction * done;
      trajectory.diagnostic = what.str();
      log_info("integrate aborted: ", trajectory.diagnostic);
      return trajectory;
    }

    x = *next;
    const bool last = step + 1 == steps;
    if (last || (step + 1) % options.output_stride == 0)
      record(last ? t_end : t0 + direction * (static_cast<double>(step + 1) * dt), x);
  }

  return trajectory;
}

Observable position_observable(int alpha) {
  Observable obs;
  obs.value = [alpha](const Eigen::VectorXcd& z) { return z[alpha]; };
  obs.dx = [alpha](const Eigen::VectorXcd&, int a) {
    return a == alpha ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  };
  obs.dy = [alpha](const Eigen::VectorXcd&, int a) {
    return a == alpha ? Complex{0.0, 1.0} : Complex{0.0, 0.0};
  };
  return obs;
}

Observable conjugate_observable(int alpha) {
  Observable obs;
  obs.value = [alpha](const Eigen::VectorXcd& z) { return std::conj(z[alpha]); };
  obs.dx = [alpha](const Eigen::VectorXcd&, int a) {
    return a == alpha ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  };
  obs.dy = [alpha](const Eigen::VectorXcd&, int a) {
    return a == alpha ? Complex{0.0, -1.0} : Complex{0.0, 0.0};
  };
  return obs;
}

Observable coordinate_sum_x() {
  Observable obs;
  obs.value = [](const Eigen::VectorXcd& z) {
    return Complex{z.real().sum(), 0.0};
  };
  obs.dx = [](const Eigen::VectorXcd&, int) { return Complex{1.0, 0.0}; };
  obs.dy = [](const Eigen::VectorXcd&, int) { return Complex{0.0, 0.0}; };
  return obs;
}

Observable coordinate_sum_y() {
  Observable obs;
  obs.value = [](const Eigen::VectorXcd& z) {
    return Complex{z.imag().sum(), 0.0};
  };
  obs.dx = [](const Eigen::VectorXcd&, int) { return Complex{0.0, 0.0}; };
  obs.dy = [](const Eigen::VectorXcd&, int) { return Complex{1.0, 0.0}; };
  return obs;
}

Observable constant_observable(Complex c) {
  Observable obs;
  obs.value = [c](const Eigen::VectorXcd&) { return c; };
  obs.dx = [](const Eigen::VectorXcd&, int) { return Complex{0.0, 0.0}; };
  obs.dy = [](const Eigen::VectorXcd&, int) { return Complex{0.0, 0.0}; };
  return obs;
}

Observable operator+(const Observable& f, const Observable& g) {
  Observable obs;
  obs.value = [f = f.value, g = g.value](const Eigen::VectorXcd& z) {
    return f(z) + g(z);
  };
  obs.dx = [f = f.dx, g = g.dx](const Eigen::VectorXcd& z, int a) {
    return f(z, a) + g(z, a);
  };
  obs.dy = [f = f.dy, g = g.dy](const Eigen::VectorXcd& z, int a) {
    return f(z, a) + g(z, a);
  };
  return obs;
}

Observable operator*(const Observable& f, const Observable& g) {
  Observable obs;
  obs.value = [fv = f.value, gv = g.value](const Eigen::VectorXcd& z) {
    return fv(z) * gv(z);
  };
  obs.dx = [f, g](const Eigen::VectorXcd& z, int a) {
    return f.dx(z, a) * g.value(z) + f.value(z) * g.dx(z, a);
  };
  obs.dy = [f, g](const Eigen::VectorXcd& z, int a) {
    return f.dy(z, a) * g.value(z) + f.value(z) * g.dy(z, a);
  };
  return obs;
}

Observable operator*(Complex c, const Observable& f) {
  return constant_observable(c) * f;
}

Complex bracket(const Observable& f, const Observable& g,
                const VortexSystem& system) {
  validate(system);
  const auto& z = system.positions;
  Complex sum{0.0, 0.0};
  for (Eigen::Index a = 0; a < z.size(); ++a) {
    const int ia = static_cast<int>(a);
    sum += system.strengths[a] *
           (f.dx(z, ia) * g.dy(z, ia) - f.dy(z, ia) * g.dx(z, ia));
  }
  return sum;
}

}  // namespace stieltjes::vortex
