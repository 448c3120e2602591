#include "stieltjes/paraxial.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <functional>

#include "stieltjes/log.hpp"

namespace stieltjes::paraxial {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// DFT frequency 2 pi m / (n d) with the upper half folded to negative m.
double spatial_frequency(int index, int n, double d) {
  const int m = index <= n / 2 ? index : index - n;
  return 2.0 * kPi * static_cast<double>(m) / (static_cast<double>(n) * d);
}

void fft2_inplace(AmplitudeGrid& grid, bool inverse) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd in, out;
  for (Eigen::Index i = 0; i < grid.rows(); ++i) {
    in = grid.row(i).matrix().transpose();
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    grid.row(i) = out.transpose().array();
  }
  for (Eigen::Index j = 0; j < grid.cols(); ++j) {
    in = grid.col(j).matrix();
    if (inverse)
      fft.inv(out, in);
    else
      fft.fwd(out, in);
    grid.col(j) = out.array();
  }
}

// Multiply the transverse spectrum by mult(kx, ky) and transform back.
BeamField apply_spectral(const BeamField& field,
                         const std::function<Complex(double, double)>& mult) {
  BeamField out = field;
  fft2_inplace(out.amplitude, false);
  for (int i = 0; i < field.nx; ++i) {
    const double kx = spatial_frequency(i, field.nx, field.dx);
    for (int j = 0; j < field.ny; ++j) {
      const double ky = spatial_frequency(j, field.ny, field.dy);
      out.amplitude(i, j) *= mult(kx, ky);
    }
  }
  fft2_inplace(out.amplitude, true);
  return out;
}

}  // namespace

void validate(const BeamField& field) {
  if (!power_of_two(field.nx) || !power_of_two(field.ny) || field.nx < 8 ||
      field.ny < 8)
    throw ParameterError("grid sizes must be powers of two >= 8");
  if (!(field.dx > 0.0) || !(field.dy > 0.0))
    throw ParameterError("grid spacings must be positive");
  if (!(field.k > 0.0)) throw ParameterError("wavenumber must be positive");
  if (field.amplitude.rows() != field.nx || field.amplitude.cols() != field.ny)
    throw ParameterError("amplitude shape does not match nx x ny");
}

double grid_x(const BeamField& field, int i) {
  return (i - field.nx / 2) * field.dx;
}

double grid_y(const BeamField& field, int j) {
  return (j - field.ny / 2) * field.dy;
}

double l2_norm(const BeamField& field) {
  return field.amplitude.matrix().norm();
}

BeamField make_constant(int nx, int ny, double dx, double dy, double k,
                        Complex value) {
  BeamField field;
  field.nx = nx;
  field.ny = ny;
  field.dx = dx;
  field.dy = dy;
  field.k = k;
  field.amplitude = AmplitudeGrid::Constant(nx, ny, value);
  validate(field);
  return field;
}

BeamField make_gaussian(int nx, int ny, double dx, double dy, double k,
                        double w0) {
  if (!(w0 > 0.0)) throw ParameterError("waist must be positive");
  BeamField field = make_constant(nx, ny, dx, dy, k, Complex{0.0, 0.0});
  for (int i = 0; i < nx; ++i) {
    const double x = grid_x(field, i);
    for (int j = 0; j < ny; ++j) {
      const double y = grid_y(field, j);
      field.amplitude(i, j) = std::exp(-(x * x + y * y) / (w0 * w0));
    }
  }
  return field;
}

BeamField paraxial_propagate(const BeamField& field, double dz) {
  validate(field);
  const double k = field.k;
  BeamField out = apply_spectral(field, [k, dz](double kx, double ky) {
    return std::polar(1.0, -(kx * kx + ky * ky) * dz / (2.0 * k));
  });
  out.z = field.z + dz;
  return out;
}

BeamField helmholtz_propagate(const BeamField& field, double dz) {
  validate(field);
  if (dz < 0.0)
    throw ParameterError("helmholtz_propagate requires dz >= 0 "
                         "(evanescent components grow backward)");
  const double k = field.k;
  BeamField out = apply_spectral(field, [k, dz](double kx, double ky) -> Complex {
    const double kt2 = kx * kx + ky * ky;
    const double k2 = k * k;
    if (kt2 <= k2) return std::polar(1.0, dz * std::sqrt(k2 - kt2));
    return Complex{std::exp(-dz * std::sqrt(kt2 - k2)), 0.0};
  });
  out.z = field.z + dz;
  return out;
}

BeamField envelope_to_full(const BeamField& field) {
  validate(field);
  BeamField out = field;
  out.amplitude *= std::polar(1.0, field.k * field.z);
  return out;
}

BeamField full_to_envelope(const BeamField& field) {
  validate(field);
  BeamField out = field;
  out.amplitude /= std::polar(1.0, field.k * field.z);
  return out;
}

Complex gaussian_reference(double w0, double k, double z, double x, double y) {
  if (!(w0 > 0.0) || !(k > 0.0)) throw ParameterError("w0 and k must be positive");
  const double zr = rayleigh_range(w0, k);
  const Complex q{1.0, z / zr};
  return std::exp(-(x * x + y * y) / (w0 * w0 * q)) / q;
}

double rayleigh_range(double w0, double k) { return 0.5 * k * w0 * w0; }

namespace {

// Quadratically interpolated argmax of the profile's discrete Fourier
// magnitude, searched above the single-slit envelope band.
double fringe_spacing_estimate(const Eigen::VectorXd& intensity, double extent,
                               double envelope_frequency) {
  const int n = static_cast<int>(intensity.size());
  const int half = n / 2;
  Eigen::VectorXd magnitude(half + 1);
  for (int m = 0; m <= half; ++m) {
    Complex acc{0.0, 0.0};
    for (int s = 0; s < n; ++s)
      acc += intensity[s] *
             std::polar(1.0, -2.0 * kPi * static_cast<double>(m) * s / n);
    magnitude[m] = std::abs(acc);
  }

  const int band_edge = static_cast<int>(std::floor(envelope_frequency * extent));
  const int first = std::min(std::max(2, band_edge + 2), half - 1);
  int peak = first;
  for (int m = first; m < half; ++m)
    if (magnitude[m] > magnitude[peak]) peak = m;
  if (peak <= 0 || peak >= half) return 0.0;

  const double ym = magnitude[peak - 1];
  const double y0 = magnitude[peak];
  const double yp = magnitude[peak + 1];
  const double denom = ym - 2.0 * y0 + yp;
  const double shift = denom == 0.0 ? 0.0 : 0.5 * (ym - yp) / denom;
  const double frequency = (peak + shift) / extent;
  return frequency > 0.0 ? 1.0 / frequency : 0.0;
}

}  // namespace

IntensityProfile double_slit(const DoubleSlitGeometry& g) {
  if (!(g.wavelength > 0.0) || !(g.separation > 0.0) || !(g.slit_width > 0.0) ||
      !(g.distance > 0.0) || !(g.screen_extent > 0.0))
    throw ParameterError("double slit geometry values must be positive");
  if (g.samples < 16) throw ParameterError("need at least 16 screen samples");
  if (!(g.slit_width < g.separation))
    throw ParameterError("slit width must be smaller than the separation");
  if (!(g.distance > 10.0 * g.separation))
    throw ParameterError("screen distance must be far compared to the slits");

  const double lambda = g.wavelength;
  const double k = 2.0 * kPi / lambda;
  const double fringe = lambda * g.distance / g.separation;

  // Resolve the slits and the fringes, and make the grid wide enough that
  // the farthest-travelling spectral component (angle lambda/(2 dx)) lands
  // inside it instead of wrapping into the screen window.
  const double dx = std::min(g.slit_width / 8.0, fringe / 16.0);
  const double needed_extent = lambda * g.distance / dx + g.screen_extent +
                               g.separation + g.slit_width;
  int nx = 1024;
  while (nx * dx < needed_extent && nx < (1 << 22)) nx *= 2;
  if (nx * dx < needed_extent)
    throw ParameterError("grid for this geometry would alias (too many samples)");
  log_debug("double_slit grid nx=", nx, " dx=", dx);

  const int ny = 8;
  BeamField aperture = make_constant(nx, ny, dx, dx, k, Complex{0.0, 0.0});
  for (int i = 0; i < nx; ++i) {
    const double x = grid_x(aperture, i);
    const bool inside = std::abs(std::abs(x) - 0.5 * g.separation) <= 0.5 * g.slit_width;
    if (inside)
      for (int j = 0; j < ny; ++j) aperture.amplitude(i, j) = Complex{1.0, 0.0};
  }

  const BeamField screen = paraxial_propagate(aperture, g.distance);

  IntensityProfile profile;
  profile.position.resize(g.samples);
  profile.intensity.resize(g.samples);
  const int mid = ny / 2;
  const double step = g.screen_extent / (g.samples - 1);
  for (int s = 0; s < g.samples; ++s) {
    const double x = -0.5 * g.screen_extent + s * step;
    // Linear interpolation between the two bracketing grid columns.
    const double u = x / dx + nx / 2;
    const int i0 = static_cast<int>(std::floor(u));
    const double w = u - i0;
    if (i0 < 0 || i0 + 1 >= nx)
      throw ParameterError("screen extent exceeds the propagation grid");
    const Complex value = (1.0 - w) * screen.amplitude(i0, mid) +
                          w * screen.amplitude(i0 + 1, mid);
    profile.position[s] = x;
    profile.intensity[s] = std::norm(value);
  }
  const double peak = profile.intensity.maxCoeff();
  if (peak > 0.0) profile.intensity /= peak;

  profile.fringe_spacing = fringe_spacing_estimate(
      profile.intensity, g.screen_extent, g.slit_width / (lambda * g.distance));
  return profile;
}

}  // namespace stieltjes::paraxial
