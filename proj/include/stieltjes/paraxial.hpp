#pragma once

#include <Eigen/Dense>

#include "stieltjes/errors.hpp"
#include "stieltjes/polynomial.hpp"

namespace stieltjes::paraxial {

using AmplitudeGrid =
    Eigen::Array<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Complex scalar amplitude on a uniform transverse grid. amplitude(i, j)
// samples (x_i, y_j) with x_i = (i - nx/2) dx and y_j = (j - ny/2) dy;
// storage is row-major (x index outer). Boundary conditions are periodic;
// keeping the beam inside the central half of the grid is the caller's
// responsibility.
struct BeamField {
  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  double dy = 0.0;
  double k = 0.0;  // carrier wavenumber, > 0
  double z = 0.0;  // axial position
  AmplitudeGrid amplitude;
};

// Grid sizes must be powers of two >= 8, spacings and k positive,
// amplitude shaped nx x ny.
void validate(const BeamField& field);

double grid_x(const BeamField& field, int i);
double grid_y(const BeamField& field, int j);

// Plain discrete l2 norm sqrt(sum |a_ij|^2).
double l2_norm(const BeamField& field);

BeamField make_constant(int nx, int ny, double dx, double dy, double k,
                        Complex value);
// Envelope exp(-(x^2+y^2)/w0^2) at its waist (z = 0).
BeamField make_gaussian(int nx, int ny, double dx, double dy, double k,
                        double w0);

// One exact spectral step of the paraxial envelope equation
// u_xx + u_yy + 2ik u_z = 0: multiply the 2-D DFT by
// exp(-i (kx^2 + ky^2) dz / (2k)). Unconditionally stable, norm
// preserving, dz of either sign.
BeamField paraxial_propagate(const BeamField& field, double dz);

// Angular-spectrum step of the full Helmholtz equation for the field psi:
// propagating components gain exp(i dz sqrt(k^2 - kx^2 - ky^2)),
// evanescent ones decay as exp(-dz sqrt(kx^2 + ky^2 - k^2)). Requires
// dz >= 0.
BeamField helmholtz_propagate(const BeamField& field, double dz);

// psi = u e^{ikz} at the field's current z, and its exact inverse.
BeamField envelope_to_full(const BeamField& field);
BeamField full_to_envelope(const BeamField& field);

// Closed-form fundamental Gaussian envelope with waist w0 at z = 0 and
// unit peak:
//
//   u(x, y, z) = 1/(1 + i z/zR) exp(-(x^2+y^2) / (w0^2 (1 + i z/zR))),
//
// zR = k w0^2 / 2. Encodes the w0 sqrt(1+(z/zR)^2) width growth, Gouy
// phase and wavefront curvature in one expression; serves as the
// analytic reference for the propagators.
Complex gaussian_reference(double w0, double k, double z, double x, double y);

double rayleigh_range(double w0, double k);

struct DoubleSlitGeometry {
  double wavelength = 0.0;
  double separation = 0.0;   // slit center distance d
  double slit_width = 0.0;   // a, must satisfy a < d
  double distance = 0.0;     // aperture-to-screen distance L
  double screen_extent = 0.0;
  int samples = 0;
};

struct IntensityProfile {
  Eigen::VectorXd position;
  Eigen::VectorXd intensity;      // normalized to unit peak
  double fringe_spacing = 0.0;    // estimated from the profile
};

// Far-field double-slit pattern obtained by actually propagating the
// two-slit aperture with the paraxial propagator on a thin-strip grid
// (the Fraunhofer cos^2 x sinc^2 formula is the test oracle, not the
// implementation). The fringe-spacing estimate comes from the dominant
// interference peak of the profile's Fourier transform.
IntensityProfile double_slit(const DoubleSlitGeometry& geometry);

}  // namespace stieltjes::paraxial
