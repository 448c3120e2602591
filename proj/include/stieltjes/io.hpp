#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "stieltjes/equilibrium.hpp"
#include "stieltjes/paraxial.hpp"
#include "stieltjes/vortex.hpp"

namespace stieltjes::io {

// Shortest round-tripping decimal form; used for every number we write so
// identical runs produce byte-identical files.
std::string format_double(double value);
std::string format_complex(Complex value);  // "re,im"

nlohmann::json to_json(Complex value);            // [re, im]
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalField& field);
RationalField field_from_json(const nlohmann::json& j);
RationalField read_field_json(const std::string& path);

// Vortex simulation run description.
struct SimulationConfig {
  vortex::VortexSystem system;
  double t_end = 0.0;
  double dt = 1e-3;
  int output_stride = 1;
  bool allow_complex_strength = false;
};

SimulationConfig simulation_from_json(const nlohmann::json& j);
SimulationConfig read_simulation_config(const std::string& path);

// CSV columns: t, x_1, y_1, ..., x_N, y_N, impulse_re, impulse_im.
void write_trajectory_csv(std::ostream& out, const vortex::Trajectory& trajectory);

// CSV columns: index, position_re, position_im, residual_re, residual_im,
// residual_abs.
void write_positions_csv(std::ostream& out, const Eigen::VectorXcd& positions,
                         const Eigen::VectorXcd& residuals);

// CSV columns: position, intensity.
void write_intensity_csv(std::ostream& out, const paraxial::IntensityProfile& profile);

// Beam field file: one JSON header line {nx, ny, dx, dy, k, z, encoding},
// then nx rows of 2*ny comma-separated values (row-major, re/im
// interleaved).
void write_beam_field(std::ostream& out, const paraxial::BeamField& field);
void write_beam_field(const std::string& path, const paraxial::BeamField& field);
paraxial::BeamField read_beam_field(std::istream& in);
paraxial::BeamField read_beam_field(const std::string& path);

}  // namespace stieltjes::io
