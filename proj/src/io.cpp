#include "stieltjes/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace stieltjes::io {

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string format_complex(Complex value) {
  return format_double(value.real()) + "," + format_double(value.imag());
}

nlohmann::json to_json(Complex value) {
  return nlohmann::json::array({value.real(), value.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParameterError("expected a complex number as [re, im]");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json to_json(const RationalField& field) {
  nlohmann::json poles = nlohmann::json::array();
  for (const auto& pole : field.poles)
    poles.push_back({{"location", to_json(pole.location)},
                     {"charge", to_json(pole.charge)}});
  return {{"linear", to_json(field.linear)},
          {"constant", to_json(field.constant)},
          {"poles", poles}};
}

RationalField field_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParameterError("field description must be an object");
  RationalField field;
  if (j.contains("linear")) field.linear = complex_from_json(j.at("linear"));
  if (j.contains("constant")) field.constant = complex_from_json(j.at("constant"));
  if (j.contains("poles")) {
    if (!j.at("poles").is_array()) throw ParameterError("poles must be an array");
    for (const auto& entry : j.at("poles"))
      field.poles.push_back({complex_from_json(entry.at("location")),
                             complex_from_json(entry.at("charge"))});
  }
  validate(field);
  return field;
}

RationalField read_field_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open field file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError("invalid JSON in " + path + ": " + e.what());
  }
  return field_from_json(j);
}

SimulationConfig simulation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParameterError("simulation config must be an object");
  SimulationConfig config;

  if (!j.contains("vortices") || !j.at("vortices").is_array() ||
      j.at("vortices").empty())
    throw ParameterError("config needs a non-empty vortices array");
  const auto& vortices = j.at("vortices");
  config.system.positions.resize(vortices.size());
  config.system.strengths.resize(vortices.size());
  for (std::size_t a = 0; a < vortices.size(); ++a) {
    config.system.positions[a] = complex_from_json(vortices[a].at("position"));
    config.system.strengths[a] = complex_from_json(vortices[a].at("strength"));
  }

  if (j.contains("background"))
    config.system.background = field_from_json(j.at("background"));
  if (j.contains("time")) config.system.time = j.at("time").get<double>();
  if (j.contains("min_separation"))
    config.system.min_separation = j.at("min_separation").get<double>();

  if (!j.contains("t_end")) throw ParameterError("config needs t_end");
  config.t_end = j.at("t_end").get<double>();
  if (j.contains("dt")) config.dt = j.at("dt").get<double>();
  if (j.contains("stride")) config.output_stride = j.at("stride").get<int>();
  if (j.contains("allow_complex_strength"))
    config.allow_complex_strength = j.at("allow_complex_strength").get<bool>();

  if (!(config.dt > 0.0)) throw ParameterError("dt must be positive");
  if (config.output_stride < 1) throw ParameterError("stride must be >= 1");
  return config;
}

SimulationConfig read_simulation_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError("invalid JSON in " + path + ": " + e.what());
  }
  return simulation_from_json(j);
}

void write_trajectory_csv(std::ostream& out, const vortex::Trajectory& trajectory) {
  const int n = trajectory.vortex_count();
  out << "t";
  for (int a = 1; a <= n; ++a) out << ",x_" << a << ",y_" << a;
  out << ",impulse_re,impulse_im\n";
  for (std::size_t s = 0; s < trajectory.times.size(); ++s) {
    out << format_double(trajectory.times[s]);
    const auto& state = trajectory.states[s];
    for (int a = 0; a < n; ++a)
      out << "," << format_double(state[a].real()) << ","
          << format_double(state[a].imag());
    out << "," << format_double(trajectory.impulses[s].real()) << ","
        << format_double(trajectory.impulses[s].imag()) << "\n";
  }
}

void write_positions_csv(std::ostream& out, const Eigen::VectorXcd& positions,
                         const Eigen::VectorXcd& residuals) {
  out << "index,position_re,position_im,residual_re,residual_im,residual_abs\n";
  for (Eigen::Index j = 0; j < positions.size(); ++j)
    out << j << "," << format_complex(positions[j]) << ","
        << format_complex(residuals[j]) << ","
        << format_double(std::abs(residuals[j])) << "\n";
}

void write_intensity_csv(std::ostream& out,
                         const paraxial::IntensityProfile& profile) {
  out << "position,intensity\n";
  for (Eigen::Index s = 0; s < profile.position.size(); ++s)
    out << format_double(profile.position[s]) << ","
        << format_double(profile.intensity[s]) << "\n";
}

void write_beam_field(std::ostream& out, const paraxial::BeamField& field) {
  paraxial::validate(field);
  nlohmann::json header{{"nx", field.nx},     {"ny", field.ny},
                        {"dx", field.dx},     {"dy", field.dy},
                        {"k", field.k},       {"z", field.z},
                        {"encoding", "csv"}};
  out << header.dump() << "\n";
  for (int i = 0; i < field.nx; ++i) {
    for (int j = 0; j < field.ny; ++j) {
      if (j) out << ",";
      out << format_complex(field.amplitude(i, j));
    }
    out << "\n";
  }
}

void write_beam_field(const std::string& path, const paraxial::BeamField& field) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open output file: " + path);
  write_beam_field(out, field);
}

paraxial::BeamField read_beam_field(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("empty beam field stream");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("invalid beam field header: ") + e.what());
  }

  paraxial::BeamField field;
  field.nx = header.at("nx").get<int>();
  field.ny = header.at("ny").get<int>();
  field.dx = header.at("dx").get<double>();
  field.dy = header.at("dy").get<double>();
  field.k = header.at("k").get<double>();
  field.z = header.at("z").get<double>();
  if (header.value("encoding", "csv") != "csv")
    throw ParameterError("unsupported beam field encoding");
  if (field.nx <= 0 || field.ny <= 0 || field.nx > (1 << 22) ||
      field.ny > (1 << 22))
    throw ParameterError("beam field header has an implausible grid size");

  field.amplitude.resize(field.nx, field.ny);
  for (int i = 0; i < field.nx; ++i) {
    if (!std::getline(in, line))
      throw ParameterError("beam field payload ended early");
    const char* ptr = line.data();
    const char* end = line.data() + line.size();
    for (int j = 0; j < 2 * field.ny; ++j) {
      double value = 0.0;
      const auto parsed = std::from_chars(ptr, end, value);
      if (parsed.ec != std::errc{})
        throw ParameterError("beam field payload has a malformed number");
      ptr = parsed.ptr;
      if (ptr != end && *ptr == ',') ++ptr;
      if (j % 2 == 0)
        field.amplitude(i, j / 2).real(value);
      else
        field.amplitude(i, j / 2).imag(value);
    }
  }
  paraxial::validate(field);
  return field;
}

paraxial::BeamField read_beam_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open beam field file: " + path);
  return read_beam_field(in);
}

}  // namespace stieltjes::io
