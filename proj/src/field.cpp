#include "stieltjes/field.hpp"

#include <cmath>
#include <limits>

#include "stieltjes/errors.hpp"

namespace stieltjes {

void validate(const RationalField& field) {
  for (std::size_t m = 0; m < field.poles.size(); ++m)
    for (std::size_t l = m + 1; l < field.poles.size(); ++l)
      if (field.poles[m].location == field.poles[l].location)
        throw DegenerateConfigurationError("rational field has coincident poles");
}

Complex evaluate(const RationalField& field, Complex z) {
  Complex value = field.linear * z + field.constant;
  for (const auto& pole : field.poles) value += pole.charge / (z - pole.location);
  return value;
}

Complex derivative(const RationalField& field, Complex z) {
  Complex value = field.linear;
  for (const auto& pole : field.poles) {
    const Complex d = z - pole.location;
    value -= pole.charge / (d * d);
  }
  return value;
}

double pole_distance(const RationalField& field, Complex z) {
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& pole : field.poles)
    dist = std::min(dist, std::abs(z - pole.location));
  return dist;
}

RationalField operator*(Complex factor, const RationalField& field) {
  RationalField out = field;
  out.linear *= factor;
  out.constant *= factor;
  for (auto& pole : out.poles) pole.charge *= factor;
  return out;
}

RationalField hermite_field() {
  RationalField field;
  field.linear = Complex{-1.0, 0.0};
  return field;
}

RationalField laguerre_field(double alpha) {
  RationalField field;
  field.constant = Complex{-0.5, 0.0};
  field.poles.push_back({Complex{0.0, 0.0}, Complex{0.5 * (alpha + 1.0), 0.0}});
  return field;
}

RationalField jacobi_field(double alpha, double beta) {
  RationalField field;
  field.poles.push_back({Complex{1.0, 0.0}, Complex{0.5 * (alpha + 1.0), 0.0}});
  field.poles.push_back({Complex{-1.0, 0.0}, Complex{0.5 * (beta + 1.0), 0.0}});
  return field;
}

RationalField constant_field(Complex value) {
  RationalField field;
  field.constant = value;
  return field;
}

RationalField field_for(const orthopoly::PolynomialSpec& spec) {
  orthopoly::validate(spec);
  switch (spec.family) {
    case orthopoly::Family::hermite:
      return hermite_field();
    case orthopoly::Family::laguerre:
      return laguerre_field(spec.alpha);
    case orthopoly::Family::jacobi:
      return jacobi_field(spec.alpha, spec.beta);
  }
  throw ParameterError("unknown polynomial family");
}

}  // namespace stieltjes
