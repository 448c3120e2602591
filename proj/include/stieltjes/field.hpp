#pragma once

#include <vector>

#include "stieltjes/orthopoly.hpp"
#include "stieltjes/polynomial.hpp"

namespace stieltjes {

// Rational background field
//
//   Q(z) = c1 z + c0 + sum_m q_m / (z - a_m)
//
// covering linear confining fields, constant backgrounds and the fixed
// charges of the classical equilibria in one representation.
struct RationalField {
  struct Pole {
    Complex location;
    Complex charge;
  };

  Complex linear{0.0, 0.0};    // c1
  Complex constant{0.0, 0.0};  // c0
  std::vector<Pole> poles;
};

// Throws DegenerateConfigurationError if two poles coincide.
void validate(const RationalField& field);

Complex evaluate(const RationalField& field, Complex z);
Complex derivative(const RationalField& field, Complex z);

// Distance from z to the nearest pole location (infinity when pole-free).
double pole_distance(const RationalField& field, Complex z);

// Scale every coefficient; the equilibria of (gamma, gamma * Q) coincide
// with those of (1, Q) for any nonzero gamma.
RationalField operator*(Complex factor, const RationalField& field);

// Background fields whose unit-strength equilibria are the roots of the
// classical orthogonal polynomials.
RationalField hermite_field();                             // -z
RationalField laguerre_field(double alpha);                // -1/2 + (alpha+1)/(2z)
RationalField jacobi_field(double alpha, double beta);     // poles at +-1
RationalField constant_field(Complex value);
RationalField field_for(const orthopoly::PolynomialSpec& spec);

}  // namespace stieltjes
