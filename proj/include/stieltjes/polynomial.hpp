#pragma once

#include <Eigen/Dense>
#include <complex>

namespace stieltjes {

using Complex = std::complex<double>;

// Dense polynomial in one complex variable, coefficients in ascending
// degree order with a nonzero leading coefficient.
struct CoefficientPolynomial {
  Eigen::VectorXcd coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

Complex evaluate(const CoefficientPolynomial& poly, Complex z);

CoefficientPolynomial derivative(const CoefficientPolynomial& poly);

// Value and first two derivatives at z. Evaluated by Horner recursion in
// extended precision so the ratio f''/f' stays trustworthy even when the
// expanded coefficients are much larger than the values they produce.
struct PolynomialJet {
  Complex value;
  Complex first;
  Complex second;
};

PolynomialJet evaluate_jet(const CoefficientPolynomial& poly, Complex z);

}  // namespace stieltjes
