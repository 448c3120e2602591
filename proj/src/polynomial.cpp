#include "stieltjes/polynomial.hpp"

#include <vector>

#include "stieltjes/errors.hpp"

namespace stieltjes {

Complex evaluate(const CoefficientPolynomial& poly, Complex z) {
  const auto& c = poly.coefficients;
  if (c.size() == 0) return Complex{0.0, 0.0};
  Complex acc = c[c.size() - 1];
  for (Eigen::Index i = c.size() - 2; i >= 0; --i) acc = acc * z + c[i];
  return acc;
}

CoefficientPolynomial derivative(const CoefficientPolynomial& poly) {
  const auto& c = poly.coefficients;
  if (c.size() <= 1) {
    CoefficientPolynomial zero;
    zero.coefficients = Eigen::VectorXcd::Zero(1);
    return zero;
  }
  CoefficientPolynomial out;
  out.coefficients.resize(c.size() - 1);
  for (Eigen::Index i = 1; i < c.size(); ++i)
    out.coefficients[i - 1] = static_cast<double>(i) * c[i];
  return out;
}

namespace {

using LComplex = std::complex<long double>;

LComplex horner(const std::vector<LComplex>& c, LComplex z) {
  if (c.empty()) return LComplex{0.0L, 0.0L};
  LComplex acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

}  // namespace

PolynomialJet evaluate_jet(const CoefficientPolynomial& poly, Complex z) {
  const auto& c = poly.coefficients;
  if (c.size() == 0) throw ParameterError("evaluate_jet: empty polynomial");

  const std::size_t n = static_cast<std::size_t>(c.size());
  std::vector<LComplex> c0(n);
  for (std::size_t i = 0; i < n; ++i)
    c0[i] = LComplex{static_cast<long double>(c[i].real()),
                     static_cast<long double>(c[i].imag())};

  std::vector<LComplex> c1, c2;
  c1.reserve(n > 1 ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i)
    c1.push_back(static_cast<long double>(i) * c0[i]);
  c2.reserve(c1.size() > 1 ? c1.size() - 1 : 0);
  for (std::size_t i = 1; i < c1.size(); ++i)
    c2.push_back(static_cast<long double>(i) * c1[i]);

  const LComplex lz{static_cast<long double>(z.real()),
                    static_cast<long double>(z.imag())};
  const LComplex f = horner(c0, lz);
  const LComplex fp = horner(c1, lz);
  const LComplex fpp = horner(c2, lz);

  PolynomialJet jet;
  jet.value = Complex{static_cast<double>(f.real()), static_cast<double>(f.imag())};
  jet.first = Complex{static_cast<double>(fp.real()), static_cast<double>(fp.imag())};
  jet.second = Complex{static_cast<double>(fpp.real()), static_cast<double>(fpp.imag())};
  return jet;
}

}  // namespace stieltjes
