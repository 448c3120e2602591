#include "stieltjes/orthopoly.hpp"

#include <cmath>
#include <limits>

namespace stieltjes::orthopoly {

PolynomialSpec hermite(int degree) { return {Family::hermite, degree, 0.0, 0.0}; }

PolynomialSpec laguerre(int degree, double alpha) {
  return {Family::laguerre, degree, alpha, 0.0};
}

PolynomialSpec jacobi(int degree, double alpha, double beta) {
  return {Family::jacobi, degree, alpha, beta};
}

void validate(const PolynomialSpec& spec) {
  if (spec.degree < 0) throw ParameterError("polynomial degree must be >= 0");
  switch (spec.family) {
    case Family::hermite:
      return;
    case Family::laguerre:
      if (!(spec.alpha > -1.0))
        throw ParameterError("laguerre requires alpha > -1");
      return;
    case Family::jacobi:
      if (!(spec.alpha > -1.0) || !(spec.beta > -1.0))
        throw ParameterError("jacobi requires alpha > -1 and beta > -1");
      return;
  }
  throw ParameterError("unknown polynomial family");
}

namespace {

double eval_hermite(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_laguerre(int n, double alpha, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_jacobi(int n, double alpha, double beta, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * ((alpha + beta + 2.0) * x + (alpha - beta));
  for (int k = 2; k <= n; ++k) {
    // Standard three-term recurrence; the k = 1 step is hard-coded above
    // because its general-form leading factor vanishes when alpha+beta = -1.
    const double s = 2.0 * k + alpha + beta;
    const double c0 = 2.0 * k * (k + alpha + beta) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
    const double c2 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double next = (c1 * cur - c2 * prev) / c0;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Monic three-term recurrence coefficients:
// pi_{k+1} = (x - a_k) pi_k - b_k pi_{k-1}. b_0 is unused.
void monic_coefficients(const PolynomialSpec& spec, Eigen::VectorXd& a,
                        Eigen::VectorXd& b) {
  const int n = spec.degree;
  a.resize(n);
  b.resize(n);
  switch (spec.family) {
    case Family::hermite:
      for (int k = 0; k < n; ++k) {
        a[k] = 0.0;
        b[k] = 0.5 * k;
      }
      return;
    case Family::laguerre:
      for (int k = 0; k < n; ++k) {
        a[k] = 2.0 * k + spec.alpha + 1.0;
        b[k] = k * (k + spec.alpha);
      }
      return;
    case Family::jacobi: {
      const double al = spec.alpha;
      const double be = spec.beta;
      for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + al + be;
        a[k] = (k == 0) ? (be - al) / (al + be + 2.0)
                        : (be * be - al * al) / (s * (s + 2.0));
        if (k == 0) {
          b[k] = 0.0;
        } else if (k == 1) {
          // General formula is 0/0 when alpha+beta = -1; the (1+alpha+beta)
          // factors cancel.
          b[k] = 4.0 * (1.0 + al) * (1.0 + be) /
                 ((2.0 + al + be) * (2.0 + al + be) * (3.0 + al + be));
        } else {
          b[k] = 4.0 * k * (k + al) * (k + be) * (k + al + be) /
                 (s * s * (s + 1.0) * (s - 1.0));
        }
      }
      return;
    }
  }
}

// Monic value/derivative ratio pi_n/pi_n' with periodic rescaling, for
// Newton polishing at any degree without overflow.
double monic_newton_ratio(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                          double x) {
  const int n = static_cast<int>(a.size());
  double p_prev = 0.0, p_cur = 1.0;
  double d_prev = 0.0, d_cur = 0.0;
  for (int k = 0; k < n; ++k) {
    const double p_next = (x - a[k]) * p_cur - (k > 0 ? b[k] * p_prev : 0.0);
    const double d_next =
        p_cur + (x - a[k]) * d_cur - (k > 0 ? b[k] * d_prev : 0.0);
    p_prev = p_cur;
    p_cur = p_next;
    d_prev = d_cur;
    d_cur = d_next;
    const double mag = std::max(std::abs(p_cur), std::abs(d_cur));
    if (mag > 1e250) {
      const double scale = 1e-250;
      p_prev *= scale;
      p_cur *= scale;
      d_prev *= scale;
      d_cur *= scale;
    }
  }
  if (d_cur == 0.0) return 0.0;
  return p_cur / d_cur;
}

}  // namespace

double eval(const PolynomialSpec& spec, double x) {
  validate(spec);
  switch (spec.family) {
    case Family::hermite:
      return eval_hermite(spec.degree, x);
    case Family::laguerre:
      return eval_laguerre(spec.degree, spec.alpha, x);
    case Family::jacobi:
      return eval_jacobi(spec.degree, spec.alpha, spec.beta, x);
  }
  throw ParameterError("unknown polynomial family");
}

double derivative_eval(const PolynomialSpec& spec, double x, int order) {
  validate(spec);
  if (order != 1 && order != 2)
    throw ParameterError("derivative order must be 1 or 2");
  const int n = spec.degree;
  if (n < order) return 0.0;
  switch (spec.family) {
    case Family::hermite:
      if (order == 1) return 2.0 * n * eval_hermite(n - 1, x);
      return 4.0 * n * (n - 1.0) * eval_hermite(n - 2, x);
    case Family::laguerre:
      if (order == 1) return -eval_laguerre(n - 1, spec.alpha + 1.0, x);
      return eval_laguerre(n - 2, spec.alpha + 2.0, x);
    case Family::jacobi: {
      const double s = n + spec.alpha + spec.beta + 1.0;
      if (order == 1)
        return 0.5 * s * eval_jacobi(n - 1, spec.alpha + 1.0, spec.beta + 1.0, x);
      return 0.25 * s * (s + 1.0) *
             eval_jacobi(n - 2, spec.alpha + 2.0, spec.beta + 2.0, x);
    }
  }
  throw ParameterError("unknown polynomial family");
}

Eigen::VectorXd roots(const PolynomialSpec& spec) {
  validate(spec);
  if (spec.degree < 1) throw ParameterError("roots requires degree >= 1");
  const int n = spec.degree;

  Eigen::VectorXd a, b;
  monic_coefficients(spec, a, b);

  // Golub-Welsch: eigenvalues of the symmetrized Jacobi matrix.
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(b[k]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(a, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("tridiagonal eigenvalue iteration failed to converge");
  Eigen::VectorXd r = solver.eigenvalues();

  for (int i = 0; i < n; ++i) {
    double x = r[i];
    for (int step = 0; step < 5; ++step) {
      const double dx = monic_newton_ratio(a, b, x);
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    r[i] = x;
  }

  std::sort(r.data(), r.data() + n);
  for (int i = 1; i < n; ++i)
    if (!(r[i] > r[i - 1]))
      throw NumericError("root polishing produced non-increasing roots");
  return r;
}

}  // namespace stieltjes::orthopoly
