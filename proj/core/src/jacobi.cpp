#include "pframe/jacobi.hpp"

#include <Eigen/Dense>
#include <limits>
#include <stdexcept>

namespace pframe {

Rational jacobi_a(const JacobiParams& p, int n) {
  const Rational &a = p.alpha, &b = p.beta;
  if (n == 0) return (b - a) / (a + b + 2);
  Rational s = 2 * n + a + b;
  return (b * b - a * a) / (s * (s + 2));
}

Rational jacobi_b(const JacobiParams& p, int n) {
  if (n < 1) throw std::invalid_argument("jacobi_b: n >= 1");
  const Rational &a = p.alpha, &b = p.beta;
  Rational s = 2 * n + a + b;
  if (n == 1 && a + b == -1) {
    // removable singularity: (n+a+b)/(2n+a+b-1) -> 1
    return 4 * (1 + a) * (1 + b) / ((s * s) * (s + 1));
  }
  return 4 * n * (n + a) * (n + b) * (n + a + b) /
         ((s * s) * (s + 1) * (s - 1));
}

namespace {

template <typename T>
T monic_value(const JacobiParams& p, int n, const T& t,
              const std::vector<T>& as, const std::vector<T>& bs) {
  if (n == 0) return T(1.0);
  T qm1(1.0);
  T q = t - as[0];
  for (int k = 1; k < n; ++k) {
    T qn = (t - as[k]) * q - bs[k] * qm1;
    qm1 = q;
    q = qn;
  }
  return q;
}

}  // namespace

double jacobi_eval(const JacobiParams& p, int n, double t) {
  std::vector<double> as(n), bs(n);
  for (int k = 0; k < n; ++k) as[k] = to_double(jacobi_a(p, k));
  for (int k = 1; k < n; ++k) bs[k] = to_double(jacobi_b(p, k));
  double qt = monic_value(p, n, t, as, bs);
  double q1 = monic_value(p, n, 1.0, as, bs);
  return qt / q1;
}

Interval jacobi_eval(const JacobiParams& p, int n, const Interval& t) {
  std::vector<Interval> as(n), bs(n);
  for (int k = 0; k < n; ++k) as[k] = Interval::from_rational(jacobi_a(p, k));
  for (int k = 1; k < n; ++k) bs[k] = Interval::from_rational(jacobi_b(p, k));
  Interval qt = monic_value(p, n, t, as, bs);
  Interval q1 = Interval::from_rational(jacobi_monic_at_one(p, n));
  return qt / q1;
}

std::vector<Rational> jacobi_monic_coeffs(const JacobiParams& p, int n) {
  std::vector<Rational> qm1{1}, q;
  if (n == 0) return qm1;
  q = {-jacobi_a(p, 0), 1};
  for (int k = 1; k < n; ++k) {
    Rational a = jacobi_a(p, k), b = jacobi_b(p, k);
    std::vector<Rational> next(k + 2, Rational(0));
    for (size_t i = 0; i < q.size(); ++i) {
      next[i + 1] += q[i];
      next[i] -= a * q[i];
    }
    for (size_t i = 0; i < qm1.size(); ++i) next[i] -= b * qm1[i];
    qm1 = std::move(q);
    q = std::move(next);
  }
  return q;
}

Rational jacobi_monic_at_one(const JacobiParams& p, int n) {
  Rational qm1 = 1, q = 1 - jacobi_a(p, 0);
  if (n == 0) return qm1;
  for (int k = 1; k < n; ++k) {
    Rational next = (1 - jacobi_a(p, k)) * q - jacobi_b(p, k) * qm1;
    qm1 = q;
    q = next;
  }
  return q;
}

std::vector<Rational> jacobi_coeffs_exact(const JacobiParams& p, int n) {
  auto c = jacobi_monic_coeffs(p, n);
  Rational q1 = jacobi_monic_at_one(p, n);
  for (auto& v : c) v /= q1;
  return c;
}

std::vector<double> jacobi_coeffs(const JacobiParams& p, int n) {
  auto exact = jacobi_coeffs_exact(p, n);
  std::vector<double> out(exact.size());
  for (size_t i = 0; i < exact.size(); ++i) out[i] = to_double(exact[i]);
  return out;
}

std::vector<Interval> jacobi_coeffs_iv(const JacobiParams& p, int n) {
  auto exact = jacobi_coeffs_exact(p, n);
  std::vector<Interval> out(exact.size());
  for (size_t i = 0; i < exact.size(); ++i)
    out[i] = Interval::from_rational(exact[i]);
  return out;
}

Rational jacobi_norm2(const JacobiParams& p, int n) {
  Rational prod = 1;
  for (int k = 1; k <= n; ++k) prod *= jacobi_b(p, k);
  Rational q1 = jacobi_monic_at_one(p, n);
  return prod / (q1 * q1);
}

Quadrature gauss_jacobi(const JacobiParams& p, int n) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n >= 1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) J(k, k) = to_double(jacobi_a(p, k));
  for (int k = 1; k < n; ++k) {
    double ob = std::sqrt(to_double(jacobi_b(p, k)));
    J(k, k - 1) = ob;
    J(k - 1, k) = ob;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    q.nodes[k] = es.eigenvalues()(k);
    double v0 = es.eigenvectors()(0, k);
    q.weights[k] = v0 * v0;  // measure already has unit mass
  }
  return q;
}

double JacobiExpansion::eval(double t) const {
  // Forward recurrence on C_n values; degrees here are small.
  double acc = 0.0;
  for (size_t n = 0; n < coeffs.size(); ++n)
    acc += coeffs[n] * jacobi_eval(params, static_cast<int>(n), t);
  return acc;
}

JacobiExpansion expand(const std::vector<double>& power,
                       const JacobiParams& p) {
  int deg = static_cast<int>(power.size()) - 1;
  if (deg < 0) return {p, {}};
  auto f = [&](double t) {
    double acc = 0;
    for (int k = deg; k >= 0; --k) acc = acc * t + power[k];
    return acc;
  };
  return expand_function(f, p, deg, deg + 2);
}

JacobiExpansion expand_function(const std::function<double(double)>& f,
                                const JacobiParams& p, int degree,
                                int quad_points) {
  int n = std::max(quad_points, degree + 1);
  Quadrature q = gauss_jacobi(p, n);
  JacobiExpansion e{p, std::vector<double>(degree + 1, 0.0)};
  std::vector<double> fv(n);
  for (int j = 0; j < n; ++j) fv[j] = f(q.nodes[j]);
  for (int m = 0; m <= degree; ++m) {
    double num = 0;
    for (int j = 0; j < n; ++j)
      num += q.weights[j] * fv[j] * jacobi_eval(p, m, q.nodes[j]);
    e.coeffs[m] = num / to_double(jacobi_norm2(p, m));
  }
  return e;
}

std::vector<Rational> expand_exact(const std::vector<Rational>& power,
                                   const JacobiParams& p) {
  std::vector<Rational> rem = power;
  int deg = static_cast<int>(rem.size()) - 1;
  std::vector<Rational> out(deg + 1, Rational(0));
  for (int n = deg; n >= 0; --n) {
    auto cn = jacobi_coeffs_exact(p, n);
    Rational f = rem[n] / cn[n];
    out[n] = f;
    for (int i = 0; i <= n; ++i) rem[i] -= f * cn[i];
  }
  return out;
}

std::vector<Interval> expand_iv(const std::vector<Interval>& power,
                                const JacobiParams& p) {
  std::vector<Interval> rem = power;
  int deg = static_cast<int>(rem.size()) - 1;
  std::vector<Interval> out(deg + 1);
  for (int n = deg; n >= 0; --n) {
    auto cn = jacobi_coeffs_iv(p, n);
    Interval f = rem[n] / cn[n];
    out[n] = f;
    for (int i = 0; i <= n; ++i) rem[i] -= f * cn[i];
  }
  return out;
}

std::vector<double> to_power(const JacobiExpansion& e) {
  std::vector<double> out(e.coeffs.size(), 0.0);
  for (size_t n = 0; n < e.coeffs.size(); ++n) {
    auto cn = jacobi_coeffs(e.params, static_cast<int>(n));
    for (size_t i = 0; i < cn.size(); ++i) out[i] += e.coeffs[n] * cn[i];
  }
  return out;
}

std::vector<Interval> to_power_iv(const std::vector<Interval>& coeffs,
                                  const JacobiParams& p) {
  std::vector<Interval> out(coeffs.size(), Interval(0.0));
  for (size_t n = 0; n < coeffs.size(); ++n) {
    auto cn = jacobi_coeffs_iv(p, static_cast<int>(n));
    for (size_t i = 0; i < cn.size(); ++i) out[i] += coeffs[n] * cn[i];
  }
  return out;
}

PositivityReport is_positive_definite(const JacobiExpansion& e, double tol) {
  PositivityReport r;
  r.min_coeff = std::numeric_limits<double>::infinity();
  for (size_t n = 0; n < e.coeffs.size(); ++n) {
    if (e.coeffs[n] < r.min_coeff) {
      r.min_coeff = e.coeffs[n];
      r.argmin = static_cast<int>(n);
    }
  }
  if (e.coeffs.empty()) r.min_coeff = 0.0;
  r.positive_definite = r.min_coeff >= -tol;
  r.strict = r.min_coeff > tol;
  return r;
}

}  // namespace pframe
