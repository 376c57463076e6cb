#pragma once

#include <functional>
#include <vector>

#include "pframe/interval.hpp"
#include "pframe/rational.hpp"
#include "pframe/spaces.hpp"

namespace pframe {

// Recurrence coefficients of the monic Jacobi polynomials Q_n for the
// probability measure dnu^{(alpha,beta)} on [-1,1]:
//   Q_{n+1} = (t - a_n) Q_n - b_n Q_{n-1}
// b_1 takes its limit value when alpha + beta = -1.
Rational jacobi_a(const JacobiParams& p, int n);
Rational jacobi_b(const JacobiParams& p, int n);  // n >= 1

// Value of the normalized polynomial C_n = Q_n / Q_n(1) (so C_n(1) = 1).
double jacobi_eval(const JacobiParams& p, int n, double t);
Interval jacobi_eval(const JacobiParams& p, int n, const Interval& t);

// Monic power-basis coefficients of Q_n, ascending degree.
std::vector<Rational> jacobi_monic_coeffs(const JacobiParams& p, int n);
Rational jacobi_monic_at_one(const JacobiParams& p, int n);

// Power-basis coefficients of C_n, ascending degree.
std::vector<Rational> jacobi_coeffs_exact(const JacobiParams& p, int n);
std::vector<double> jacobi_coeffs(const JacobiParams& p, int n);
std::vector<Interval> jacobi_coeffs_iv(const JacobiParams& p, int n);

// Squared norm h_n = integral of C_n^2 dnu (exact: prod b_k / Q_n(1)^2).
Rational jacobi_norm2(const JacobiParams& p, int n);

// Gauss-Jacobi rule for dnu^{(alpha,beta)}: n nodes, weights sum to 1.
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Quadrature gauss_jacobi(const JacobiParams& p, int n);

// Expansion f = sum coeffs[n] C_n in the normalized Jacobi basis.
struct JacobiExpansion {
  JacobiParams params;
  std::vector<double> coeffs;

  double eval(double t) const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Power basis -> Jacobi basis.  Float path integrates against a Gauss rule
// exact for the polynomial degrees involved; rational path is a triangular
// solve and is exact.
JacobiExpansion expand(const std::vector<double>& power, const JacobiParams& p);
std::vector<Rational> expand_exact(const std::vector<Rational>& power,
                                   const JacobiParams& p);
std::vector<Interval> expand_iv(const std::vector<Interval>& power,
                                const JacobiParams& p);

// Jacobi basis -> power basis.
std::vector<double> to_power(const JacobiExpansion& e);
std::vector<Interval> to_power_iv(const std::vector<Interval>& coeffs,
                                  const JacobiParams& p);

// Expand a general function: coeffs[n] = (integral f C_n dnu) / h_n for
// n = 0..degree, integrated with an (degree+1+extra)-point Gauss rule.
JacobiExpansion expand_function(const std::function<double(double)>& f,
                                const JacobiParams& p, int degree,
                                int quad_points = 0);

struct PositivityReport {
  bool positive_definite = false;  // all coeffs >= -tol
  bool strict = false;             // all coeffs > tol
  double min_coeff = 0.0;
  int argmin = -1;
};
PositivityReport is_positive_definite(const JacobiExpansion& e,
                                      double tol = 1e-12);

}  // namespace pframe
