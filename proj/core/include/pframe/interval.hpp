#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pframe/rational.hpp"

namespace pframe {

// Closed interval [lo, hi] with outward rounding applied after every
// operation via nextafter steps.  Slower than fesetround tricks but
// portable and immune to compiler rounding-mode assumptions.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  explicit Interval(double x) : lo(x), hi(x) {}
  Interval(double l, double h);

  static Interval hull(double a, double b);
  static Interval from_rational(const Rational& r);

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // throws if 0 in b
Interval operator+(const Interval& a, double b);
Interval operator-(const Interval& a, double b);
Interval operator*(const Interval& a, double b);
Interval operator+(double a, const Interval& b);
Interval operator-(double a, const Interval& b);
Interval operator*(double a, const Interval& b);
Interval& operator+=(Interval& a, const Interval& b);
Interval& operator-=(Interval& a, const Interval& b);
Interval& operator*=(Interval& a, const Interval& b);

Interval iv_sqrt(const Interval& a);
Interval iv_abs(const Interval& a);
Interval iv_max(const Interval& a, const Interval& b);
Interval iv_min(const Interval& a, const Interval& b);
// base must satisfy hi >= 0; lo is clamped to 0 (caller asserts the true
// base is nonnegative; a negative lo can only come from outward rounding).
Interval iv_pow(const Interval& base, const Interval& expo);
Interval iv_pow(const Interval& base, double expo);
Interval intersect(const Interval& a, const Interval& b);  // throws if empty
Interval hull(const Interval& a, const Interval& b);

// Horner evaluation of sum coeff[k] t^k with interval coefficients.
Interval poly_eval(const std::vector<Interval>& coeff, const Interval& t);
std::vector<Interval> poly_derivative(const std::vector<Interval>& coeff);

// Enclosure of the range of the polynomial on t, refined by bisection
// until the enclosure width per cell is below width_tol or depth is hit.
Interval poly_range(const std::vector<Interval>& coeff, const Interval& t,
                    double width_tol = 1e-13, int max_depth = 40);

enum class SweepVerdict { Nonnegative, Inconclusive, Negative };

struct SweepResult {
  SweepVerdict verdict = SweepVerdict::Inconclusive;
  // cells where the sign could not be decided / was violated
  std::vector<Interval> bad_cells;
  double inf_bound = 0.0;  // certified lower bound for min over the domain
  long evals = 0;          // enclosure evaluations spent
};

// Certify fn(t) >= -slack on [domain] by adaptive bisection.  fn must return
// an enclosure of the true range over its argument.  Cells whose enclosure
// dips below -slack are split until max_depth.
SweepResult sweep_nonnegative(const std::function<Interval(const Interval&)>& fn,
                              const Interval& domain, double slack = 1e-12,
                              int max_depth = 40);

// Same, with a first-order centered form: fn(t, d) returns an enclosure of
// the d-th derivative (d = 0 or 1) over t.  The cell value is the
// intersection of the direct enclosure with fn(mid) + fn'(cell)(cell - mid),
// which kills the cancellation that makes direct sweeps stall where the
// function touches zero.  If the derivative evaluation throws, the cell
// falls back to the direct enclosure.
SweepResult sweep_nonnegative_centered(
    const std::function<Interval(const Interval&, int)>& fn,
    const Interval& domain, double slack = 1e-12, int max_depth = 40);

// Shortest round-trip decimal strings, for JSON payloads.
std::string double_to_string(double x);
std::string interval_to_string(const Interval& v);

}  // namespace pframe
