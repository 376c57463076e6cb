#include "pframe/interval.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace pframe {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double dn(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

// pow corner values get a little extra inflation: libm pow is faithful to
// ~1 ulp but not correctly rounded.
double dn2(double x) { return dn(dn(x)); }
double up2(double x) { return up(up(x)); }
}  // namespace

Interval::Interval(double l, double h) : lo(l), hi(h) {
  if (!(lo <= hi)) throw std::invalid_argument("interval: lo > hi");
}

Interval Interval::hull(double a, double b) {
  return Interval(std::min(a, b), std::max(a, b));
}

Interval Interval::from_rational(const Rational& r) {
  double d = to_double(r);
  Rational rd = rational_from_double(d);
  if (rd == r) return Interval(d);
  if (rd < r) return Interval(d, up(d));
  return Interval(dn(d), d);
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(dn(a.lo + b.lo), up(a.hi + b.hi));
}
Interval operator-(const Interval& a, const Interval& b) {
  return Interval(dn(a.lo - b.hi), up(a.hi - b.lo));
}
Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return Interval(dn(lo), up(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by zero");
  double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return Interval(dn(lo), up(hi));
}

Interval operator+(const Interval& a, double b) { return a + Interval(b); }
Interval operator-(const Interval& a, double b) { return a - Interval(b); }
Interval operator*(const Interval& a, double b) { return a * Interval(b); }
Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }

Interval iv_sqrt(const Interval& a) {
  if (a.hi < 0) throw std::domain_error("interval sqrt of negative");
  double lo = a.lo <= 0 ? 0.0 : dn(std::sqrt(a.lo));
  return Interval(std::max(lo, 0.0), up(std::sqrt(a.hi)));
}

Interval iv_abs(const Interval& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return Interval(0.0, std::max(-a.lo, a.hi));
}

Interval iv_max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}
Interval iv_min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}

Interval iv_pow(const Interval& base, const Interval& expo) {
  if (base.hi < 0) throw std::domain_error("interval pow: negative base");
  double blo = std::max(base.lo, 0.0);
  double bhi = base.hi;
  if (blo == 0.0 && expo.lo <= 0.0)
    throw std::domain_error("interval pow: 0 base with nonpositive exponent");
  double lo = kInf, hi = -kInf;
  for (double b : {blo, bhi}) {
    for (double q : {expo.lo, expo.hi}) {
      double v = std::pow(b, q);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  // x^q is monotone in each variable on [0,inf) once the other is fixed,
  // except that for base spanning 1 the extrema in q are still at corners;
  // corners suffice, inflated for libm error.
  return Interval(std::max(dn2(lo), 0.0), up2(hi));
}

Interval iv_pow(const Interval& base, double expo) {
  return iv_pow(base, Interval(expo));
}

Interval intersect(const Interval& a, const Interval& b) {
  double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo > hi) throw std::domain_error("empty interval intersection");
  return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval poly_eval(const std::vector<Interval>& coeff, const Interval& t) {
  if (coeff.empty()) return Interval(0.0);
  Interval acc = coeff.back();
  for (auto it = coeff.rbegin() + 1; it != coeff.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<Interval> poly_derivative(const std::vector<Interval>& coeff) {
  std::vector<Interval> d;
  for (size_t k = 1; k < coeff.size(); ++k)
    d.push_back(coeff[k] * static_cast<double>(k));
  return d;
}

namespace {
void range_rec(const std::vector<Interval>& coeff, const Interval& t,
               double width_tol, int depth, Interval& acc, bool& first) {
  Interval r = poly_eval(coeff, t);
  if (depth <= 0 || r.width() <= width_tol || t.width() < 1e-300) {
    acc = first ? r : hull(acc, r);
    first = false;
    return;
  }
  double m = t.mid();
  range_rec(coeff, Interval(t.lo, m), width_tol, depth - 1, acc, first);
  range_rec(coeff, Interval(m, t.hi), width_tol, depth - 1, acc, first);
}
}  // namespace

Interval poly_range(const std::vector<Interval>& coeff, const Interval& t,
                    double width_tol, int max_depth) {
  Interval acc;
  bool first = true;
  // cap the recursion fan-out: refine to a fixed grid first, then locally
  const int kInitial = 6;  // 64 cells
  range_rec(coeff, t, width_tol, std::min(max_depth, kInitial + 10), acc, first);
  (void)kInitial;
  return acc;
}

namespace {
// hard cap on enclosure evaluations; an undecidable borderline region would
// otherwise be tiled at full depth
constexpr long kSweepBudget = 2'000'000;

void sweep_rec(const std::function<Interval(const Interval&)>& fn,
               const Interval& t, double slack, int depth, SweepResult& res) {
  if (res.evals >= kSweepBudget) {
    if (res.verdict != SweepVerdict::Negative)
      res.verdict = SweepVerdict::Inconclusive;
    res.bad_cells.push_back(t);
    return;
  }
  ++res.evals;
  Interval r = fn(t);
  if (r.lo >= -slack) {
    res.inf_bound = std::min(res.inf_bound, r.lo);
    return;
  }
  if (r.hi < -slack) {
    res.verdict = SweepVerdict::Negative;
    res.bad_cells.push_back(t);
    res.inf_bound = std::min(res.inf_bound, r.lo);
    return;
  }
  if (depth <= 0 || t.width() < 4e-16 * std::max(1.0, std::abs(t.mid()))) {
    if (res.verdict != SweepVerdict::Negative)
      res.verdict = SweepVerdict::Inconclusive;
    res.bad_cells.push_back(t);
    res.inf_bound = std::min(res.inf_bound, r.lo);
    return;
  }
  double m = t.mid();
  sweep_rec(fn, Interval(t.lo, m), slack, depth - 1, res);
  if (res.verdict == SweepVerdict::Negative) return;
  sweep_rec(fn, Interval(m, t.hi), slack, depth - 1, res);
}
}  // namespace

SweepResult sweep_nonnegative(const std::function<Interval(const Interval&)>& fn,
                              const Interval& domain, double slack,
                              int max_depth) {
  SweepResult res;
  res.verdict = SweepVerdict::Nonnegative;
  res.inf_bound = 0.0;
  sweep_rec(fn, domain, slack, max_depth, res);
  if (!res.bad_cells.empty() && res.verdict == SweepVerdict::Nonnegative)
    res.verdict = SweepVerdict::Inconclusive;
  return res;
}

SweepResult sweep_nonnegative_centered(
    const std::function<Interval(const Interval&, int)>& fn,
    const Interval& domain, double slack, int max_depth) {
  auto cell_eval = [&fn](const Interval& t) -> Interval {
    Interval direct = fn(t, 0);
    try {
      Interval m(t.mid());
      Interval centered = fn(m, 0) + fn(t, 1) * (t - m);
      // both enclose the true range, so the intersection does too
      double lo = std::max(direct.lo, centered.lo);
      double hi = std::min(direct.hi, centered.hi);
      if (lo <= hi) return Interval(lo, hi);
    } catch (const std::exception&) {
    }
    return direct;
  };
  return sweep_nonnegative(cell_eval, domain, slack, max_depth);
}

std::string double_to_string(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

std::string interval_to_string(const Interval& v) {
  return "[" + double_to_string(v.lo) + "," + double_to_string(v.hi) + "]";
}

}  // namespace pframe
