#include <cmath>
#include <random>

#include "doctest.h"
#include "pframe/interval.hpp"

using namespace pframe;

TEST_CASE("interval arithmetic contains the long-double result") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int k = 0; k < 2000; ++k) {
    double a = u(rng), b = u(rng);
    Interval A(a), B(b);
    long double la = a, lb = b;

    Interval s = A + B;
    CHECK(s.lo <= static_cast<double>(la + lb));
    CHECK(s.hi >= static_cast<double>(la + lb));

    Interval d = A - B;
    CHECK(d.lo <= static_cast<double>(la - lb));
    CHECK(d.hi >= static_cast<double>(la - lb));

    Interval p = A * B;
    CHECK(p.lo <= static_cast<double>(la * lb));
    CHECK(p.hi >= static_cast<double>(la * lb));

    if (std::abs(b) > 1e-6) {
      Interval q = A / B;
      CHECK(q.lo <= static_cast<double>(la / lb));
      CHECK(q.hi >= static_cast<double>(la / lb));
    }
    double pos = std::abs(a) + 0.1;
    Interval r = iv_sqrt(Interval(pos));
    long double root = sqrtl(static_cast<long double>(pos));
    CHECK(r.lo <= static_cast<double>(root));
    CHECK(r.hi >= static_cast<double>(root));

    double expo = std::abs(b) * 0.3;
    Interval pw = iv_pow(Interval(pos), expo);
    long double pl = powl(static_cast<long double>(pos),
                          static_cast<long double>(expo));
    CHECK(pw.lo <= static_cast<double>(pl));
    CHECK(pw.hi >= static_cast<double>(pl));
  }
}

TEST_CASE("interval operations propagate width monotonically") {
  Interval a(1.0, 2.0), b(-0.5, 0.5);
  Interval p = a * b;
  CHECK(p.contains(-1.0));
  CHECK(p.contains(1.0));
  CHECK(p.contains(0.0));
  CHECK(iv_abs(Interval(-3.0, 1.0)).lo == 0.0);
  CHECK(iv_abs(Interval(-3.0, 1.0)).hi == 3.0);
  CHECK_THROWS(Interval(2.0, 1.0));
  CHECK_THROWS(a / Interval(-1.0, 1.0));
}

TEST_CASE("poly_eval contains the rational value") {
  // p(t) = 1/3 - t + 2 t^2 + t^3 / 7
  std::vector<Rational> exact = {Rational(1, 3), Rational(-1), Rational(2),
                                 Rational(1, 7)};
  std::vector<Interval> coeff;
  for (const auto& c : exact) coeff.push_back(Interval::from_rational(c));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    double t = u(rng);
    Rational rt = rational_from_double(t);
    Rational v = 0;
    for (auto it = exact.rbegin(); it != exact.rend(); ++it) v = v * rt + *it;
    Interval iv = poly_eval(coeff, Interval(t));
    CHECK(iv.lo <= to_double(v));
    CHECK(iv.hi >= to_double(v));
  }
}

TEST_CASE("sweep detects a sign violation with a witness cell") {
  // (t - 0.3)(t - 0.7) is negative between its roots
  std::vector<Interval> c = {Interval(0.21), Interval(-1.0), Interval(1.0)};
  auto fn = [&c](const Interval& t) { return poly_eval(c, t); };
  SweepResult res = sweep_nonnegative(fn, Interval(-1.0, 1.0), 1e-12, 40);
  CHECK(res.verdict == SweepVerdict::Negative);
  REQUIRE(!res.bad_cells.empty());
  CHECK(res.bad_cells.front().lo >= 0.3 - 1e-6);
  CHECK(res.bad_cells.front().hi <= 0.7 + 1e-6);
  // the sweep may stop at the first offending cell, so inf_bound is only a
  // bound for the cells it visited; it must still expose a sign violation
  CHECK(res.inf_bound <= 0.0);
}

TEST_CASE("centered sweep certifies a polynomial touching zero") {
  // (t - 0.5)^2 >= 0 with a double root; the direct enclosure stalls there
  std::vector<Interval> c = {Interval(0.25), Interval(-1.0), Interval(1.0)};
  std::vector<Interval> d = poly_derivative(c);
  auto fn = [&c, &d](const Interval& t, int deriv) {
    return poly_eval(deriv == 0 ? c : d, t);
  };
  SweepResult res =
      sweep_nonnegative_centered(fn, Interval(-1.0, 1.0), 1e-12, 48);
  CHECK(res.verdict == SweepVerdict::Nonnegative);
  CHECK(res.inf_bound >= -1e-12);
}

TEST_CASE("sweep accepts within slack and stays within budget") {
  auto fn = [](const Interval& t) { return poly_eval({Interval(-5e-13)}, t); };
  SweepResult res = sweep_nonnegative(fn, Interval(-1.0, 1.0), 1e-12, 40);
  CHECK(res.verdict == SweepVerdict::Nonnegative);

  // a constant below -slack is falsified immediately
  auto neg = [](const Interval& t) { return poly_eval({Interval(-1e-3)}, t); };
  res = sweep_nonnegative(neg, Interval(-1.0, 1.0), 1e-12, 40);
  CHECK(res.verdict == SweepVerdict::Negative);
  CHECK(res.evals < 10);
}

TEST_CASE("poly_range encloses extrema") {
  // t^2 - 1 on [-1, 1]: range [-1, 0]
  Interval r = poly_range({Interval(-1.0), Interval(0.0), Interval(1.0)},
                          Interval(-1.0, 1.0));
  CHECK(r.lo <= -1.0);
  CHECK(r.hi >= 0.0);
  CHECK(r.lo >= -1.0 - 1e-9);
  CHECK(r.hi <= 0.0 + 1e-9);
}

TEST_CASE("double_to_string round trips") {
  for (double x : {0.1, -1.0 / 3.0, 1e-300, 0.047015486159502}) {
    CHECK(std::stod(double_to_string(x)) == x);
  }
}
