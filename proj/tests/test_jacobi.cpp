#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pframe/jacobi.hpp"
#include "pframe/spaces.hpp"

using namespace pframe;

namespace {
const std::vector<SpaceDescriptor> kSpaces = {
    parse_space("s:3"), parse_space("s:5"), parse_space("rp:3"),
    parse_space("rp:5"), parse_space("cp:3"), parse_space("hp:2")};
}

TEST_CASE("normalized Jacobi polynomials satisfy C_n(1) = 1") {
  for (const auto& sp : kSpaces) {
    JacobiParams pr = sp.params();
    for (int n = 0; n <= 12; ++n)
      CHECK(jacobi_eval(pr, n, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("Gauss-Jacobi orthogonality against exact norms") {
  for (const auto& sp : kSpaces) {
    JacobiParams pr = sp.params();
    Quadrature q = gauss_jacobi(pr, 16);  // exact through degree 31
    double wsum = 0.0;
    for (double w : q.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
    for (double t : q.nodes) {
      CHECK(t > -1.0);
      CHECK(t < 1.0);
    }
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; m <= 8; ++m) {
        double s = 0.0;
        for (size_t k = 0; k < q.nodes.size(); ++k)
          s += q.weights[k] * jacobi_eval(pr, n, q.nodes[k]) *
               jacobi_eval(pr, m, q.nodes[k]);
        double expect = n == m ? to_double(jacobi_norm2(pr, n)) : 0.0;
        CHECK(s == doctest::Approx(expect).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("interval evaluation contains the double value") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const auto& sp : kSpaces) {
    JacobiParams pr = sp.params();
    for (int k = 0; k < 200; ++k) {
      double t = u(rng);
      int n = k % 10;
      Interval iv = jacobi_eval(pr, n, Interval(t));
      double v = jacobi_eval(pr, n, t);
      // the double path may round differently by an ulp or two
      CHECK(iv.lo <= v + 1e-12);
      CHECK(iv.hi >= v - 1e-12);
      CHECK(iv.width() < 1e-10);
    }
  }
}

TEST_CASE("expansion round trips between power and Jacobi bases") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto& sp : kSpaces) {
    JacobiParams pr = sp.params();
    std::vector<double> power(9);
    for (auto& c : power) c = u(rng);
    JacobiExpansion e = expand(power, pr);
    std::vector<double> back = to_power(e);
    REQUIRE(back.size() == power.size());
    for (size_t k = 0; k < power.size(); ++k)
      CHECK(back[k] == doctest::Approx(power[k]).epsilon(1e-10).scale(1.0));
    // pointwise agreement as well
    for (double t : {-0.9, -0.3, 0.0, 0.4, 0.99}) {
      double direct = 0.0;
      for (auto it = power.rbegin(); it != power.rend(); ++it)
        direct = direct * t + *it;
      CHECK(e.eval(t) == doctest::Approx(direct).epsilon(1e-11).scale(1.0));
    }
  }
}

TEST_CASE("float expansion agrees with the exact rational expansion") {
  JacobiParams pr = parse_space("rp:4").params();
  std::vector<Rational> power = {Rational(1, 3), Rational(0), Rational(-2, 5),
                                 Rational(7, 11), Rational(1, 2)};
  std::vector<Rational> exact = expand_exact(power, pr);
  std::vector<double> pd;
  for (const auto& c : power) pd.push_back(to_double(c));
  JacobiExpansion e = expand(pd, pr);
  REQUIRE(e.coeffs.size() == exact.size());
  for (size_t k = 0; k < exact.size(); ++k)
    CHECK(e.coeffs[k] ==
          doctest::Approx(to_double(exact[k])).epsilon(1e-11).scale(1.0));
}

TEST_CASE("interval expansion contains the exact coefficients") {
  JacobiParams pr = parse_space("cp:4").params();
  std::vector<Rational> power = {Rational(2), Rational(-1, 7), Rational(3, 4),
                                 Rational(0), Rational(5, 9), Rational(-1)};
  std::vector<Interval> piv;
  for (const auto& c : power) piv.push_back(Interval::from_rational(c));
  std::vector<Interval> jiv = expand_iv(piv, pr);
  std::vector<Rational> exact = expand_exact(power, pr);
  REQUIRE(jiv.size() == exact.size());
  for (size_t k = 0; k < exact.size(); ++k) {
    Interval truth = Interval::from_rational(exact[k]);
    CHECK(jiv[k].lo <= truth.hi);
    CHECK(jiv[k].hi >= truth.lo);
  }
}

TEST_CASE("positive definite polynomials have PSD Gram matrices") {
  std::mt19937_64 rng(47);
  for (const auto& sp : {parse_space("s:4"), parse_space("rp:3"),
                         parse_space("cp:2")}) {
    JacobiParams pr = sp.params();
    for (int n = 1; n <= 6; ++n) {
      const int N = 14;
      std::vector<UnitVector> pts;
      for (int i = 0; i < N; ++i) pts.push_back(testing::random_unit(sp, rng));
      Eigen::MatrixXd G(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          G(i, j) = jacobi_eval(pr, n, tau(sp, pts[i], pts[j]));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
          0.5 * (G + G.transpose()));
      CHECK(es.eigenvalues().minCoeff() >= -1e-9);
    }
  }
}

TEST_CASE("is_positive_definite reads the coefficient signs") {
  JacobiParams pr = parse_space("rp:3").params();
  JacobiExpansion good{pr, {1.0, 0.5, 0.0, 0.25}};
  PositivityReport rep = is_positive_definite(good);
  CHECK(rep.positive_definite);
  JacobiExpansion bad{pr, {1.0, -0.5, 0.25}};
  rep = is_positive_definite(bad);
  CHECK(!rep.positive_definite);
  CHECK(rep.argmin == 1);
  CHECK(rep.min_coeff == doctest::Approx(-0.5));
}

TEST_CASE("expand_function recovers a polynomial exactly") {
  JacobiParams pr = parse_space("s:3").params();
  auto f = [](double t) { return 1.0 + t + t * t * t; };
  JacobiExpansion e = expand_function(f, pr, 5);
  for (double t : {-0.8, -0.1, 0.33, 0.9})
    CHECK(e.eval(t) == doctest::Approx(f(t)).epsilon(1e-12));
}

TEST_CASE("recurrence coefficients match classical values on the sphere") {
  // S^2: alpha = beta = 0 gives Legendre; a_n = 0 and b_n = n^2/(4n^2-1)
  JacobiParams pr = parse_space("s:3").params();
  for (int n = 0; n < 8; ++n) CHECK(jacobi_a(pr, n) == Rational(0));
  for (int n = 1; n < 8; ++n)
    CHECK(jacobi_b(pr, n) == Rational(n * n, 4 * n * n - 1));
}
