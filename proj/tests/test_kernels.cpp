#include <cmath>
#include <random>

#include "doctest.h"
#include "pframe/kernels.hpp"

using namespace pframe;

TEST_CASE("p-frame kernel values and derivatives") {
  PFrameKernel k{3.0};
  KernelSpec spec = k;
  CHECK(kernel_eval(spec, 1.0) == doctest::Approx(1.0));
  CHECK(kernel_eval(spec, -1.0) == doctest::Approx(0.0));
  CHECK(kernel_eval(spec, 0.0) == doctest::Approx(std::pow(0.5, 1.5)));
  // derivative against central differences
  for (double t : {-0.5, 0.0, 0.3, 0.8}) {
    double h = 1e-6;
    double fd =
        (kernel_eval(spec, t + h) - kernel_eval(spec, t - h)) / (2.0 * h);
    CHECK(kernel_eval(spec, t, 1) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("interval kernel evaluation contains point values") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double p : {1.0, 2.5, 3.0, 5.0, 9.0}) {
    KernelSpec spec = PFrameKernel{p};
    for (int k = 0; k < 200; ++k) {
      double t = u(rng);
      Interval iv = kernel_eval(spec, Interval(t));
      double v = kernel_eval(spec, t);
      CHECK(iv.lo <= v);
      CHECK(iv.hi >= v);
    }
  }
}

TEST_CASE("pframe_eval with interval exponent contains fixed-p values") {
  Interval p(8.0, 10.0);
  for (double pp : {8.0, 8.7, 9.0, 10.0}) {
    KernelSpec spec = PFrameKernel{pp};
    for (double t : {-0.5, 0.0, 0.5, 0.9}) {
      Interval iv = pframe_eval(p, Interval(t));
      double v = kernel_eval(spec, t);
      CHECK(iv.lo <= v + 1e-15);
      CHECK(iv.hi >= v - 1e-15);
    }
  }
}

TEST_CASE("causal kernel matches its closed form") {
  Interval tau2(2.0);  // cross-polytope aperture
  KernelSpec spec = CausalKernel{tau2, false};
  CHECK(requires_sphere(spec));
  auto raw = [](double t2, double t) {
    return 2.0 * t2 * (1.0 + t) * (2.0 - t2 * (1.0 - t));
  };
  for (double t : {-1.0, -0.5, 0.0, 0.3, 1.0}) {
    double expect = std::max(0.0, raw(2.0, t));
    CHECK(kernel_eval(spec, t) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(kernel_eval(spec, t) >= 0.0);
  }
  // raw form goes negative at t = -1/2 - eps; kernel clamps to zero
  CHECK(raw(2.0, -0.75) < 0.0);
  CHECK(kernel_eval(spec, -0.75) == 0.0);
}

TEST_CASE("absolute monotonicity degree follows ceil(p/2)") {
  CHECK(abs_monotonic_degree(KernelSpec{PFrameKernel{3.0}}) == 2);
  CHECK(abs_monotonic_degree(KernelSpec{PFrameKernel{5.0}}) == 3);
  CHECK(abs_monotonic_degree(KernelSpec{PFrameKernel{9.0}}) == 5);
  CHECK(abs_monotonic_degree(KernelSpec{PFrameKernel{2.5}}) == 2);
  // even integer p is already a positive definite polynomial
  CHECK(!abs_monotonic_degree(KernelSpec{PFrameKernel{4.0}}).has_value());
  CHECK(!abs_monotonic_degree(KernelSpec{PolyKernel{{1.0, 1.0}}}).has_value());
}

TEST_CASE("even-p minima match closed forms") {
  // real projective: c_R(d, 1) = 1/d; second moment of uniform measure
  CHECK(even_p_minimum(Field::R, 3, 1) == Rational(1, 3));
  CHECK(even_p_minimum(Field::R, 4, 1) == Rational(1, 4));
  // complex: c_C(d, 1) = 1/d, c_C(d, 2) = 2/(d(d+1))
  CHECK(even_p_minimum(Field::C, 3, 1) == Rational(1, 3));
  CHECK(even_p_minimum(Field::C, 3, 2) == Rational(2, 12));
  // the 85-line code minimizes the third moment in CP^4: value 1/35
  CHECK(even_p_minimum(Field::C, 5, 3) == Rational(1, 35));
}

TEST_CASE("SIC energy formula") {
  // d^2 equiangular lines at |<x,y>|^2 = 1/(d+1), p = 3
  CHECK(sic_energy(3) == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
  double d = 4.0;
  double expect = (d * d + (d * d * (d * d - 1.0)) *
                               std::pow(1.0 / (d + 1.0), 1.5)) /
                  (d * d * d * d);
  CHECK(sic_energy(4) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("kernel names are reportable") {
  CHECK(kernel_name(KernelSpec{PFrameKernel{3.0}}) == "pframe(p=3)");
  CHECK(kernel_name(KernelSpec{CausalKernel{Interval(2.0), false}})
            .find("causal") != std::string::npos);
}
