#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pframe/catalog.hpp"
#include "pframe/certify.hpp"
#include "pframe/energy.hpp"
#include "pframe/jacobi.hpp"

using namespace pframe;
using pframe::testing::random_measure;

TEST_CASE("tight certificate for the icosahedron at p = 3") {
  WeightedConfiguration c = catalog_get("icosahedron");
  Certificate cert = build_tight_certificate(c, PFrameKernel{3.0},
                                             "icosahedron");
  CHECK(verify_certificate(cert, &c) == Verdict::Verified);
  double e = energy(c, PFrameKernel{3.0});
  CHECK(cert.bound.lo <= e + 1e-15);
  CHECK(std::abs(cert.bound.mid() - e) <= 1e-10);
  CHECK(cert.checks.positive_definite);
  CHECK(cert.checks.interpolation_match);
  CHECK(cert.checks.design_strength_sufficient);
}

TEST_CASE("certificate bound is sound against random measures") {
  WeightedConfiguration c = catalog_get("icosahedron");
  KernelSpec k = PFrameKernel{3.0};
  Certificate cert = build_tight_certificate(c, k, "icosahedron");
  REQUIRE(verify_certificate(cert, &c) == Verdict::Verified);
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    WeightedConfiguration mu = random_measure(c.space, 8, rng);
    CHECK(energy(mu, k) >= cert.bound.lo - 1e-13);
  }
}

TEST_CASE("certificates survive a json round trip") {
  WeightedConfiguration c = catalog_get("e8-roots");
  Certificate cert = build_tight_certificate(c, PFrameKernel{5.0}, "e8-roots");
  REQUIRE(verify_certificate(cert, &c) == Verdict::Verified);
  nlohmann::json j = cert.to_json();
  Certificate back = Certificate::from_json(j);
  CHECK(back.space == cert.space);
  CHECK(back.mode == cert.mode);
  CHECK(back.h_power.size() == cert.h_power.size());
  // verification re-runs from the stored data alone
  CHECK(verify_certificate(back, &c) == Verdict::Verified);
  CHECK(back.bound.lo == doctest::Approx(cert.bound.lo).epsilon(1e-14));
}

TEST_CASE("tampered certificates are rejected") {
  WeightedConfiguration c = catalog_get("icosahedron");
  Certificate cert = build_tight_certificate(c, PFrameKernel{3.0},
                                             "icosahedron");
  REQUIRE(verify_certificate(cert, &c) == Verdict::Verified);
  Certificate bad = cert;
  // inflating the claimed bound breaks h <= f
  bad.h_power[0] = bad.h_power[0] + Interval(1e-4);
  bad.h_jacobi[0] = bad.h_jacobi[0] + Interval(1e-4);
  bad.bound = bad.h_jacobi[0];
  CHECK(verify_certificate(bad, &c) != Verdict::Verified);
}

TEST_CASE("even integer exponents certify through the kernel itself") {
  WeightedConfiguration c = catalog_get("orthobasis-4");
  Certificate cert = build_tight_certificate(c, PFrameKernel{2.0},
                                             "orthobasis-4");
  CHECK(verify_certificate(cert, &c) == Verdict::Verified);
  CHECK(cert.bound.mid() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("600-cell certificate at p = 9") {
  Certificate cert = build_600cell_certificate(9.0);
  WeightedConfiguration c = catalog_get("600-cell");
  CHECK(verify_certificate(cert, &c) == Verdict::Verified);
  CHECK(std::abs(cert.bound.mid() - 0.047015486159502) <= 1e-10);
  // the construction leaves out the sixth Jacobi coefficient
  REQUIRE(cert.h_jacobi.size() >= 9);
  CHECK(std::abs(cert.h_jacobi[6].mid()) <= 1e-10);
}

namespace {

double jacobi_moment(const WeightedConfiguration& c, int n) {
  double acc = 0.0;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j)
      acc += c.weights[i] * c.weights[j] *
             jacobi_eval(c.space.params(), n, config_tau(c, i, j));
  return acc;
}

}  // namespace

TEST_CASE("moment certificate bounds third moments of 2-designs") {
  WeightedConfiguration c = catalog_get("icosahedron");
  Certificate cert = moment_certificate(c, "icosahedron");
  CHECK(cert.upper);
  CHECK(verify_certificate(cert, &c) == Verdict::Verified);
  // the tight design attains the bound
  CHECK(jacobi_moment(c, 3) == doctest::Approx(cert.bound.mid()).epsilon(1e-10));
  // every other catalog design of strength >= 2 on the same space stays at
  // or below it
  for (const char* name :
       {"reznick-11", "weighted-11-r4", "icosahedron-dodecahedron"}) {
    CAPTURE(name);
    WeightedConfiguration other = catalog_get(name);
    CHECK(jacobi_moment(other, 3) <= cert.bound.hi + 1e-10);
  }
}

TEST_CASE("causal certificates verify and pin the icosahedral bound") {
  Certificate cross = causal_certificate(CausalSupport::CrossPolytope);
  CHECK(verify_certificate(cross) == Verdict::Verified);
  Certificate ico = causal_certificate(CausalSupport::Icosahedron);
  CHECK(verify_certificate(ico) == Verdict::Verified);
  CHECK(std::abs(ico.bound.mid() - 1.0 / 12.0) <= 1e-12);
}

TEST_CASE("verdict strings round trip") {
  for (Verdict v :
       {Verdict::Verified, Verdict::Falsified, Verdict::Inconclusive}) {
    CHECK(verdict_from_string(to_string(v)) == v);
  }
}
