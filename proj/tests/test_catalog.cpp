#include <cmath>

#include "doctest.h"
#include "pframe/catalog.hpp"
#include "pframe/energy.hpp"

using namespace pframe;

TEST_CASE("expected energies hold at energy-optimal weights") {
  for (const auto& e : catalog()) {
    if (!e.constructible()) continue;
    WeightedConfiguration c = e.build();
    for (const auto& exp : e.expected_energies) {
      CAPTURE(e.name);
      CAPTURE(exp.p);
      WeightOptimum opt = optimal_weight_energy(c, PFrameKernel{exp.p});
      CHECK(std::abs(opt.energy - exp.value) <= 1e-11);
    }
  }
}

TEST_CASE("census-only entries evaluate through census_energy") {
  for (const auto& e : catalog()) {
    if (e.constructible()) continue;
    for (const auto& exp : e.expected_energies) {
      CAPTURE(e.name);
      CHECK(std::abs(census_energy(e, exp.p) - exp.value) <= 1e-11);
    }
  }
}

TEST_CASE("catalog lookup") {
  CHECK(catalog_find("icosahedron") != nullptr);
  CHECK(catalog_find("definitely-not-there") == nullptr);
  CHECK_NOTHROW(catalog_get("icosahedron"));
}

TEST_CASE("catalog spaces agree with the built configurations") {
  for (const auto& e : catalog()) {
    if (!e.constructible()) continue;
    CAPTURE(e.name);
    WeightedConfiguration c = e.build();
    CHECK(c.space == e.space);
  }
}

TEST_CASE("the 85-line code has the advertised two-point structure") {
  WeightedConfiguration c = catalog_get("85-code");
  REQUIRE(c.size() == 85);
  // |<x,y>| in {0, 1/sqrt3, 1/2, 1/3} across the two orbits
  DistanceCensus dc = distance_set(c, 1e-9);
  REQUIRE(dc.values.size() == 4);
  std::vector<double> expect_s = {0.0, 1.0 / 3.0, 1.0 / 2.0,
                                  1.0 / std::sqrt(3.0)};
  std::vector<long long> expect_n = {1980, 1080, 1440, 2640};
  for (size_t k = 0; k < 4; ++k) {
    double tau = 2.0 * expect_s[k] * expect_s[k] - 1.0;
    CHECK(dc.values[k] == doctest::Approx(tau).epsilon(1e-12));
    CHECK(dc.pair_counts[k] == expect_n[k]);
  }
  // third moment of the weighted code is the uniform-measure value 1/35
  CHECK(std::abs(energy(c, PFrameKernel{6.0}) - 1.0 / 35.0) <= 1e-12);
}

TEST_CASE("icosahedron-dodecahedron union carries five distances") {
  WeightedConfiguration c = catalog_get("icosahedron-dodecahedron");
  REQUIRE(c.size() == 16);
  DistanceCensus dc = distance_set(c, 1e-7);
  CHECK(dc.values.size() == 5);
}

TEST_CASE("parametric families scale with their parameter") {
  for (int n : {2, 3, 6}) {
    WeightedConfiguration c = catalog_get("orthobasis-" + std::to_string(n));
    CHECK(static_cast<int>(c.size()) == n);
    // orthobases hit the even-p floor exactly: E_2 = 1/d
    CHECK(energy(c, PFrameKernel{2.0}) ==
          doctest::Approx(1.0 / n).epsilon(1e-14));
  }
  WeightedConfiguration poly = catalog_get("polygon-9");
  CHECK(poly.size() == 9);
  CHECK(poly.projective_lines);
}
