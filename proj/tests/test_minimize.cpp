#include <cmath>

#include "doctest.h"
#include "pframe/catalog.hpp"
#include "pframe/energy.hpp"
#include "pframe/minimize.hpp"

using namespace pframe;

TEST_CASE("descent runs are deterministic and monotone") {
  SpaceDescriptor sp = parse_space("rp:3");
  KernelSpec k = PFrameKernel{3.0};
  MinimizeOptions opts;
  opts.record_trace = true;
  ParticleState a = minimize_energy(sp, k, 12, 7, opts);
  ParticleState b = minimize_energy(sp, k, 12, 7, opts);
  CHECK(a.energy == b.energy);  // bitwise: same seed, same path
  REQUIRE(a.energy_trace.size() >= 2);
  for (size_t i = 1; i < a.energy_trace.size(); ++i)
    CHECK(a.energy_trace[i] <= a.energy_trace[i - 1] + 1e-15);
  // different seeds explore different starts
  ParticleState c = minimize_energy(sp, k, 12, 8, opts);
  CHECK(c.energy != a.energy);
}

TEST_CASE("multistart on RP^2 finds the icosahedron") {
  SpaceDescriptor sp = parse_space("rp:3");
  KernelSpec k = PFrameKernel{3.0};
  std::vector<ParticleState> runs = multistart(sp, k, 20, 4, 3);
  REQUIRE(runs.size() == 4);
  const ParticleState& best = best_run(runs);
  CHECK(std::abs(best.energy - 0.241202265916660) <= 1e-6);
  WeightedConfiguration canon = canonicalize_support(best);
  CHECK(canon.size() == 6);
  CatalogMatch match = compare_to_catalog(canon, k);
  CHECK(match.name == "icosahedron");
  CHECK(match.census_match);
  CHECK(match.strength_match);
  CHECK(std::abs(match.energy_gap) <= 1e-6);
}

TEST_CASE("canonicalization merges duplicated support points") {
  WeightedConfiguration c = catalog_get("icosahedron");
  WeightedConfiguration doubled = c;
  for (size_t i = 0; i < c.size(); ++i) {
    doubled.points.push_back(c.points[i]);
    doubled.weights[i] *= 0.25;
    doubled.weights.push_back(c.weights[i] * 0.75);
  }
  ParticleState st;
  st.config = doubled;
  st.energy = energy(doubled, PFrameKernel{3.0});
  WeightedConfiguration merged = canonicalize_support(st);
  CHECK(merged.size() == 6);
  double sum = 0.0;
  for (double w : merged.weights) sum += w;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(energy(merged, PFrameKernel{3.0}) ==
        doctest::Approx(st.energy).epsilon(1e-12));
}

TEST_CASE("catalog comparison reports matches and gaps") {
  WeightedConfiguration c = catalog_get("orthobasis-4");
  CatalogMatch hit = compare_to_catalog(c, PFrameKernel{1.0});
  CHECK(hit.census_match);
  CHECK(hit.name == "orthobasis-4");
  // at p = 5 on RP^3 the 24-cell is the best catalog energy, far below the
  // orthobasis
  CatalogMatch m = compare_to_catalog(c, PFrameKernel{5.0});
  CHECK(m.best_name == "24-cell");
  CHECK(m.energy > m.best_energy);
}
