#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pframe/catalog.hpp"
#include "pframe/energy.hpp"
#include "pframe/jacobi.hpp"
#include "pframe/lpbound.hpp"

using namespace pframe;

TEST_CASE("simplex solutions are feasible") {
  SpaceDescriptor sp = parse_space("rp:3");
  KernelSpec k = PFrameKernel{3.0};
  LPProblem problem = make_lp_problem(sp, k, 6);
  SimplexResult res = simplex_solve(problem);
  REQUIRE(res.coeffs.size() == 7);
  CHECK(res.objective == doctest::Approx(res.coeffs[0]).epsilon(1e-14));
  for (double c : res.coeffs) CHECK(c >= -1e-10);
  JacobiParams params = sp.params();
  for (double t : problem.grid) {
    double h = 0.0;
    for (size_t n = 0; n < res.coeffs.size(); ++n)
      h += res.coeffs[n] * jacobi_eval(params, static_cast<int>(n), t);
    CHECK(h <= kernel_eval(k, t) + 1e-9);
  }
}

TEST_CASE("lp bound sits below the best catalog energy") {
  struct Cell {
    const char* space;
    double p;
    const char* config;
  };
  const Cell cells[] = {
      {"rp:3", 3.0, "icosahedron"},
      {"rp:5", 3.0, "hemicube-5"},
      {"rp:8", 5.0, "e8-roots"},
  };
  for (const Cell& cell : cells) {
    CAPTURE(cell.space);
    SpaceDescriptor sp = parse_space(cell.space);
    KernelSpec k = PFrameKernel{cell.p};
    Certificate cert = lp_lower_bound(sp, k, 6);
    REQUIRE(cert.verdict == Verdict::Verified);
    WeightedConfiguration c = catalog_get(cell.config);
    WeightOptimum opt = optimal_weight_energy(c, k);
    CHECK(cert.bound.hi <= opt.energy + 1e-10);
    // a verified LP bound is within striking distance of the energy
    CHECK(cert.bound.lo >= 0.5 * opt.energy);
  }
}

TEST_CASE("lp bound for a tight design is sharp") {
  // on RP^2 at p = 3 the degree-4 LP recovers the icosahedral minimum
  SpaceDescriptor sp = parse_space("rp:3");
  KernelSpec k = PFrameKernel{3.0};
  Certificate cert = lp_lower_bound(sp, k, 4);
  REQUIRE(cert.verdict == Verdict::Verified);
  double e = energy(catalog_get("icosahedron"), k);
  CHECK(cert.bound.hi <= e + 1e-10);
  CHECK(cert.bound.lo >= e - 5e-5);
}

TEST_CASE("raising the degree never weakens the bound much") {
  SpaceDescriptor sp = parse_space("rp:4");
  KernelSpec k = PFrameKernel{5.0};
  Certificate d4 = lp_lower_bound(sp, k, 4);
  Certificate d6 = lp_lower_bound(sp, k, 6);
  REQUIRE(d4.verdict == Verdict::Verified);
  REQUIRE(d6.verdict == Verdict::Verified);
  // the feasible set only grows with degree; rigorization costs at most a
  // hair of the improvement
  CHECK(d6.bound.lo >= d4.bound.lo - 1e-6);
}

TEST_CASE("lp bound is weakly dual to random measures") {
  SpaceDescriptor sp = parse_space("cp:3");
  KernelSpec k = PFrameKernel{3.0};
  Certificate cert = lp_lower_bound(sp, k, 6);
  REQUIRE(cert.verdict == Verdict::Verified);
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    WeightedConfiguration mu = pframe::testing::random_measure(sp, 9, rng);
    CHECK(energy(mu, k) >= cert.bound.lo - 1e-12);
  }
}

TEST_CASE("default lp degrees follow the exponent") {
  CHECK(default_lp_degree(3.0) == 6);
  CHECK(default_lp_degree(5.0) == 6);
  CHECK(default_lp_degree(7.0) == 8);
}
