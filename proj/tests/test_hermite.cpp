#include <cmath>

#include "doctest.h"
#include "pframe/catalog.hpp"
#include "pframe/hermite.hpp"

using namespace pframe;

namespace {

double eval_power(const std::vector<Interval>& coeffs, double t) {
  double acc = 0.0;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k].mid();
  return acc;
}

}  // namespace

TEST_CASE("tight node systems follow the strength parity") {
  // even strength: simple node at 1, doubled interior distances
  std::vector<Interval> dist = {Interval(-0.6), Interval(0.2)};
  NodeSystem even = tight_node_system(4, dist);
  REQUIRE(even.nodes.size() == 3);
  CHECK(even.nodes.back().mid() == doctest::Approx(1.0));
  CHECK(even.multiplicities[0] == 2);
  CHECK(even.multiplicities[1] == 2);
  CHECK(even.multiplicities.back() == 1);
  CHECK(even.total_order() == 5);

  // odd strength: simple nodes at +-1, doubled strictly interior distances
  std::vector<Interval> dist2 = {Interval(-1.0), Interval(-0.2), Interval(0.4)};
  NodeSystem odd = tight_node_system(5, dist2);
  REQUIRE(odd.nodes.size() == 4);
  CHECK(odd.nodes.front().mid() == doctest::Approx(-1.0));
  CHECK(odd.nodes.back().mid() == doctest::Approx(1.0));
  CHECK(odd.multiplicities.front() == 1);
  CHECK(odd.multiplicities.back() == 1);
  CHECK(odd.total_order() == 6);

  // odd strength without -1 in the distance set is rejected
  CHECK_THROWS(tight_node_system(5, dist));
}

TEST_CASE("hermite interpolant matches the kernel at the nodes") {
  KernelSpec f = PFrameKernel{3.0};
  std::vector<Interval> dist = {Interval(-0.6)};  // icosahedron
  NodeSystem ns = tight_node_system(2, dist);
  std::vector<Interval> h = hermite_interpolant(f, ns);
  REQUIRE(h.size() == static_cast<size_t>(ns.total_order()));

  // value match at both nodes
  CHECK(eval_power(h, -0.6) ==
        doctest::Approx(kernel_eval(f, -0.6)).epsilon(1e-12));
  CHECK(eval_power(h, 1.0) ==
        doctest::Approx(kernel_eval(f, 1.0)).epsilon(1e-12));
  // derivative match at the doubled node
  double hd = 0.0;
  for (size_t k = 1; k < h.size(); ++k)
    hd += k * h[k].mid() * std::pow(-0.6, double(k - 1));
  CHECK(hd == doctest::Approx(kernel_eval(f, -0.6, 1)).epsilon(1e-10));

  // the double version agrees with the interval midpoints
  std::vector<double> hd_power = hermite_interpolant_d(f, ns);
  REQUIRE(hd_power.size() == h.size());
  for (size_t k = 0; k < h.size(); ++k)
    CHECK(hd_power[k] == doctest::Approx(h[k].mid()).epsilon(1e-12));
}

TEST_CASE("newton coefficients reproduce plain polynomial interpolation") {
  // f(t) = t^3 interpolated with full confluency at a single triple node
  // gives the degree-2 Taylor polynomial at that node
  auto f = [](const Interval& t, int order) -> Interval {
    switch (order) {
      case 0: return t * t * t;
      case 1: return Interval(3.0) * t * t;
      case 2: return Interval(6.0) * t;
      default: return Interval(0.0);
    }
  };
  NodeSystem ns;
  ns.nodes = {Interval(0.5)};
  ns.multiplicities = {3};
  std::vector<Interval> newton = newton_coefficients(f, ns);
  std::vector<Interval> z, power;
  std::vector<int> which;
  ns.expand(z, which);
  power = newton_to_power(newton, z);
  REQUIRE(power.size() == 3);
  // Taylor: 1/8 + 3/4 (t - 1/2) + 3/2 (t - 1/2)^2
  CHECK(eval_power(power, 0.5) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(eval_power(power, 0.0) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(eval_power(power, 1.0) == doctest::Approx(0.875).epsilon(1e-12));
}

TEST_CASE("remainder sweep certifies f - h >= 0 for a tight interpolant") {
  KernelSpec f = PFrameKernel{3.0};
  NodeSystem ns = tight_node_system(2, {Interval(-0.6)});
  std::vector<Interval> h = hermite_interpolant(f, ns);
  RemainderReport rep = remainder_nonneg(f, h, 1e-12);
  CHECK(rep.verdict == SweepVerdict::Nonnegative);
  CHECK(rep.inf_bound >= -1e-12);
  CHECK(rep.bad_cells.empty());

  // perturbing the constant term upward makes the remainder go negative
  std::vector<Interval> bad = h;
  bad[0] = bad[0] + Interval(1e-3);
  RemainderReport rep2 = remainder_nonneg(f, bad, 1e-12);
  CHECK(rep2.verdict == SweepVerdict::Negative);
  CHECK(!rep2.bad_cells.empty());
}

TEST_CASE("interpolants stay below the kernel across catalog tight designs") {
  struct Row {
    const char* name;
    double p;
  };
  for (const Row& row : {Row{"icosahedron", 2.5}, Row{"e8-roots", 4.5},
                         Row{"sic-3", 3.0}}) {
    WeightedConfiguration c = catalog_get(row.name);
    DistanceCensus dc = distance_set(c);
    std::vector<Interval> dist;
    for (double v : dc.values) dist.push_back(Interval(v));
    const CatalogEntry* entry = catalog_find(row.name);
    REQUIRE(entry != nullptr);
    NodeSystem ns = tight_node_system(entry->strength, dist);
    KernelSpec f = PFrameKernel{row.p};
    std::vector<Interval> h = hermite_interpolant(f, ns);
    RemainderReport rep = remainder_nonneg(f, h, 1e-10);
    CAPTURE(row.name);
    CHECK(rep.verdict == SweepVerdict::Nonnegative);
  }
}
