#pragma once

#include <random>
#include <vector>

#include "pframe/configurations.hpp"
#include "pframe/spaces.hpp"

namespace pframe::testing {

// Random unit vector on the given space's sphere (all field components
// i.i.d. Gaussian, then normalized).
inline UnitVector random_unit(const SpaceDescriptor& space,
                              std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  int e = field_dim(space.field);
  std::vector<FieldScalar> comps(space.d);
  for (auto& c : comps)
    for (int a = 0; a < e; ++a) c.c[a] = g(rng);
  return UnitVector(std::move(comps));
}

// Random finitely supported probability measure: n random points with
// Dirichlet(1) weights.
inline WeightedConfiguration random_measure(const SpaceDescriptor& space,
                                            int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> ex(1.0);
  WeightedConfiguration c;
  c.space = space;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    c.points.push_back(random_unit(space, rng));
    double w = ex(rng);
    c.weights.push_back(w);
    total += w;
  }
  for (auto& w : c.weights) w /= total;
  return c;
}

}  // namespace pframe::testing
