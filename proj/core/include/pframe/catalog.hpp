#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pframe/configurations.hpp"

namespace pframe {

// Distance census entry for configurations known only by their two-point
// statistics (Leech-derived line systems, large complex designs).
struct CensusLine {
  double abs_inner = 0.0;        // |<x,y>| between distinct lines
  long long ordered_pairs = 0;   // count over ordered pairs i != j
};

struct ExpectedEnergy {
  double p = 0.0;
  double value = 0.0;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  SpaceDescriptor space;
  int n_lines = 0;
  int strength = 0;
  bool tight = false;
  std::vector<ExpectedEnergy> expected_energies;
  // empty build means census-only (no coordinates available)
  std::function<WeightedConfiguration()> build;
  std::vector<CensusLine> census;  // present for census-only entries

  bool constructible() const { return static_cast<bool>(build); }
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);
// Throws for unknown names and census-only entries.
WeightedConfiguration catalog_get(const std::string& name);

// p-frame energy of an equal-weight census: (N + sum n_s |s|^p) / N^2.
double census_energy(const CatalogEntry& e, double p);

}  // namespace pframe
