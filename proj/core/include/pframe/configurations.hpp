#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pframe/interval.hpp"
#include "pframe/spaces.hpp"

namespace pframe {

// Finitely supported probability measure on a sphere or projective space.
struct WeightedConfiguration {
  SpaceDescriptor space;
  std::vector<UnitVector> points;
  std::vector<double> weights;
  // Sphere d=2 configs whose points represent projective lines (RP^1 seen
  // as the unit circle); all kernels then use the projective variable.
  bool projective_lines = false;
  // Catalog configs carry exact enclosures of their distance set (values
  // of the kernel variable between distinct points, self pairs excluded).
  std::optional<std::vector<Interval>> exact_distances;

  size_t size() const { return points.size(); }
  bool uses_projective_tau() const {
    return space.kind == SpaceKind::Projective || projective_lines;
  }
};

// Kernel variable between points i and j honoring the projective flag.
double config_tau(const WeightedConfiguration& c, size_t i, size_t j);

void validate(const WeightedConfiguration& c, double weight_tol = 1e-10);

struct DistanceCensus {
  std::vector<double> values;          // sorted ascending, self pairs excluded
  std::vector<long long> pair_counts;  // ordered pairs at each value
  // sum of w_i w_j over ordered pairs at each value
  std::vector<double> weight_mass;
};
DistanceCensus distance_set(const WeightedConfiguration& c, double tol = 1e-9);

struct StrengthReport {
  int strength = 0;                // largest t with moments 1..t vanishing
  std::vector<double> residuals;   // residuals[n-1] = |moment n|, n = 1..max_t
};
// moment n = sum_{i,j} w_i w_j C_n(tau_ij), self pairs included
StrengthReport design_strength(const WeightedConfiguration& c, int max_t,
                               double tol = 1e-10);

struct TightnessReport {
  bool tight = false;
  int strength = 0;       // measured design strength
  int m_distances = 0;    // distinct distances between distinct points
  bool has_minus_one = false;
  std::string note;
};
// Tight iff strength = 2m (m distances), or strength = 2m-1 with -1 among
// the distances.
TightnessReport tightness_check(const WeightedConfiguration& c,
                                double tol = 1e-10);

// Realize a PSD Gram matrix with unit diagonal as unit vectors in R^d.
WeightedConfiguration from_gram(const Eigen::MatrixXd& gram,
                                const std::vector<double>& weights,
                                const SpaceDescriptor& space,
                                double psd_tol = 1e-9);

nlohmann::json config_to_json(const WeightedConfiguration& c);
WeightedConfiguration config_from_json(const nlohmann::json& j);
WeightedConfiguration load_config(const std::string& path);
void save_config(const WeightedConfiguration& c, const std::string& path);

}  // namespace pframe
