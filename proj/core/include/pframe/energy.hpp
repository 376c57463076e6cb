#pragma once

#include <nlohmann/json.hpp>
#include <optional>

#include "pframe/configurations.hpp"
#include "pframe/kernels.hpp"

namespace pframe {

struct EnergyReport {
  double value = 0.0;
  std::string kernel;
  std::string space;
  size_t n_points = 0;
  DistanceCensus census;
  std::optional<double> target;       // printed/catalog value, if any
  std::optional<double> abs_error;

  nlohmann::json to_json() const;
};

// I_f(mu) = sum_{i,j} w_i w_j f(t_ij), self pairs included, computed with
// compensated summation.  p-frame kernels always use the projective
// variable (antipodal symmetrization); causal kernels require sphere kind.
double energy(const WeightedConfiguration& c, const KernelSpec& kernel);
EnergyReport energy_report(const WeightedConfiguration& c,
                           const KernelSpec& kernel,
                           std::optional<double> target = std::nullopt);

// Energy of the invariant measure: the 0th Jacobi coefficient of the
// kernel, integrated by Gauss-Jacobi rules of doubling size until stable.
struct UniformEnergy {
  double value = 0.0;
  bool converged = false;
  int quad_points = 0;
};
UniformEnergy uniform_measure_energy(const KernelSpec& kernel,
                                     const SpaceDescriptor& space,
                                     double tol = 1e-12, int max_points = 2048);

// Energy-minimizing weights for a fixed support: the quadratic w'Aw with
// A_ij = f(t_ij) minimized over the probability simplex via the interior
// stationarity condition A w = lambda 1.  interior is false (and the
// original weights are kept) when the stationary point leaves the simplex
// or A is numerically singular.
struct WeightOptimum {
  std::vector<double> weights;
  double energy = 0.0;
  bool interior = false;
};
WeightOptimum optimal_weight_energy(const WeightedConfiguration& c,
                                    const KernelSpec& kernel);

// Non-compact variant: points in F^d with sum w_i |x_i|^2 = 1 (within
// norm_tol); energy sum w_i w_j |<x_i,x_j>|^p over raw (unnormalized)
// vectors.
double noncompact_energy(const std::vector<std::vector<FieldScalar>>& points,
                         const std::vector<double>& weights, double p,
                         double norm_tol = 1e-10);

}  // namespace pframe
