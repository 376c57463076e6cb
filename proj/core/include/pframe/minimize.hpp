#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pframe/configurations.hpp"
#include "pframe/kernels.hpp"

namespace pframe {

struct MinimizeOptions {
  int max_iters = 5000;
  double grad_tol = 1e-8;    // Riemannian / simplex-projected gradient norms
  double armijo_c = 1e-4;    // sufficient-decrease constant
  double init_step = 0.5;
  bool record_trace = false;
};

// One local run of alternating projected gradient descent over a weighted
// particle measure: ambient vectors retracted to the unit sphere, weights
// projected back to the probability simplex after every step.
struct ParticleState {
  WeightedConfiguration config;
  double energy = 0.0;
  double point_grad_norm = 0.0;
  double weight_grad_norm = 0.0;  // KKT violation on the simplex
  bool converged = false;
  int iterations = 0;
  std::uint64_t seed = 0;
  std::vector<double> energy_trace;  // nonincreasing across accepted steps
};

ParticleState minimize_energy(const SpaceDescriptor& space,
                              const KernelSpec& kernel, int n_points,
                              std::uint64_t seed,
                              const MinimizeOptions& opts = MinimizeOptions());

// Independent runs with decorrelated deterministic RNG streams; returns all
// runs (best energy first is NOT guaranteed; inspect or use best_run).
std::vector<ParticleState> multistart(const SpaceDescriptor& space,
                                      const KernelSpec& kernel, int n_points,
                                      int starts, std::uint64_t seed,
                                      const MinimizeOptions& opts =
                                          MinimizeOptions());

const ParticleState& best_run(const std::vector<ParticleState>& runs);

// Merges near-duplicate support points (chordal distance <= merge_tol,
// projective for line configurations), prunes weights below the floor, and
// renormalizes.
WeightedConfiguration canonicalize_support(const ParticleState& state,
                                           double merge_tol = 1e-4,
                                           double weight_floor = 1e-8);

struct CatalogMatch {
  std::string name;             // census-matched entry, empty if none
  bool census_match = false;
  bool strength_match = false;
  double energy = 0.0;          // energy of the supplied configuration
  double energy_gap = 0.0;      // relative gap vs matched (or best) entry
  std::string best_name;        // lowest-energy catalog entry on this space
  double best_energy = 0.0;
};

CatalogMatch compare_to_catalog(const WeightedConfiguration& config,
                                const KernelSpec& kernel);

}  // namespace pframe
