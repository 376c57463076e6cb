#pragma once

#include <vector>

#include "pframe/certify.hpp"
#include "pframe/kernels.hpp"
#include "pframe/spaces.hpp"

namespace pframe {

// Discretized linear program for energy lower bounds: maximize h0 over
// polynomials h = sum_{n<=D} hhat_n C_n with hhat_n >= 0 and h(t_j) <= f(t_j)
// on the constraint grid.  Grid violations between samples are repaired by
// cutting planes and the final bound is re-certified with intervals.
struct LPProblem {
  SpaceDescriptor space;
  KernelSpec kernel{PFrameKernel{}};
  int degree = 6;
  std::vector<double> grid;  // tau samples, ascending, inside [-1, 1]
};

// Chebyshev-extrema grid of size 4*degree + 1, augmented with the distance
// sets of catalog configurations on the same space (where the constraints
// are expected to be active).  grid_size overrides the Chebyshev count.
LPProblem make_lp_problem(const SpaceDescriptor& space,
                          const KernelSpec& kernel, int degree,
                          int grid_size = 0);

struct SimplexResult {
  std::vector<double> coeffs;  // hhat_0 .. hhat_D, all >= 0
  double objective = 0.0;      // = coeffs[0]
  int iterations = 0;
};

// Dense primal simplex with Bland's rule (which precludes cycling).
SimplexResult simplex_solve(const LPProblem& problem);

// Interval-rigorous certificate from a raw simplex solution: clips stray
// negative coefficients, then walks h0 down a small ladder of shifts until
// the full certificate verification passes; returns the last (inconclusive)
// attempt if the ladder is exhausted at 1e-4.
Certificate rigorize(const std::vector<double>& raw, const LPProblem& problem);

// Grid construction + simplex + cutting planes + rigorize.
Certificate lp_lower_bound(const SpaceDescriptor& space,
                           const KernelSpec& kernel, int degree,
                           int grid_size = 0);

// Degree defaults matching the published bounds: 6 for p in {3,5}, 8 above.
int default_lp_degree(double p);

}  // namespace pframe
