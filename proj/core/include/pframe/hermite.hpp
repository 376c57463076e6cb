#pragma once

#include <functional>
#include <vector>

#include "pframe/interval.hpp"
#include "pframe/kernels.hpp"

namespace pframe {

// Interpolation nodes with confluency: node i carries multiplicity m_i,
// meaning H matches f, f', ..., f^(m_i - 1) there.
struct NodeSystem {
  std::vector<Interval> nodes;      // distinct, ascending midpoints
  std::vector<int> multiplicities;

  int total_order() const;
  // expanded node list (each node repeated by multiplicity), with the
  // distinct-node index of every slot
  void expand(std::vector<Interval>& z, std::vector<int>& which) const;
};

// Annihilator node system g for a tight design of strength M:
//   M = 2m:     g = (t - 1) prod (t - a_i)^2 over the m interior distances
//   M = 2m - 1: g = (t^2 - 1) prod (t - a_i)^2 over the m - 1 interior
//               distances (the distance set must contain -1)
// distances: the configuration's distance set (ascending).
NodeSystem tight_node_system(int M, const std::vector<Interval>& distances);

// Newton coefficients of the Hermite interpolant H[f, g]: f supplies
// enclosures of derivatives, f(node, order).
std::vector<Interval> newton_coefficients(
    const std::function<Interval(const Interval&, int)>& f,
    const NodeSystem& ns);

// Newton form -> ascending power coefficients.
std::vector<Interval> newton_to_power(const std::vector<Interval>& newton,
                                      const std::vector<Interval>& z);

// Power coefficients of H[f, g] for a kernel (interval arithmetic).
std::vector<Interval> hermite_interpolant(const KernelSpec& f,
                                          const NodeSystem& ns);
std::vector<double> hermite_interpolant_d(const KernelSpec& f,
                                          const NodeSystem& ns);

struct RemainderReport {
  SweepVerdict verdict = SweepVerdict::Inconclusive;
  double inf_bound = 0.0;           // certified lower bound of f - h
  std::vector<Interval> bad_cells;
};

// Certify f - h >= -slack on [-1, 1] by adaptive interval bisection.
RemainderReport remainder_nonneg(const KernelSpec& f,
                                 const std::vector<Interval>& h_power,
                                 double slack = 1e-12, int max_depth = 40);

}  // namespace pframe
