#include "pframe/lpbound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pframe/catalog.hpp"
#include "pframe/jacobi.hpp"

namespace pframe {

int default_lp_degree(double p) { return p < 6.0 ? 6 : 8; }

LPProblem make_lp_problem(const SpaceDescriptor& space,
                          const KernelSpec& kernel, int degree,
                          int grid_size) {
  if (degree < 0) throw std::invalid_argument("LP degree must be >= 0");
  LPProblem prob;
  prob.space = space;
  prob.kernel = kernel;
  prob.degree = degree;
  int cheb = grid_size > 0 ? grid_size : std::max(4 * degree, 2 * degree + 2);
  std::vector<double> grid;
  for (int j = 0; j <= cheb; ++j)
    grid.push_back(std::cos(M_PI * j / cheb));
  // distance sets of known configurations on this space: the constraints
  // are expected active there
  for (const auto& entry : catalog()) {
    if (!(entry.space == space)) continue;
    if (entry.constructible()) {
      for (double v : distance_set(entry.build()).values) grid.push_back(v);
    } else if (space.kind == SpaceKind::Projective) {
      for (const auto& line : entry.census)
        grid.push_back(2.0 * line.abs_inner * line.abs_inner - 1.0);
    }
  }
  for (double& t : grid) t = std::clamp(t, -1.0, 1.0);
  std::sort(grid.begin(), grid.end());
  for (double t : grid)
    if (prob.grid.empty() || t - prob.grid.back() > 1e-12)
      prob.grid.push_back(t);
  return prob;
}

namespace {

void pivot(std::vector<std::vector<double>>& T, int row, int col) {
  double piv = T[row][col];
  for (double& v : T[row]) v /= piv;
  for (size_t r = 0; r < T.size(); ++r) {
    if (static_cast<int>(r) == row) continue;
    double factor = T[r][col];
    if (factor == 0.0) continue;
    for (size_t c = 0; c < T[r].size(); ++c) T[r][c] -= factor * T[row][c];
  }
}

}  // namespace

SimplexResult simplex_solve(const LPProblem& prob) {
  if (static_cast<int>(prob.grid.size()) < 2 * prob.degree)
    throw std::invalid_argument("LP grid smaller than twice the degree");
  JacobiParams params = prob.space.params();
  int nv = prob.degree + 1;
  int m = static_cast<int>(prob.grid.size());
  int cols = nv + m + 1;

  std::vector<std::vector<double>> T(m + 1, std::vector<double>(cols, 0.0));
  std::vector<int> basis(m);
  for (int j = 0; j < m; ++j) {
    for (int n = 0; n < nv; ++n)
      T[j][n] = jacobi_eval(params, n, prob.grid[j]);
    T[j][nv + j] = 1.0;
    double f = kernel_eval(prob.kernel, prob.grid[j]);
    if (f < 0)
      throw std::invalid_argument("LP needs a nonnegative kernel on the grid");
    T[j][cols - 1] = f;
    basis[j] = nv + j;
  }
  T[m][0] = -1.0;  // maximize hhat_0

  const double tol = 1e-10;
  const int cap = 100000;
  SimplexResult res;
  while (true) {
    // Bland's rule: smallest improving column, smallest-index tie break in
    // the ratio test; cycling is impossible
    int enter = -1;
    for (int c = 0; c < cols - 1; ++c)
      if (T[m][c] < -tol) {
        enter = c;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < m; ++r) {
      if (T[r][enter] <= tol) continue;
      double ratio = T[r][cols - 1] / T[r][enter];
      if (leave < 0 || ratio < best - 1e-14 ||
          (ratio <= best + 1e-14 && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0)
      throw std::runtime_error("LP unbounded; constraint set is degenerate");
    pivot(T, leave, enter);
    basis[leave] = enter;
    if (++res.iterations > cap)
      throw std::runtime_error("simplex iteration cap exceeded");
  }
  res.coeffs.assign(nv, 0.0);
  for (int r = 0; r < m; ++r)
    if (basis[r] < nv) res.coeffs[basis[r]] = T[r][cols - 1];
  res.objective = res.coeffs[0];
  return res;
}

namespace {

// Largest violation of h <= f over [-1,1]: coarse scan plus local ternary
// refinement around the worst sample.
double worst_violation(const std::vector<double>& coeffs,
                       const LPProblem& prob, double& tstar) {
  JacobiExpansion h{prob.space.params(), coeffs};
  auto g = [&](double t) {
    return h.eval(t) - kernel_eval(prob.kernel, t);
  };
  const int samples = 4096;
  double best = -1.0, tb = -1.0;
  for (int j = 0; j <= samples; ++j) {
    double t = -1.0 + 2.0 * j / samples;
    double v = g(t);
    if (v > best) {
      best = v;
      tb = t;
    }
  }
  double lo = std::max(-1.0, tb - 2.0 / samples);
  double hi = std::min(1.0, tb + 2.0 / samples);
  for (int it = 0; it < 80; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (g(m1) < g(m2))
      lo = m1;
    else
      hi = m2;
  }
  tstar = 0.5 * (lo + hi);
  return std::max(best, g(tstar));
}

}  // namespace

Certificate rigorize(const std::vector<double>& raw, const LPProblem& prob) {
  JacobiParams params = prob.space.params();
  std::vector<Interval> hj(raw.size());
  for (size_t i = 0; i < raw.size(); ++i)
    hj[i] = Interval(std::max(raw[i], 0.0));

  static const double ladder[] = {0.0,  1e-12, 1e-11, 1e-10, 1e-9,
                                  1e-8, 1e-7,  1e-6,  1e-5,  1e-4};
  Certificate last;
  for (double delta : ladder) {
    Certificate cert;
    cert.space = space_to_string(prob.space);
    cert.kernel = prob.kernel;
    cert.mode = "lp";
    cert.h_jacobi = hj;
    cert.h_jacobi[0] = hj[0] - delta;
    cert.h_power = to_power_iv(cert.h_jacobi, params);
    cert.bound = cert.h_jacobi[0];
    if (verify_certificate(cert) == Verdict::Verified) return cert;
    last = std::move(cert);
  }
  return last;
}

Certificate lp_lower_bound(const SpaceDescriptor& space,
                           const KernelSpec& kernel, int degree,
                           int grid_size) {
  LPProblem prob = make_lp_problem(space, kernel, degree, grid_size);
  SimplexResult res;
  for (int iter = 0; iter < 60; ++iter) {
    res = simplex_solve(prob);
    double tstar = 0.0;
    double viol = worst_violation(res.coeffs, prob, tstar);
    if (viol < 1e-9) break;
    auto it = std::lower_bound(prob.grid.begin(), prob.grid.end(), tstar);
    if ((it != prob.grid.end() && *it - tstar < 1e-12) ||
        (it != prob.grid.begin() && tstar - *(it - 1) < 1e-12))
      break;  // cutting plane would duplicate an existing constraint
    prob.grid.insert(it, tstar);
  }
  return rigorize(res.coeffs, prob);
}

}  // namespace pframe
