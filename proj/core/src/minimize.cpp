#include "pframe/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "pframe/catalog.hpp"
#include "pframe/energy.hpp"
#include "pframe/jacobi.hpp"

namespace pframe {

namespace {

using Points = std::vector<std::vector<FieldScalar>>;

void normalize(std::vector<FieldScalar>& x) {
  double n2 = 0.0;
  for (const auto& c : x) n2 += c.abs2();
  double inv = 1.0 / std::sqrt(n2);
  for (auto& c : x) c = inv * c;
}

FieldScalar inner(const std::vector<FieldScalar>& a,
                  const std::vector<FieldScalar>& b) {
  FieldScalar s(0.0);
  for (size_t k = 0; k < a.size(); ++k) s = s + a[k] * b[k].conj();
  return s;
}

double kernel_deriv(const KernelSpec& k, double t) {
  if (const auto* ck = std::get_if<CausalKernel>(&k)) {
    // subgradient at the kink: zero on the flat side
    double tau2 = ck->tau2.mid();
    double raw = 2.0 * tau2 * (1.0 + t) * (2.0 - tau2 * (1.0 - t));
    if (raw <= 0.0) return 0.0;
    double d = 2.0 * tau2 * ((2.0 - tau2 * (1.0 - t)) + (1.0 + t) * tau2);
    return ck->normalized ? d / (8.0 * tau2) : d;
  }
  if (const auto* jk = std::get_if<JacobiKernel>(&k)) {
    std::vector<double> power = to_power(jk->expansion);
    double acc = 0.0;
    for (size_t n = power.size(); n-- > 1;)
      acc = acc * t + static_cast<double>(n) * power[n];
    return acc;
  }
  if (const auto* pf = std::get_if<PFrameKernel>(&k))
    if (pf->p < 2.0) t = std::max(t, -1.0 + 1e-9);  // derivative blows up
  return kernel_eval(k, t, 1);
}

struct Objective {
  const KernelSpec* kernel;
  bool projective;  // kernel variable is 2|<x,y>|^2 - 1

  double tau(const FieldScalar& s) const {
    double t = projective ? 2.0 * s.abs2() - 1.0 : s.re();
    return std::clamp(t, -1.0, 1.0);
  }

  double energy(const Points& P, const std::vector<double>& w) const {
    double f1 = kernel_eval(*kernel, 1.0);
    double acc = 0.0;
    for (size_t i = 0; i < P.size(); ++i) {
      acc += w[i] * w[i] * f1;
      for (size_t j = i + 1; j < P.size(); ++j)
        acc += 2.0 * w[i] * w[j] * kernel_eval(*kernel, tau(inner(P[i], P[j])));
    }
    return acc;
  }

  // Riemannian gradient with respect to the points (tangential part only)
  Points point_gradient(const Points& P, const std::vector<double>& w) const {
    size_t n = P.size(), d = P[0].size();
    Points G(n, std::vector<FieldScalar>(d, FieldScalar(0.0)));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        FieldScalar s = inner(P[i], P[j]);
        double fp = kernel_deriv(*kernel, tau(s));
        if (projective) {
          double c = 8.0 * w[i] * w[j] * fp;
          for (size_t k = 0; k < d; ++k)
            G[i][k] = G[i][k] + c * (s * P[j][k]);
        } else {
          double c = 2.0 * w[i] * w[j] * fp;
          for (size_t k = 0; k < d; ++k) G[i][k] = G[i][k] + c * P[j][k];
        }
      }
      // project out the radial component
      double dot = 0.0;
      for (size_t k = 0; k < d; ++k)
        for (int a = 0; a < 4; ++a) dot += G[i][k].c[a] * P[i][k].c[a];
      for (size_t k = 0; k < d; ++k) G[i][k] = G[i][k] - dot * P[i][k];
    }
    return G;
  }

  std::vector<double> weight_gradient(const Points& P,
                                      const std::vector<double>& w) const {
    size_t n = P.size();
    double f1 = kernel_eval(*kernel, 1.0);
    std::vector<double> g(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      g[i] = 2.0 * w[i] * f1;
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        g[i] += 2.0 * w[j] * kernel_eval(*kernel, tau(inner(P[i], P[j])));
      }
    }
    return g;
  }
};

std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  int rho = 0;
  for (size_t j = 0; j < u.size(); ++j) {
    cum += u[j];
    double t = (cum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) {
      rho = static_cast<int>(j + 1);
      theta = t;
    }
  }
  (void)rho;
  for (double& x : v) x = std::max(x - theta, 0.0);
  return v;
}

double grad_norm2(const Points& G) {
  double n2 = 0.0;
  for (const auto& row : G)
    for (const auto& c : row) n2 += c.abs2();
  return n2;
}

}  // namespace

ParticleState minimize_energy(const SpaceDescriptor& space,
                              const KernelSpec& kernel, int n_points,
                              std::uint64_t seed,
                              const MinimizeOptions& opts) {
  if (n_points < 1) throw std::invalid_argument("need at least one point");
  if (requires_sphere(kernel) && space.kind != SpaceKind::Sphere)
    throw std::invalid_argument("causal kernel needs a sphere space");

  Objective obj{&kernel, std::holds_alternative<PFrameKernel>(kernel) ||
                             space.kind == SpaceKind::Projective};

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  int e = field_dim(space.field);
  Points P(n_points, std::vector<FieldScalar>(space.d, FieldScalar(0.0)));
  for (auto& x : P) {
    double n2 = 0.0;
    while (n2 < 1e-12) {
      for (auto& c : x) {
        c = FieldScalar(0.0);
        for (int a = 0; a < e; ++a) c.c[a] = gauss(rng);
      }
      n2 = 0.0;
      for (const auto& c : x) n2 += c.abs2();
    }
    normalize(x);
  }
  std::vector<double> w(n_points, 1.0 / n_points);

  double E = obj.energy(P, w);
  double step_x = opts.init_step, step_w = opts.init_step;
  ParticleState st;
  st.seed = seed;
  if (opts.record_trace) st.energy_trace.push_back(E);

  int iter = 0;
  for (; iter < opts.max_iters; ++iter) {
    Points G = obj.point_gradient(P, w);
    double gx2 = grad_norm2(G);
    st.point_grad_norm = std::sqrt(gx2);
    if (gx2 > opts.grad_tol * opts.grad_tol) {
      double s = step_x;
      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        Points trial = P;
        for (size_t i = 0; i < trial.size(); ++i) {
          for (size_t k = 0; k < trial[i].size(); ++k)
            trial[i][k] = trial[i][k] - s * G[i][k];
          normalize(trial[i]);
        }
        double Et = obj.energy(trial, w);
        if (Et <= E - opts.armijo_c * s * gx2) {
          P = std::move(trial);
          E = Et;
          accepted = true;
          break;
        }
        s *= 0.5;
      }
      step_x = accepted ? std::min(2.0 * s, 10.0) : std::max(s, 1e-14);
    }

    std::vector<double> gw = obj.weight_gradient(P, w);
    double lambda = 0.0;
    for (size_t i = 0; i < gw.size(); ++i) lambda += w[i] * gw[i];
    double kkt = 0.0;
    for (size_t i = 0; i < gw.size(); ++i)
      kkt = std::max(kkt, w[i] > 1e-12 ? std::abs(gw[i] - lambda)
                                       : std::max(0.0, lambda - gw[i]));
    st.weight_grad_norm = kkt;
    if (kkt > opts.grad_tol) {
      double s = step_w;
      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        std::vector<double> trial(w.size());
        for (size_t i = 0; i < w.size(); ++i) trial[i] = w[i] - s * gw[i];
        trial = project_simplex(std::move(trial));
        double move2 = 0.0;
        for (size_t i = 0; i < w.size(); ++i)
          move2 += (trial[i] - w[i]) * (trial[i] - w[i]);
        double Et = obj.energy(P, trial);
        if (Et <= E - opts.armijo_c / std::max(s, 1e-300) * move2) {
          w = std::move(trial);
          E = Et;
          accepted = true;
          break;
        }
        s *= 0.5;
      }
      step_w = accepted ? std::min(2.0 * s, 10.0) : std::max(s, 1e-14);
    }

    if (opts.record_trace) st.energy_trace.push_back(E);
    if (st.point_grad_norm <= opts.grad_tol &&
        st.weight_grad_norm <= opts.grad_tol) {
      st.converged = true;
      break;
    }
  }
  st.iterations = iter;

  WeightedConfiguration cfg;
  cfg.space = space;
  for (auto& x : P) cfg.points.emplace_back(std::move(x));
  cfg.weights = w;
  st.config = std::move(cfg);
  st.energy = energy(st.config, kernel);
  return st;
}

std::vector<ParticleState> multistart(const SpaceDescriptor& space,
                                      const KernelSpec& kernel, int n_points,
                                      int starts, std::uint64_t seed,
                                      const MinimizeOptions& opts) {
  std::vector<ParticleState> runs;
  runs.reserve(starts);
  for (int k = 0; k < starts; ++k) {
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ull * (k + 1);
    runs.push_back(minimize_energy(space, kernel, n_points, s, opts));
  }
  return runs;
}

const ParticleState& best_run(const std::vector<ParticleState>& runs) {
  if (runs.empty()) throw std::invalid_argument("no runs");
  const ParticleState* best = &runs.front();
  for (const auto& r : runs)
    if (r.energy < best->energy) best = &r;
  return *best;
}

WeightedConfiguration canonicalize_support(const ParticleState& state,
                                           double merge_tol,
                                           double weight_floor) {
  const WeightedConfiguration& c = state.config;
  bool proj = c.uses_projective_tau();
  std::vector<std::vector<FieldScalar>> reps;
  std::vector<double> w;
  for (size_t i = 0; i < c.size(); ++i) {
    const auto& x = c.points[i].x;
    int found = -1;
    for (size_t r = 0; r < reps.size(); ++r) {
      double d;
      FieldScalar s(0.0);
      for (size_t k = 0; k < x.size(); ++k) s = s + x[k] * reps[r][k].conj();
      if (proj) {
        d = std::sqrt(std::max(0.0, 2.0 - 2.0 * s.abs()));
      } else {
        d = std::sqrt(std::max(0.0, 2.0 - 2.0 * s.re()));
      }
      if (d <= merge_tol) {
        found = static_cast<int>(r);
        break;
      }
    }
    if (found >= 0) {
      w[found] += c.weights[i];
    } else {
      reps.push_back(x);
      w.push_back(c.weights[i]);
    }
  }
  WeightedConfiguration out;
  out.space = c.space;
  out.projective_lines = c.projective_lines;
  double total = 0.0;
  for (size_t r = 0; r < reps.size(); ++r) {
    if (w[r] < weight_floor) continue;
    out.points.emplace_back(reps[r]);
    out.weights.push_back(w[r]);
    total += w[r];
  }
  if (out.points.empty())
    throw std::runtime_error("canonicalization pruned every point");
  for (double& x : out.weights) x /= total;
  return out;
}

CatalogMatch compare_to_catalog(const WeightedConfiguration& config,
                                const KernelSpec& kernel) {
  CatalogMatch rep;
  rep.energy = energy(config, kernel);
  rep.best_energy = std::numeric_limits<double>::infinity();
  // optimizer output is only ~1e-6 accurate; group distances coarsely so a
  // converged configuration censuses like its exact counterpart
  const double census_tol = 1e-4;
  DistanceCensus mine = distance_set(config, census_tol);
  const auto* pf = std::get_if<PFrameKernel>(&kernel);
  for (const auto& entry : catalog()) {
    if (!(entry.space == config.space)) continue;
    double e;
    WeightedConfiguration built;
    if (entry.constructible()) {
      built = entry.build();
      e = energy(built, kernel);
    } else if (pf) {
      e = census_energy(entry, pf->p);
    } else {
      continue;
    }
    if (e < rep.best_energy) {
      rep.best_energy = e;
      rep.best_name = entry.name;
    }
    if (rep.census_match) continue;
    if (entry.n_lines != static_cast<int>(config.size())) continue;
    std::vector<double> their_values;
    std::vector<long long> their_counts;
    if (entry.constructible()) {
      DistanceCensus theirs = distance_set(built, census_tol);
      their_values = theirs.values;
      their_counts = theirs.pair_counts;
    } else {
      // census-only entry: lines listed by |<x,y>|, convert to tau
      std::vector<std::pair<double, long long>> rows;
      for (const auto& line : entry.census)
        rows.emplace_back(2.0 * line.abs_inner * line.abs_inner - 1.0,
                          line.ordered_pairs);
      std::sort(rows.begin(), rows.end());
      for (const auto& [v, c] : rows) {
        their_values.push_back(v);
        their_counts.push_back(c);
      }
    }
    if (their_values.size() != mine.values.size()) continue;
    bool same = true;
    for (size_t k = 0; k < mine.values.size(); ++k)
      if (std::abs(mine.values[k] - their_values[k]) > 1e-3 ||
          mine.pair_counts[k] != their_counts[k])
        same = false;
    if (!same) continue;
    rep.name = entry.name;
    rep.census_match = true;
    rep.strength_match =
        design_strength(config, entry.strength, 1e-6).strength >=
        entry.strength;
    rep.energy_gap = std::abs(rep.energy - e) / std::max(std::abs(e), 1e-300);
  }
  if (!rep.census_match && std::isfinite(rep.best_energy))
    rep.energy_gap = (rep.energy - rep.best_energy) /
                     std::max(std::abs(rep.best_energy), 1e-300);
  return rep;
}

}  // namespace pframe
