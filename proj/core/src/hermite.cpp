#include "pframe/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace pframe {

int NodeSystem::total_order() const {
  int n = 0;
  for (int m : multiplicities) n += m;
  return n;
}

void NodeSystem::expand(std::vector<Interval>& z,
                        std::vector<int>& which) const {
  z.clear();
  which.clear();
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (int k = 0; k < multiplicities[i]; ++k) {
      z.push_back(nodes[i]);
      which.push_back(static_cast<int>(i));
    }
  }
}

NodeSystem tight_node_system(int M, const std::vector<Interval>& distances) {
  if (M < 1) throw std::invalid_argument("tight_node_system: M >= 1");
  NodeSystem ns;
  bool even = M % 2 == 0;
  int m = even ? M / 2 : (M + 1) / 2;
  if (static_cast<int>(distances.size()) != m)
    throw std::invalid_argument(
        "tight_node_system: expected " + std::to_string(m) + " distances");
  if (even) {
    for (const auto& a : distances) {
      if (a.hi >= 1.0 || a.lo <= -1.0)
        throw std::invalid_argument(
            "tight_node_system: even strength needs interior distances");
      ns.nodes.push_back(a);
      ns.multiplicities.push_back(2);
    }
    ns.nodes.push_back(Interval(1.0));
    ns.multiplicities.push_back(1);
  } else {
    if (!distances.front().contains(-1.0))
      throw std::invalid_argument(
          "tight_node_system: odd strength needs -1 among distances");
    ns.nodes.push_back(Interval(-1.0));
    ns.multiplicities.push_back(1);
    for (size_t i = 1; i < distances.size(); ++i) {
      ns.nodes.push_back(distances[i]);
      ns.multiplicities.push_back(2);
    }
    ns.nodes.push_back(Interval(1.0));
    ns.multiplicities.push_back(1);
  }
  return ns;
}

std::vector<Interval> newton_coefficients(
    const std::function<Interval(const Interval&, int)>& f,
    const NodeSystem& ns) {
  std::vector<Interval> z;
  std::vector<int> which;
  ns.expand(z, which);
  int n = static_cast<int>(z.size());
  // dd[i] holds f[z_i, ..., z_{i+k}] at stage k
  std::vector<Interval> dd(n);
  std::vector<double> fact = {1.0};
  for (int i = 0; i < n; ++i) dd[i] = f(z[i], 0);
  std::vector<Interval> out(n);
  out[0] = dd[0];
  std::vector<Interval> prev = dd;
  for (int k = 1; k < n; ++k) {
    fact.push_back(fact.back() * k);
    std::vector<Interval> cur(n - k);
    for (int i = 0; i + k < n; ++i) {
      if (which[i] == which[i + k]) {
        cur[i] = f(z[i], k) * (1.0 / fact[k]);
      } else {
        cur[i] = (prev[i + 1] - prev[i]) / (z[i + k] - z[i]);
      }
    }
    out[k] = cur[0];
    prev = std::move(cur);
  }
  return out;
}

std::vector<Interval> newton_to_power(const std::vector<Interval>& newton,
                                      const std::vector<Interval>& z) {
  int n = static_cast<int>(newton.size());
  std::vector<Interval> poly = {newton[n - 1]};
  for (int k = n - 2; k >= 0; --k) {
    // poly <- poly * (t - z_k) + newton[k]
    std::vector<Interval> next(poly.size() + 1, Interval(0.0));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * z[k];
    }
    next[0] += newton[k];
    poly = std::move(next);
  }
  return poly;
}

std::vector<Interval> hermite_interpolant(const KernelSpec& f,
                                          const NodeSystem& ns) {
  auto eval = [&](const Interval& t, int order) {
    return kernel_eval(f, t, order);
  };
  auto newton = newton_coefficients(eval, ns);
  std::vector<Interval> z;
  std::vector<int> which;
  ns.expand(z, which);
  return newton_to_power(newton, z);
}

std::vector<double> hermite_interpolant_d(const KernelSpec& f,
                                          const NodeSystem& ns) {
  auto iv = hermite_interpolant(f, ns);
  std::vector<double> out(iv.size());
  for (size_t i = 0; i < iv.size(); ++i) out[i] = iv[i].mid();
  return out;
}

RemainderReport remainder_nonneg(const KernelSpec& f,
                                 const std::vector<Interval>& h_power,
                                 double slack, int max_depth) {
  // first-order centered sweep: the remainder has double roots at interior
  // nodes, where plain interval evaluation cannot resolve the sign
  std::vector<Interval> hp = poly_derivative(h_power);
  auto fn = [&](const Interval& t, int d) {
    return kernel_eval(f, t, d) - poly_eval(d == 0 ? h_power : hp, t);
  };
  auto sr = sweep_nonnegative_centered(fn, Interval(-1.0, 1.0), slack,
                                       max_depth);
  RemainderReport r;
  r.verdict = sr.verdict;
  r.inf_bound = sr.inf_bound;
  r.bad_cells = std::move(sr.bad_cells);
  return r;
}

}  // namespace pframe
