#include "pframe/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pframe {

namespace {

// Neumaier compensated accumulator
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

double pair_tau(const WeightedConfiguration& c, const KernelSpec& kernel,
                size_t i, size_t j) {
  if (std::holds_alternative<PFrameKernel>(kernel))
    return projective_tau(c.points[i], c.points[j]);
  return config_tau(c, i, j);
}

void check_kernel_space(const WeightedConfiguration& c,
                        const KernelSpec& kernel) {
  if (requires_sphere(kernel) && c.space.kind != SpaceKind::Sphere)
    throw std::invalid_argument(
        "causal kernel is defined on spheres, not projective spaces");
}

}  // namespace

double energy(const WeightedConfiguration& c, const KernelSpec& kernel) {
  validate(c);
  check_kernel_space(c, kernel);
  Kahan acc;
  size_t n = c.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      double t = i == j ? 1.0 : pair_tau(c, kernel, i, j);
      acc.add(c.weights[i] * c.weights[j] * kernel_eval(kernel, t));
    }
  }
  return acc.value();
}

EnergyReport energy_report(const WeightedConfiguration& c,
                           const KernelSpec& kernel,
                           std::optional<double> target) {
  EnergyReport r;
  r.value = energy(c, kernel);
  r.kernel = kernel_name(kernel);
  r.space = c.space.name();
  r.n_points = c.size();
  r.census = distance_set(c);
  r.target = target;
  if (target) r.abs_error = std::abs(r.value - *target);
  return r;
}

nlohmann::json EnergyReport::to_json() const {
  nlohmann::json j;
  j["value"] = value;
  j["kernel"] = kernel;
  j["space"] = space;
  j["n_points"] = n_points;
  j["distance_set"] = census.values;
  j["pair_counts"] = census.pair_counts;
  if (target) {
    j["target"] = *target;
    j["abs_error"] = *abs_error;
  }
  return j;
}

UniformEnergy uniform_measure_energy(const KernelSpec& kernel,
                                     const SpaceDescriptor& space,
                                     double tol, int max_points) {
  if (requires_sphere(kernel) && space.kind != SpaceKind::Sphere)
    throw std::invalid_argument("causal kernel needs a sphere space");
  JacobiParams params = space.params();
  UniformEnergy out;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int n = 16; n <= max_points; n *= 2) {
    Quadrature q = gauss_jacobi(params, n);
    Kahan acc;
    for (int k = 0; k < n; ++k)
      acc.add(q.weights[k] * kernel_eval(kernel, q.nodes[k]));
    double v = acc.value();
    out.value = v;
    out.quad_points = n;
    if (!std::isnan(prev) && std::abs(v - prev) <= tol) {
      out.converged = true;
      break;
    }
    prev = v;
  }
  return out;
}

WeightOptimum optimal_weight_energy(const WeightedConfiguration& c,
                                    const KernelSpec& kernel) {
  check_kernel_space(c, kernel);
  int n = static_cast<int>(c.size());
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A(i, j) = kernel_eval(kernel, pair_tau(c, kernel, i, j));
  WeightOptimum out;
  Eigen::VectorXd w = A.ldlt().solve(Eigen::VectorXd::Ones(n));
  double total = w.sum();
  if (std::abs(total) > 1e-14) {
    w /= total;
    Eigen::VectorXd residual = A * w;
    double lambda = residual.mean();
    bool stationary = (residual.array() - lambda).abs().maxCoeff() <
                      1e-8 * std::max(1.0, std::abs(lambda));
    double stationary_energy = w.dot(A * w);
    // an interior stationary point of w'Aw is only the constrained minimum
    // when A is positive on the simplex tangent space; guard against
    // saddles by never returning more than the supplied weights give
    if (stationary && w.minCoeff() > 0.0 &&
        stationary_energy <= energy(c, kernel) + 1e-14) {
      out.interior = true;
      out.weights.assign(w.data(), w.data() + n);
      out.energy = stationary_energy;
      return out;
    }
  }
  out.weights = c.weights;
  out.energy = energy(c, kernel);
  return out;
}

double noncompact_energy(const std::vector<std::vector<FieldScalar>>& points,
                         const std::vector<double>& weights, double p,
                         double norm_tol) {
  if (points.size() != weights.size())
    throw std::invalid_argument("noncompact_energy: size mismatch");
  double second_moment = 0.0;
  std::vector<double> norms2(points.size(), 0.0);
  for (size_t i = 0; i < points.size(); ++i) {
    for (const auto& comp : points[i]) norms2[i] += comp.abs2();
    second_moment += weights[i] * norms2[i];
  }
  if (std::abs(second_moment - 1.0) > norm_tol)
    throw std::invalid_argument(
        "noncompact_energy: weighted second moment must equal 1");
  Kahan acc;
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = 0; j < points.size(); ++j) {
      FieldScalar s(0.0);
      for (size_t k = 0; k < points[i].size(); ++k)
        s = s + points[i][k] * points[j][k].conj();
      acc.add(weights[i] * weights[j] * std::pow(s.abs(), p));
    }
  }
  return acc.value();
}

}  // namespace pframe
