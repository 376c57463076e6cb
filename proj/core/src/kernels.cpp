#include "pframe/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace pframe {

namespace {

double pframe_eval_d(double p, double t, int deriv) {
  double q = 0.5 * p;
  double factor = std::pow(2.0, -q);
  for (int j = 0; j < deriv; ++j) factor *= q - j;
  double base = std::max(1.0 + t, 0.0);
  double expo = q - deriv;
  if (base == 0.0 && expo < 0.0)
    throw std::domain_error("p-frame derivative singular at t = -1");
  if (base == 0.0) return expo == 0.0 ? factor : 0.0;
  return factor * std::pow(base, expo);
}

double poly_eval_d(const std::vector<double>& c, double t, int deriv) {
  std::vector<double> cd(c);
  for (int j = 0; j < deriv; ++j) {
    std::vector<double> next;
    for (size_t k = 1; k < cd.size(); ++k)
      next.push_back(static_cast<double>(k) * cd[k]);
    cd = std::move(next);
  }
  double acc = 0.0;
  for (auto it = cd.rbegin(); it != cd.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Interval causal_eval(const CausalKernel& k, const Interval& t) {
  Interval raw = 2.0 * k.tau2 * (1.0 + t) * (2.0 - k.tau2 * (1.0 - t));
  Interval L = iv_max(raw, Interval(0.0));
  if (!k.normalized) return L;
  return L / (8.0 * k.tau2);
}

}  // namespace

Interval pframe_eval(const Interval& p, const Interval& t, int deriv) {
  Interval q = p * 0.5;
  Interval factor = iv_pow(Interval(2.0), -q);
  for (int j = 0; j < deriv; ++j) factor *= q - static_cast<double>(j);
  Interval base = intersect(1.0 + t, Interval(0.0, 2.0 + 1e-12));
  Interval expo = q - static_cast<double>(deriv);
  if (base.lo == 0.0 && expo.lo <= 0.0) {
    if (deriv == 0) throw std::domain_error("p-frame: p <= 0 at t = -1");
    throw std::domain_error("p-frame derivative singular at t = -1");
  }
  return factor * iv_pow(base, expo);
}

double kernel_eval(const KernelSpec& k, double t, int deriv) {
  return std::visit(
      [&](const auto& kk) -> double {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, PFrameKernel>) {
          return pframe_eval_d(kk.p, t, deriv);
        } else if constexpr (std::is_same_v<T, PolyKernel>) {
          return poly_eval_d(kk.coeffs, t, deriv);
        } else if constexpr (std::is_same_v<T, CausalKernel>) {
          if (deriv != 0)
            throw std::invalid_argument("causal kernel: derivatives undefined");
          Interval r = causal_eval(kk, Interval(t));
          return r.mid();
        } else {
          if (deriv != 0)
            throw std::invalid_argument(
                "jacobi kernel: use power form for derivatives");
          return kk.expansion.eval(t);
        }
      },
      k);
}

Interval kernel_eval(const KernelSpec& k, const Interval& t, int deriv) {
  return std::visit(
      [&](const auto& kk) -> Interval {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, PFrameKernel>) {
          return pframe_eval(Interval(kk.p), t, deriv);
        } else if constexpr (std::is_same_v<T, PolyKernel>) {
          std::vector<Interval> c(kk.coeffs.size());
          for (size_t i = 0; i < c.size(); ++i) c[i] = Interval(kk.coeffs[i]);
          for (int j = 0; j < deriv; ++j) c = poly_derivative(c);
          return poly_range(c, t);
        } else if constexpr (std::is_same_v<T, CausalKernel>) {
          if (deriv != 0)
            throw std::invalid_argument("causal kernel: derivatives undefined");
          return causal_eval(kk, t);
        } else {
          if (deriv != 0)
            throw std::invalid_argument(
                "jacobi kernel: use power form for derivatives");
          auto cv = kk.expansion.coeffs;
          std::vector<Interval> ci(cv.size());
          for (size_t i = 0; i < cv.size(); ++i) ci[i] = Interval(cv[i]);
          auto power = to_power_iv(ci, kk.expansion.params);
          return poly_range(power, t);
        }
      },
      k);
}

std::optional<int> abs_monotonic_degree(const KernelSpec& k) {
  const auto* pf = std::get_if<PFrameKernel>(&k);
  if (!pf) return std::nullopt;
  double p = pf->p;
  if (p <= 0) return std::nullopt;
  double half = 0.5 * p;
  if (half == std::floor(half)) return std::nullopt;  // even p: polynomial
  return static_cast<int>(std::ceil(half));
}

bool requires_sphere(const KernelSpec& k) {
  return std::holds_alternative<CausalKernel>(k);
}

std::string kernel_name(const KernelSpec& k) {
  return std::visit(
      [&](const auto& kk) -> std::string {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, PFrameKernel>) {
          return "pframe(p=" + double_to_string(kk.p) + ")";
        } else if constexpr (std::is_same_v<T, PolyKernel>) {
          return "poly(deg=" + std::to_string(kk.coeffs.empty()
                                                  ? 0
                                                  : kk.coeffs.size() - 1) +
                 ")";
        } else if constexpr (std::is_same_v<T, CausalKernel>) {
          return std::string(kk.normalized ? "causal-normalized(tau2="
                                           : "causal(tau2=") +
                 double_to_string(kk.tau2.mid()) + ")";
        } else {
          return "jacobi(deg=" + std::to_string(kk.expansion.degree()) + ")";
        }
      },
      k);
}

Rational even_p_minimum(Field field, int d, int k) {
  if (k < 0) throw std::invalid_argument("even_p_minimum: k >= 0");
  auto binom = [](int n, int r) {
    BigInt num = 1, den = 1;
    for (int j = 1; j <= r; ++j) {
      num *= n - r + j;
      den *= j;
    }
    return Rational(num, den);
  };
  switch (field) {
    case Field::R: {
      Rational c = 1;
      for (int j = 0; j < k; ++j) c *= Rational(2 * j + 1, d + 2 * j);
      return c;
    }
    case Field::C:
      return 1 / binom(d + k - 1, k);
    default:
      return Rational(k + 1) / binom(2 * d + k - 1, k);
  }
}

double sic_energy(int d) {
  double dd = d;
  return (1.0 + (dd * dd - 1.0) * std::pow(dd + 1.0, -1.5)) / (dd * dd);
}

}  // namespace pframe
