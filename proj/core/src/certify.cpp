#include "pframe/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "pframe/catalog.hpp"
#include "pframe/energy.hpp"
#include "pframe/jacobi.hpp"

namespace pframe {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Falsified: return "falsified";
    default: return "inconclusive";
  }
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "verified") return Verdict::Verified;
  if (s == "falsified") return Verdict::Falsified;
  if (s == "inconclusive") return Verdict::Inconclusive;
  throw std::invalid_argument("unknown verdict: " + s);
}

namespace {

std::string sweep_to_string(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::Nonnegative: return "nonnegative";
    case SweepVerdict::Negative: return "negative";
    default: return "inconclusive";
  }
}

SweepVerdict sweep_from_string(const std::string& s) {
  if (s == "nonnegative") return SweepVerdict::Nonnegative;
  if (s == "negative") return SweepVerdict::Negative;
  if (s == "inconclusive") return SweepVerdict::Inconclusive;
  throw std::invalid_argument("unknown sweep verdict: " + s);
}

nlohmann::json iv_json(const Interval& v) {
  return nlohmann::json::array({double_to_string(v.lo), double_to_string(v.hi)});
}

Interval iv_parse(const nlohmann::json& j) {
  return Interval(std::stod(j.at(0).get<std::string>()),
                  std::stod(j.at(1).get<std::string>()));
}

std::vector<Interval> poly_sub(std::vector<Interval> a,
                               const std::vector<Interval>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Interval(0.0));
  for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  return a;
}

int trimmed_degree(const std::vector<Interval>& h) {
  int d = static_cast<int>(h.size()) - 1;
  while (d > 0 && std::max(std::abs(h[d].lo), std::abs(h[d].hi)) <= 1e-12) --d;
  return d;
}

Rational binomial(int n, int r) {
  BigInt num = 1, den = 1;
  for (int j = 1; j <= r; ++j) {
    num *= n - r + j;
    den *= j;
  }
  return Rational(num, den);
}

// Exact power coefficients when the kernel is a polynomial in disguise:
// explicit polynomials, Jacobi-basis polynomials, and p-frame kernels with
// even integer p, where f(t) = ((1+t)/2)^{p/2} expands binomially.
std::optional<std::vector<Interval>> polynomial_form(const KernelSpec& k) {
  if (const auto* pk = std::get_if<PolyKernel>(&k)) {
    std::vector<Interval> c(pk->coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = Interval(pk->coeffs[i]);
    return c;
  }
  if (const auto* jk = std::get_if<JacobiKernel>(&k)) {
    const auto& cv = jk->expansion.coeffs;
    std::vector<Interval> c(cv.size());
    for (size_t i = 0; i < cv.size(); ++i) c[i] = Interval(cv[i]);
    return to_power_iv(c, jk->expansion.params);
  }
  if (const auto* pf = std::get_if<PFrameKernel>(&k)) {
    double half = 0.5 * pf->p;
    if (half > 0 && half == std::floor(half)) {
      int m = static_cast<int>(half);
      Rational scale = Rational(1);
      for (int j = 0; j < m; ++j) scale /= 2;
      std::vector<Interval> c(m + 1);
      for (int j = 0; j <= m; ++j)
        c[j] = Interval::from_rational(binomial(m, j) * scale);
      return c;
    }
  }
  return std::nullopt;
}

SweepResult causal_remainder(const CausalKernel& ck,
                             const std::vector<Interval>& h,
                             const VerifySettings& vs) {
  // f = max(0, raw) with raw quadratic; f - h >= 0 splits into -h >= 0
  // where raw <= 0 (left of t0, the zero of the second factor) and
  // raw - h >= 0 where raw >= 0.  Both pieces are single polynomials, so
  // the sweeps are free of interval cancellation.
  Interval tau2 = ck.tau2;
  std::vector<Interval> raw = {2.0 * tau2 * (2.0 - tau2), 4.0 * tau2,
                               2.0 * tau2 * tau2};
  if (ck.normalized) {
    Interval l1 = 8.0 * tau2;
    for (auto& c : raw) c = c / l1;
  }
  Interval t0 = 1.0 - Interval(2.0) / tau2;
  auto poly_sweep = [&](const std::vector<Interval>& r, const Interval& dom) {
    std::vector<Interval> rd = poly_derivative(r);
    return sweep_nonnegative_centered(
        [&r, &rd](const Interval& t, int d) {
          return poly_eval(d == 0 ? r : rd, t);
        },
        dom, vs.remainder_slack, vs.sweep_depth);
  };
  SweepResult res;
  res.verdict = SweepVerdict::Nonnegative;
  res.inf_bound = 0.0;
  auto merge = [&res](const SweepResult& part) {
    if (part.verdict == SweepVerdict::Negative ||
        res.verdict == SweepVerdict::Negative)
      res.verdict = SweepVerdict::Negative;
    else if (part.verdict == SweepVerdict::Inconclusive)
      res.verdict = SweepVerdict::Inconclusive;
    res.inf_bound = std::min(res.inf_bound, part.inf_bound);
    res.bad_cells.insert(res.bad_cells.end(), part.bad_cells.begin(),
                         part.bad_cells.end());
  };
  if (t0.hi > -1.0) {
    std::vector<Interval> minus_h = poly_sub({}, h);
    merge(poly_sweep(minus_h, Interval(-1.0, std::min(t0.hi, 1.0))));
  }
  if (t0.lo < 1.0) {
    std::vector<Interval> rmh = poly_sub(raw, h);
    merge(poly_sweep(rmh, Interval(std::max(t0.lo, -1.0), 1.0)));
  }
  return res;
}

SweepResult remainder_check(const Certificate& cert,
                            const std::optional<std::vector<Interval>>& f_power,
                            const VerifySettings& vs) {
  const auto& h = cert.h_power;
  Interval dom(-1.0, 1.0);
  // the enclosure of the remainder can never get tighter than the widths of
  // the stored coefficient intervals, so sweeping below that floor stalls
  double width_floor = 0.0;
  for (const auto& c : h) width_floor += c.width();
  double slack = std::max(vs.remainder_slack, 2.0 * width_floor);
  if (f_power) {
    std::vector<Interval> r =
        cert.upper ? poly_sub(h, *f_power) : poly_sub(*f_power, h);
    std::vector<Interval> rp = poly_derivative(r);
    // centered sweep: the remainder has double roots at interior nodes
    return sweep_nonnegative_centered(
        [&r, &rp](const Interval& t, int d) {
          return poly_eval(d == 0 ? r : rp, t);
        },
        dom, slack, vs.sweep_depth);
  }
  if (const auto* ck = std::get_if<CausalKernel>(&cert.kernel)) {
    if (cert.upper)
      throw std::invalid_argument("causal kernels certify lower bounds only");
    return causal_remainder(*ck, h, vs);
  }
  std::vector<Interval> hp = poly_derivative(h);
  double sgn = cert.upper ? -1.0 : 1.0;
  auto fn = [&](const Interval& t, int d) -> Interval {
    Interval diff =
        kernel_eval(cert.kernel, t, d) - poly_eval(d == 0 ? h : hp, t);
    return sgn * diff;
  };
  return sweep_nonnegative_centered(fn, dom, slack, vs.sweep_depth);
}

Verdict run_checks(Certificate& cert, const WeightedConfiguration* config,
                   const VerifySettings& vs) {
  SpaceDescriptor space = cert.space_descriptor();
  JacobiParams params = space.params();
  bool fail = false;

  if (cert.h_power.empty() && !cert.h_jacobi.empty())
    cert.h_power = to_power_iv(cert.h_jacobi, params);
  if (cert.h_power.empty())
    throw std::invalid_argument("certificate carries no polynomial");

  // reconcile the stored Jacobi coefficients with a fresh expansion of the
  // power form; the stored values carry the bound, so they must agree
  std::vector<Interval> recomputed = expand_iv(cert.h_power, params);
  bool consistent = true;
  if (cert.h_jacobi.empty()) {
    cert.h_jacobi = recomputed;
  } else {
    size_t n = std::max(cert.h_jacobi.size(), recomputed.size());
    cert.h_jacobi.resize(n, Interval(0.0));
    recomputed.resize(n, Interval(0.0));
    for (size_t i = 0; i < n; ++i)
      if (cert.h_jacobi[i].hi < recomputed[i].lo ||
          recomputed[i].hi < cert.h_jacobi[i].lo)
        consistent = false;
  }

  double worst = std::numeric_limits<double>::infinity();
  bool signs_ok = true;
  // Moment certificates bound measures that annihilate every Jacobi
  // component of h below the moment degree (the strength check ties this to
  // the attached design), so those coefficients carry no sign condition.
  size_t sign_start = cert.mode == "moment" ? cert.h_jacobi.size() : 1;
  for (size_t n = sign_start; n < cert.h_jacobi.size(); ++n) {
    const Interval& c = cert.h_jacobi[n];
    double margin = cert.upper ? -c.hi : c.lo;
    worst = std::min(worst, margin);
    if (margin < -vs.coeff_slack) {
      signs_ok = false;
      // entire enclosure on the wrong side: definitely falsified
      double definite = cert.upper ? c.lo : -c.hi;
      if (definite > vs.coeff_slack) fail = true;
    }
  }
  cert.checks.min_jacobi_coeff = std::isfinite(worst) ? worst : 0.0;
  cert.checks.positive_definite = signs_ok && consistent;
  if (!consistent) fail = true;

  if (cert.bound.lo == 0.0 && cert.bound.hi == 0.0 &&
      !cert.h_jacobi[0].contains(0.0))
    cert.bound = cert.h_jacobi[0];
  if (cert.bound.hi < cert.h_jacobi[0].lo ||
      cert.h_jacobi[0].hi < cert.bound.lo) {
    cert.checks.positive_definite = false;
    fail = true;
  }

  std::optional<std::vector<Interval>> f_power = polynomial_form(cert.kernel);
  SweepResult sr = remainder_check(cert, f_power, vs);
  cert.checks.h_leq_f = sr.verdict;
  cert.checks.remainder_inf = sr.inf_bound;
  if (sr.verdict == SweepVerdict::Negative) fail = true;

  auto feval = [&](const Interval& t, int d) -> Interval {
    if (f_power) {
      std::vector<Interval> c = *f_power;
      for (int j = 0; j < d; ++j) c = poly_derivative(c);
      return poly_eval(c, t);
    }
    return kernel_eval(cert.kernel, t, d);
  };
  bool interp = true;
  for (size_t i = 0; i < cert.nodes.nodes.size(); ++i) {
    std::vector<Interval> hk = cert.h_power;
    for (int d = 0; d < cert.nodes.multiplicities[i]; ++d) {
      Interval gap =
          feval(cert.nodes.nodes[i], d) - poly_eval(hk, cert.nodes.nodes[i]);
      if (gap.lo > vs.node_slack || gap.hi < -vs.node_slack) {
        interp = false;
        fail = true;
      }
      hk = poly_derivative(hk);
    }
  }
  cert.checks.interpolation_match = interp;

  int deg = trimmed_degree(cert.h_power);
  bool strength_ok = true;
  bool energy_ok = true;
  if (config) {
    // attainment: every Jacobi component of h that is actually present must
    // be annihilated by the configuration's moments (a design of strength
    // deg h is sufficient but not necessary -- the degree-8 600-cell
    // polynomial skips C_6 precisely because the 6th moment survives)
    StrengthReport st = design_strength(*config, deg);
    for (int n = 1; n <= deg; ++n) {
      bool coeff_zero =
          n < static_cast<int>(cert.h_jacobi.size())
              ? std::max(std::abs(cert.h_jacobi[n].lo),
                         std::abs(cert.h_jacobi[n].hi)) <= vs.coeff_slack
              : true;
      double resid =
          n <= static_cast<int>(st.residuals.size()) ? st.residuals[n - 1] : 1.0;
      if (!coeff_zero && resid > 1e-10) strength_ok = false;
    }
    if (!strength_ok) fail = true;
    double e = energy(*config, cert.kernel);
    double gap = std::abs(cert.bound.mid() - e);
    cert.checks.bound_energy_gap = gap;
    energy_ok = gap <= vs.energy_tol;
    if (!energy_ok) fail = true;
  } else {
    cert.checks.bound_energy_gap.reset();
  }
  cert.checks.design_strength_sufficient = strength_ok;

  bool all_ok = cert.checks.positive_definite && interp && strength_ok &&
                energy_ok && sr.verdict == SweepVerdict::Nonnegative;
  cert.verdict = fail ? Verdict::Falsified
                      : (all_ok ? Verdict::Verified : Verdict::Inconclusive);
  return cert.verdict;
}

// Distance set as interval enclosures: catalog entries carry exact values;
// otherwise the measured census values are inflated a little.
std::vector<Interval> config_distances(const WeightedConfiguration& c) {
  if (c.exact_distances) return *c.exact_distances;
  std::vector<Interval> out;
  for (double v : distance_set(c).values)
    out.push_back(Interval(v - 1e-12, v + 1e-12));
  return out;
}

}  // namespace

SpaceDescriptor Certificate::space_descriptor() const {
  return parse_space(space);
}

nlohmann::json kernel_to_json(const KernelSpec& k) {
  nlohmann::json j;
  std::visit(
      [&](const auto& kk) {
        using T = std::decay_t<decltype(kk)>;
        if constexpr (std::is_same_v<T, PFrameKernel>) {
          j["type"] = "pframe";
          j["p"] = double_to_string(kk.p);
        } else if constexpr (std::is_same_v<T, CausalKernel>) {
          j["type"] = "causal";
          j["tau2"] = iv_json(kk.tau2);
          j["normalized"] = kk.normalized;
        } else if constexpr (std::is_same_v<T, PolyKernel>) {
          j["type"] = "poly";
          nlohmann::json c = nlohmann::json::array();
          for (double v : kk.coeffs) c.push_back(double_to_string(v));
          j["coeffs"] = c;
        } else {
          j["type"] = "jacobi";
          j["alpha"] = rational_to_string(kk.expansion.params.alpha);
          j["beta"] = rational_to_string(kk.expansion.params.beta);
          nlohmann::json c = nlohmann::json::array();
          for (double v : kk.expansion.coeffs) c.push_back(double_to_string(v));
          j["coeffs"] = c;
        }
      },
      k);
  return j;
}

KernelSpec kernel_from_json(const nlohmann::json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "pframe")
    return PFrameKernel{std::stod(j.at("p").get<std::string>())};
  if (type == "causal")
    return CausalKernel{iv_parse(j.at("tau2")), j.at("normalized").get<bool>()};
  if (type == "poly") {
    PolyKernel k;
    for (const auto& v : j.at("coeffs"))
      k.coeffs.push_back(std::stod(v.get<std::string>()));
    return k;
  }
  if (type == "jacobi") {
    JacobiKernel k;
    k.expansion.params.alpha = parse_rational(j.at("alpha").get<std::string>());
    k.expansion.params.beta = parse_rational(j.at("beta").get<std::string>());
    for (const auto& v : j.at("coeffs"))
      k.expansion.coeffs.push_back(std::stod(v.get<std::string>()));
    return k;
  }
  throw std::invalid_argument("unknown kernel type: " + type);
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["space"] = space;
  j["kernel"] = kernel_to_json(kernel);
  j["mode"] = mode;
  j["upper"] = upper;
  nlohmann::json ns = nlohmann::json::array();
  for (size_t i = 0; i < nodes.nodes.size(); ++i) {
    nlohmann::json n;
    n["value"] = iv_json(nodes.nodes[i]);
    n["multiplicity"] = nodes.multiplicities[i];
    if (i < node_labels.size()) n["label"] = node_labels[i];
    ns.push_back(n);
  }
  j["nodes"] = ns;
  nlohmann::json hp = nlohmann::json::array();
  for (const auto& c : h_power) hp.push_back(iv_json(c));
  j["h_power"] = hp;
  nlohmann::json hj = nlohmann::json::array();
  for (const auto& c : h_jacobi) hj.push_back(iv_json(c));
  j["h_jacobi"] = hj;
  j["bound"] = iv_json(bound);
  if (!matched_config.empty()) j["matched_config"] = matched_config;
  nlohmann::json ck;
  ck["h_leq_f"] = sweep_to_string(checks.h_leq_f);
  ck["positive_definite"] = checks.positive_definite;
  ck["interpolation_match"] = checks.interpolation_match;
  ck["design_strength_sufficient"] = checks.design_strength_sufficient;
  ck["remainder_inf"] = double_to_string(checks.remainder_inf);
  ck["min_jacobi_coeff"] = double_to_string(checks.min_jacobi_coeff);
  if (checks.bound_energy_gap)
    ck["bound_energy_gap"] = double_to_string(*checks.bound_energy_gap);
  j["checks"] = ck;
  j["verdict"] = pframe::to_string(verdict);
  return j;
}

Certificate Certificate::from_json(const nlohmann::json& j) {
  Certificate c;
  c.space = j.at("space").get<std::string>();
  c.kernel = kernel_from_json(j.at("kernel"));
  c.mode = j.value("mode", std::string("lp"));
  c.upper = j.value("upper", false);
  if (j.contains("nodes")) {
    for (const auto& n : j.at("nodes")) {
      c.nodes.nodes.push_back(iv_parse(n.at("value")));
      c.nodes.multiplicities.push_back(n.at("multiplicity").get<int>());
      c.node_labels.push_back(n.value("label", std::string()));
    }
  }
  for (const auto& v : j.at("h_power")) c.h_power.push_back(iv_parse(v));
  if (j.contains("h_jacobi"))
    for (const auto& v : j.at("h_jacobi")) c.h_jacobi.push_back(iv_parse(v));
  if (j.contains("bound")) c.bound = iv_parse(j.at("bound"));
  c.matched_config = j.value("matched_config", std::string());
  if (j.contains("checks")) {
    const auto& ck = j.at("checks");
    c.checks.h_leq_f =
        sweep_from_string(ck.value("h_leq_f", std::string("inconclusive")));
    c.checks.positive_definite = ck.value("positive_definite", false);
    c.checks.interpolation_match = ck.value("interpolation_match", false);
    c.checks.design_strength_sufficient =
        ck.value("design_strength_sufficient", false);
  }
  if (j.contains("verdict"))
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  return c;
}

Verdict verify_certificate(Certificate& cert,
                           const WeightedConfiguration* config,
                           const VerifySettings& vs) {
  return run_checks(cert, config, vs);
}

Certificate build_tight_certificate(const WeightedConfiguration& config,
                                    const KernelSpec& kernel,
                                    const std::string& config_name) {
  validate(config);
  TightnessReport tr = tightness_check(config);
  if (!tr.tight)
    throw std::invalid_argument("configuration is not a tight design: " +
                                tr.note);
  const auto* pf = std::get_if<PFrameKernel>(&kernel);
  if (!pf)
    throw std::invalid_argument(
        "tight-design certificates cover p-frame kernels");
  if (pf->p <= 0) throw std::invalid_argument("p must be positive");

  Certificate cert;
  cert.space = space_to_string(config.space);
  cert.kernel = kernel;
  cert.matched_config = config_name;
  JacobiParams params = config.space.params();

  double half = 0.5 * pf->p;
  if (half == std::floor(half)) {
    // even integer p: the kernel is its own certificate (a positive
    // definite polynomial of degree p/2 <= design strength)
    int m = static_cast<int>(half);
    if (m > tr.strength)
      throw std::invalid_argument(
          "p/2 exceeds the design strength; no equality at this design");
    cert.mode = "positive-definite";
    cert.h_power = *polynomial_form(kernel);
  } else {
    auto M = abs_monotonic_degree(kernel);
    if (!M || *M != tr.strength)
      throw std::invalid_argument(
          "kernel monotonicity degree does not match the design strength " +
          std::to_string(tr.strength));
    cert.mode = "tight";
    cert.nodes = tight_node_system(tr.strength, config_distances(config));
    cert.h_power = hermite_interpolant(kernel, cert.nodes);
  }
  cert.h_jacobi = expand_iv(cert.h_power, params);
  cert.bound = cert.h_jacobi[0];
  run_checks(cert, &config, VerifySettings());
  return cert;
}

namespace {

// The 600-cell system: RP^3 Jacobi basis C_0..C_8 without C_6, matched to
// f and f' at the five cosines of the 600-cell's line system.
struct System600 {
  JacobiParams params;
  std::vector<int> basis;
  std::vector<Interval> nodes;
  std::vector<std::vector<Interval>> cpoly;
  std::vector<std::vector<Interval>> cpoly_d;
};

const System600& system600() {
  static const System600 sys = [] {
    System600 s;
    s.params = space_params(Field::R, 4, SpaceKind::Projective);
    s.basis = {0, 1, 2, 3, 4, 5, 7, 8};
    Interval s5 = iv_sqrt(Interval(5.0));
    s.nodes = {Interval(-1.0), (s5 + 1.0) * Interval(-0.25), Interval(-0.5),
               (s5 - 1.0) * Interval(0.25), Interval(1.0)};
    for (int n = 0; n <= 8; ++n) {
      s.cpoly.push_back(jacobi_coeffs_iv(s.params, n));
      s.cpoly_d.push_back(poly_derivative(s.cpoly.back()));
    }
    return s;
  }();
  return sys;
}

std::vector<Interval> solve_interval_system(
    std::vector<std::vector<Interval>> A, std::vector<Interval> b) {
  int n = static_cast<int>(A.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = -1.0;
    for (int r = col; r < n; ++r) {
      double m = std::abs(A[r][col].mid());
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (A[piv][col].contains_zero())
      throw std::runtime_error(
          "interval linear solve: pivot enclosure straddles zero");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      Interval factor = A[r][col] / A[col][col];
      for (int j = col + 1; j < n; ++j) A[r][j] -= factor * A[col][j];
      A[r][col] = Interval(0.0);
      b[r] -= factor * b[col];
    }
  }
  std::vector<Interval> x(n, Interval(0.0));
  for (int r = n - 1; r >= 0; --r) {
    Interval acc = b[r];
    for (int j = r + 1; j < n; ++j) acc -= A[r][j] * x[j];
    x[r] = acc / A[r][r];
  }
  return x;
}

// Jacobi coefficients h_0..h_8 (h_6 = 0 by construction) of the 600-cell
// interpolant, enclosed over the whole exponent interval.
std::vector<Interval> solve600(const Interval& p) {
  const System600& s = system600();
  std::vector<std::vector<Interval>> A(8, std::vector<Interval>(8));
  std::vector<Interval> b(8);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 8; ++c)
      A[r][c] = poly_eval(s.cpoly[s.basis[c]], s.nodes[r]);
    b[r] = pframe_eval(p, s.nodes[r]);
  }
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 8; ++c)
      A[5 + r][c] = poly_eval(s.cpoly_d[s.basis[c]], s.nodes[1 + r]);
    b[5 + r] = pframe_eval(p, s.nodes[1 + r], 1);
  }
  std::vector<Interval> x = solve_interval_system(std::move(A), std::move(b));
  std::vector<Interval> h(9, Interval(0.0));
  for (int c = 0; c < 8; ++c) h[s.basis[c]] = x[c];
  return h;
}

}  // namespace

Certificate build_600cell_certificate(double p) {
  if (!(p >= 8.0 && p <= 10.0))
    throw std::invalid_argument("the 600-cell certificate covers p in [8,10]");
  const System600& s = system600();
  Certificate cert;
  cert.space = "rp:4";
  cert.kernel = PFrameKernel{p};
  cert.mode = "600-cell";
  cert.nodes.nodes = s.nodes;
  cert.nodes.multiplicities = {1, 2, 2, 2, 1};
  cert.node_labels = {"-1", "-(sqrt(5)+1)/4", "-1/2", "(sqrt(5)-1)/4", "1"};
  cert.h_jacobi = solve600(Interval(p));
  cert.h_power = to_power_iv(cert.h_jacobi, s.params);
  cert.bound = cert.h_jacobi[0];
  cert.matched_config = "600-cell";
  // h = f at all five nodes but h' = f' only at the interior three, so
  // the endpoint nodes enter the check with multiplicity one
  WeightedConfiguration config = catalog_get("600-cell");
  VerifySettings vs;
  vs.remainder_slack = 1e-10;
  run_checks(cert, &config, vs);
  return cert;
}

RangeReport certify_600cell_range(double p_lo, double p_hi, int max_depth) {
  if (!(8.0 <= p_lo && p_lo <= p_hi && p_hi <= 10.0))
    throw std::invalid_argument("600-cell range certification covers [8,10]");
  RangeReport rep;
  rep.verdict = Verdict::Verified;
  const double slack = 1e-10;

  std::function<void(const Interval&, int)> go = [&](const Interval& P,
                                                     int depth) {
    if (rep.verdict == Verdict::Falsified) return;
    std::vector<Interval> h = solve600(P);
    bool ok = true, definitely_bad = false;
    for (const auto& c : h) {
      if (c.lo < -slack) ok = false;
      if (c.hi < -slack) definitely_bad = true;
    }
    if (ok) {
      rep.cells.push_back({P, Verdict::Verified});
      return;
    }
    if (definitely_bad) {
      rep.cells.push_back({P, Verdict::Falsified});
      rep.verdict = Verdict::Falsified;
      if (!rep.offending) rep.offending = P;
      return;
    }
    if (depth >= max_depth || P.width() < 1e-12) {
      rep.cells.push_back({P, Verdict::Inconclusive});
      if (rep.verdict == Verdict::Verified) rep.verdict = Verdict::Inconclusive;
      if (!rep.offending) rep.offending = P;
      return;
    }
    double m = P.mid();
    go(Interval(P.lo, m), depth + 1);
    go(Interval(m, P.hi), depth + 1);
  };
  go(Interval(p_lo, p_hi), 0);

  // the h <= f inequality: full pointwise certificates across the range
  int ngrid = p_lo == p_hi ? 1 : 33;
  bool grid_ok = true;
  for (int k = 0; k < ngrid; ++k) {
    double p =
        ngrid == 1 ? p_lo : p_lo + (p_hi - p_lo) * k / (ngrid - 1);
    Certificate c = build_600cell_certificate(p);
    if (c.verdict != Verdict::Verified) grid_ok = false;
  }
  rep.grid_sweeps = ngrid;
  rep.grid_sweeps_ok = grid_ok;
  if (!grid_ok && rep.verdict == Verdict::Verified)
    rep.verdict = Verdict::Inconclusive;
  return rep;
}

Certificate causal_certificate(CausalSupport which) {
  Certificate cert;
  cert.space = "s:3";
  cert.mode = "causal";
  JacobiParams params = space_params(Field::R, 3, SpaceKind::Sphere);
  if (which == CausalSupport::CrossPolytope) {
    cert.kernel = CausalKernel{Interval(2.0), false};
    cert.h_power = {Interval(0.0), Interval(8.0), Interval(8.0)};
    cert.nodes.nodes = {Interval(-1.0), Interval(0.0), Interval(1.0)};
    cert.nodes.multiplicities = {1, 1, 1};
    cert.node_labels = {"-1", "0", "1"};
    cert.matched_config = "cross-polytope-s2";
    cert.h_jacobi = expand_iv(cert.h_power, params);
  } else {
    Interval s5 = iv_sqrt(Interval(5.0));
    Interval tau2 = (Interval(5.0) + s5) * Interval(0.5);
    cert.kernel = CausalKernel{tau2, true};
    cert.h_jacobi = {Interval(1.0) / Interval(12.0), Interval(0.25),
                     (Interval(20.0) + 3.0 * s5) / Interval(84.0),
                     Interval(0.25), (Interval(5.0) - s5) / Interval(28.0)};
    cert.h_power = to_power_iv(cert.h_jacobi, params);
    Interval r5 = s5 / Interval(5.0);  // 1/sqrt(5)
    cert.nodes.nodes = {Interval(-1.0), -r5, r5, Interval(1.0)};
    cert.nodes.multiplicities = {1, 1, 1, 1};
    cert.node_labels = {"-1", "-1/sqrt(5)", "1/sqrt(5)", "1"};
    cert.matched_config = "icosahedron-s2";
  }
  cert.bound = cert.h_jacobi[0];
  WeightedConfiguration config = catalog_get(cert.matched_config);
  run_checks(cert, &config, VerifySettings());
  return cert;
}

Certificate moment_certificate(const WeightedConfiguration& config,
                               const std::string& config_name) {
  validate(config);
  TightnessReport tr = tightness_check(config);
  if (!tr.tight)
    throw std::invalid_argument("configuration is not a tight design: " +
                                tr.note);
  int k = tr.strength;
  JacobiParams params = config.space.params();

  JacobiExpansion fe;
  fe.params = params;
  fe.coeffs.assign(k + 2, 0.0);
  fe.coeffs[k + 1] = 1.0;

  Certificate cert;
  cert.space = space_to_string(config.space);
  cert.kernel = JacobiKernel{fe};
  cert.mode = "moment";
  cert.upper = true;
  cert.matched_config = config_name;
  cert.nodes = tight_node_system(k, config_distances(config));

  std::vector<Interval> f_power = jacobi_coeffs_iv(params, k + 1);
  auto fderiv = [&](const Interval& t, int order) -> Interval {
    std::vector<Interval> c = f_power;
    for (int j = 0; j < order; ++j) c = poly_derivative(c);
    return poly_eval(c, t);
  };
  std::vector<Interval> newton = newton_coefficients(fderiv, cert.nodes);
  std::vector<Interval> z;
  std::vector<int> which;
  cert.nodes.expand(z, which);
  cert.h_power = newton_to_power(newton, z);
  cert.h_jacobi = expand_iv(cert.h_power, params);
  cert.bound = cert.h_jacobi[0];
  run_checks(cert, &config, VerifySettings());
  return cert;
}

}  // namespace pframe
