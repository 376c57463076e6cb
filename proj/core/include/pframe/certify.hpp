#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pframe/configurations.hpp"
#include "pframe/hermite.hpp"
#include "pframe/kernels.hpp"

namespace pframe {

enum class Verdict { Verified, Falsified, Inconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

nlohmann::json kernel_to_json(const KernelSpec& k);
KernelSpec kernel_from_json(const nlohmann::json& j);

struct CertificateChecks {
  // remainder sign: f - h >= 0 (h - f >= 0 in upper mode) on [-1, 1]
  SweepVerdict h_leq_f = SweepVerdict::Inconclusive;
  // Jacobi coefficients of h carry the right sign for n >= 1
  bool positive_definite = false;
  // h matches the kernel (with derivatives) at the node system
  bool interpolation_match = false;
  // attached configuration is a design of strength >= deg h
  bool design_strength_sufficient = false;
  double remainder_inf = 0.0;      // certified lower bound of the remainder
  double min_jacobi_coeff = 0.0;   // worst signed margin over n >= 1
  std::optional<double> bound_energy_gap;  // |h0 - energy(config)|
};

// A linear-programming-style optimality certificate: a polynomial h with
// h <= f (>= f in upper mode) whose Jacobi expansion has the sign pattern
// that makes its mean value h0 a bound on the energy.  Verification is
// entirely interval-arithmetic; construction may be floating point.
struct Certificate {
  std::string space;                     // parseable, e.g. "rp:3"
  KernelSpec kernel{PFrameKernel{}};
  std::string mode;  // tight | positive-definite | 600-cell | causal |
                     // moment | lp
  bool upper = false;                    // certificate bounds a maximum
  NodeSystem nodes;                      // empty for pure sign certificates
  std::vector<std::string> node_labels;  // optional exact descriptions
  std::vector<Interval> h_power;         // ascending power coefficients
  std::vector<Interval> h_jacobi;        // normalized-Jacobi coefficients
  Interval bound;                        // = h_jacobi[0]
  std::string matched_config;            // catalog name, may be empty
  CertificateChecks checks;
  Verdict verdict = Verdict::Inconclusive;

  SpaceDescriptor space_descriptor() const;
  nlohmann::json to_json() const;
  static Certificate from_json(const nlohmann::json& j);
};

struct VerifySettings {
  double remainder_slack = 1e-12;  // remainder sweep tolerance
  double coeff_slack = 1e-10;      // Jacobi sign tolerance
  double node_slack = 1e-9;        // interpolation residual tolerance
  double energy_tol = 1e-10;       // bound vs configuration energy
  int sweep_depth = 48;
};

// Re-runs every check from the stored data (independent of how the
// certificate was built), refreshes the evidence fields, and returns the
// verdict.  config, when given, supplies the strength and energy checks.
Verdict verify_certificate(Certificate& cert,
                           const WeightedConfiguration* config = nullptr,
                           const VerifySettings& vs = VerifySettings());

// Lower-bound certificate for a tight design: Hermite interpolation of the
// kernel on the design's distance set (doubled at interior distances), or
// the kernel itself when p is an even integer and the kernel is already a
// positive-definite polynomial.
Certificate build_tight_certificate(const WeightedConfiguration& config,
                                    const KernelSpec& kernel,
                                    const std::string& config_name = "");

// Degree-8 certificate for the 600-cell (60 lines in RP^3): h is spanned by
// C_0..C_8 without C_6 and matches f at the five cosine values, plus f' at
// the three interior ones.  Valid for p in [8, 10].
Certificate build_600cell_certificate(double p);

struct RangeCell {
  Interval p;
  Verdict verdict = Verdict::Inconclusive;
};

struct RangeReport {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<RangeCell> cells;          // adaptive subdivision of [p_lo,p_hi]
  std::optional<Interval> offending;     // first cell that failed, if any
  int grid_sweeps = 0;                   // pointwise h <= f certificates
  bool grid_sweeps_ok = false;
};

// Adaptive bisection over the exponent: every subinterval gets the Jacobi
// coefficients of its 600-cell interpolant enclosed over the whole
// p-subinterval and certified nonnegative; the h <= f inequality is
// certified by full pointwise certificates on a uniform grid across the
// range (direct p-interval sweeps of f - h are hopeless near the endpoints,
// where f - h vanishes identically in t).
RangeReport certify_600cell_range(double p_lo = 8.0, double p_hi = 10.0,
                                  int max_depth = 40);

enum class CausalSupport { CrossPolytope, Icosahedron };

// Fixed certificates for the causal-variational kernels on S^2: the
// auxiliary polynomial H with H <= L, Legendre-positive-definite, equal to
// L on the support's cosine set; attaches the matching uniform measure.
Certificate causal_certificate(CausalSupport which);

// Upper-bound certificate for the (k+1)-st moment over designs of strength
// k: h interpolates f = C_{k+1} on a tight k-design's node system with
// h >= f, and deg h <= k, so every design of strength k integrates h to
// exactly h0; the tight design attains the bound.
Certificate moment_certificate(const WeightedConfiguration& config,
                               const std::string& config_name = "");

}  // namespace pframe
