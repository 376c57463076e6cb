#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pframe/interval.hpp"
#include "pframe/jacobi.hpp"
#include "pframe/spaces.hpp"

namespace pframe {

// f(t) = ((1+t)/2)^{p/2}, the p-frame energy kernel in the projective
// variable tau = 2|<x,y>|^2 - 1.
struct PFrameKernel {
  double p = 2.0;
};

// Causal kernel on the sphere, L(t) = max{0, 2 tau^2 (1+t)(2 - tau^2 (1-t))}.
// tau2 encloses the aperture parameter tau^2; normalized divides by L(1).
struct CausalKernel {
  Interval tau2;
  bool normalized = false;
};

// Polynomial in the natural kernel variable, ascending power coefficients.
struct PolyKernel {
  std::vector<double> coeffs;
};

// Polynomial given by its normalized-Jacobi coefficients.
struct JacobiKernel {
  JacobiExpansion expansion;
};

using KernelSpec =
    std::variant<PFrameKernel, CausalKernel, PolyKernel, JacobiKernel>;

// deriv-th derivative; CausalKernel and JacobiKernel support deriv = 0 only.
double kernel_eval(const KernelSpec& k, double t, int deriv = 0);
Interval kernel_eval(const KernelSpec& k, const Interval& t, int deriv = 0);

// p-frame kernel with an interval exponent (used for range certification).
Interval pframe_eval(const Interval& p, const Interval& t, int deriv = 0);

// Largest M with f absolutely monotone of degree M and f^(M+1) <= 0:
// M = ceil(p/2) for non-even p.  Even integer p (polynomial kernel) and
// non-p-frame kernels return nullopt.
std::optional<int> abs_monotonic_degree(const KernelSpec& k);

// True if the kernel's variable is the sphere cosine (causal kernels).
bool requires_sphere(const KernelSpec& k);

std::string kernel_name(const KernelSpec& k);

// Minimal p-frame energy for even p = 2k: the k-th moment c_F(d,k) of the
// uniform measure on FP^{d-1}.
Rational even_p_minimum(Field field, int d, int k);

// Energy of a SIC-POVM (d^2 equiangular lines in CP^{d-1}) at p = 3.
double sic_energy(int d);

}  // namespace pframe
