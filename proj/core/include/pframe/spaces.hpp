#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "pframe/rational.hpp"

namespace pframe {

enum class Field { R, C, H };
enum class SpaceKind { Sphere, Projective };

inline int field_dim(Field f) {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    default: return 4;
  }
}

// Scalar over R, C, or H stored as a quaternion; unused components stay 0.
struct FieldScalar {
  std::array<double, 4> c{0, 0, 0, 0};

  FieldScalar() = default;
  explicit FieldScalar(double re) : c{re, 0, 0, 0} {}
  FieldScalar(double re, double im) : c{re, im, 0, 0} {}
  FieldScalar(double a, double b, double cc, double d) : c{a, b, cc, d} {}

  double re() const { return c[0]; }
  FieldScalar conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
  double abs2() const {
    return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
  }
  double abs() const { return std::sqrt(abs2()); }
};

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b);
FieldScalar operator-(const FieldScalar& a, const FieldScalar& b);
FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
FieldScalar operator*(double s, const FieldScalar& a);

struct JacobiParams {
  Rational alpha;
  Rational beta;
  double alpha_d() const { return to_double(alpha); }
  double beta_d() const { return to_double(beta); }
};

struct SpaceDescriptor {
  Field field = Field::R;
  int d = 2;  // ambient dimension over the field (points live in F^d)
  SpaceKind kind = SpaceKind::Projective;

  JacobiParams params() const;
  // real dimension of the underlying manifold
  int manifold_dim() const;
  std::string name() const;  // e.g. "RP3" (d=4), "S2" (d=3), "CP2"
  bool operator==(const SpaceDescriptor&) const = default;
};

// Jacobi parameters: sphere S^{d-1}: alpha = beta = (d-3)/2; projective
// FP^{d-1}: alpha = (d-1)e/2 - 1, beta = e/2 - 1 with e = dim_R(F).
JacobiParams space_params(Field field, int d, SpaceKind kind);

SpaceDescriptor make_space(Field field, int d, SpaceKind kind);
// Parse "s:3", "rp:4", "cp:3", "hp:2" (number = ambient dimension d).
SpaceDescriptor parse_space(const std::string& text);
std::string space_to_string(const SpaceDescriptor& s);

struct UnitVector {
  std::vector<FieldScalar> x;

  UnitVector() = default;
  // normalizes; throws on (near-)zero input
  explicit UnitVector(std::vector<FieldScalar> comps);
  size_t dim() const { return x.size(); }
};

// Hermitian inner product, conjugate-linear in the second argument.
FieldScalar inner_product(const UnitVector& a, const UnitVector& b);

// Natural kernel variable: sphere: Re<x,y>; projective: 2|<x,y>|^2 - 1.
// Clamped to [-1, 1].
double tau(const SpaceDescriptor& space, const UnitVector& a,
           const UnitVector& b);
double projective_tau(const UnitVector& a, const UnitVector& b);

}  // namespace pframe
