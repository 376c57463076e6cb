#include "pframe/spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace pframe {

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
  return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
}
FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
  return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
}
FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  const auto& [a0, a1, a2, a3] = a.c;
  const auto& [b0, b1, b2, b3] = b.c;
  return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
          a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
          a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
          a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
}
FieldScalar operator*(double s, const FieldScalar& a) {
  return {s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]};
}

JacobiParams space_params(Field field, int d, SpaceKind kind) {
  if (d < 2) throw std::invalid_argument("space: need d >= 2");
  if (kind == SpaceKind::Sphere) {
    if (field != Field::R)
      throw std::invalid_argument("sphere kind is defined over R only");
    Rational a = Rational(d - 3, 2);
    return {a, a};
  }
  int e = field_dim(field);
  return {Rational((d - 1) * e, 2) - 1, Rational(e, 2) - 1};
}

JacobiParams SpaceDescriptor::params() const {
  return space_params(field, d, kind);
}

int SpaceDescriptor::manifold_dim() const {
  int e = field_dim(field);
  if (kind == SpaceKind::Sphere) return d - 1;
  return e * (d - 1);
}

std::string SpaceDescriptor::name() const {
  if (kind == SpaceKind::Sphere) return "S" + std::to_string(d - 1);
  std::string f = field == Field::R ? "RP" : field == Field::C ? "CP" : "HP";
  return f + std::to_string(d - 1);
}

SpaceDescriptor make_space(Field field, int d, SpaceKind kind) {
  space_params(field, d, kind);  // validates
  return {field, d, kind};
}

SpaceDescriptor parse_space(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("space syntax: kind:d, e.g. rp:4 or s:3");
  std::string k = text.substr(0, colon);
  std::transform(k.begin(), k.end(), k.begin(), ::tolower);
  int d = std::stoi(text.substr(colon + 1));
  if (k == "s") return make_space(Field::R, d, SpaceKind::Sphere);
  if (k == "rp") return make_space(Field::R, d, SpaceKind::Projective);
  if (k == "cp") return make_space(Field::C, d, SpaceKind::Projective);
  if (k == "hp") return make_space(Field::H, d, SpaceKind::Projective);
  throw std::invalid_argument("unknown space kind: " + k);
}

std::string space_to_string(const SpaceDescriptor& s) {
  std::string k = s.kind == SpaceKind::Sphere ? "s"
                  : s.field == Field::R       ? "rp"
                  : s.field == Field::C       ? "cp"
                                              : "hp";
  return k + ":" + std::to_string(s.d);
}

UnitVector::UnitVector(std::vector<FieldScalar> comps) : x(std::move(comps)) {
  double n2 = 0;
  for (const auto& v : x) n2 += v.abs2();
  if (n2 < 1e-24) throw std::invalid_argument("cannot normalize zero vector");
  double inv = 1.0 / std::sqrt(n2);
  for (auto& v : x) v = inv * v;
}

FieldScalar inner_product(const UnitVector& a, const UnitVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("inner_product: dimension mismatch");
  FieldScalar s(0.0);
  for (size_t i = 0; i < a.dim(); ++i) s = s + a.x[i] * b.x[i].conj();
  return s;
}

double projective_tau(const UnitVector& a, const UnitVector& b) {
  double t = 2.0 * inner_product(a, b).abs2() - 1.0;
  return std::clamp(t, -1.0, 1.0);
}

double tau(const SpaceDescriptor& space, const UnitVector& a,
           const UnitVector& b) {
  if (space.kind == SpaceKind::Sphere)
    return std::clamp(inner_product(a, b).re(), -1.0, 1.0);
  return projective_tau(a, b);
}

}  // namespace pframe
