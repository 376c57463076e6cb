#include "pframe/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pframe {

namespace {

using Vec = std::vector<FieldScalar>;

UnitVector rvec(std::initializer_list<double> comps) {
  Vec v;
  for (double c : comps) v.emplace_back(c);
  return UnitVector(std::move(v));
}

UnitVector rvecv(const std::vector<double>& comps) {
  Vec v;
  for (double c : comps) v.emplace_back(c);
  return UnitVector(std::move(v));
}

// keep one representative per projective line
std::vector<UnitVector> dedupe_lines(const std::vector<UnitVector>& in) {
  std::vector<UnitVector> out;
  for (const auto& v : in) {
    bool dup = false;
    for (const auto& u : out) {
      if (inner_product(v, u).abs2() > 1.0 - 1e-9) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(v);
  }
  return out;
}

WeightedConfiguration equal_weighted(SpaceDescriptor space,
                                     std::vector<UnitVector> pts) {
  WeightedConfiguration c;
  c.space = space;
  c.weights.assign(pts.size(), 1.0 / static_cast<double>(pts.size()));
  c.points = std::move(pts);
  validate(c);
  return c;
}

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

WeightedConfiguration build_polygon(int n) {
  if (n < 2) throw std::invalid_argument("polygon: need at least 2 lines");
  WeightedConfiguration c;
  c.space = make_space(Field::R, 2, SpaceKind::Sphere);
  c.projective_lines = true;
  for (int j = 0; j < n; ++j) {
    double a = std::numbers::pi * j / n;
    c.points.push_back(rvec({std::cos(a), std::sin(a)}));
  }
  c.weights.assign(n, 1.0 / n);
  validate(c);
  return c;
}

WeightedConfiguration build_orthobasis(Field f, int d) {
  std::vector<UnitVector> pts;
  for (int i = 0; i < d; ++i) {
    Vec v(d, FieldScalar(0.0));
    v[i] = FieldScalar(1.0);
    pts.emplace_back(std::move(v));
  }
  auto c = equal_weighted(make_space(f, d, SpaceKind::Projective),
                          std::move(pts));
  c.exact_distances = {{Interval(-1.0)}};
  return c;
}

std::vector<UnitVector> icosahedron_lines() {
  double p = kPhi;
  return {rvec({0, 1, p}),  rvec({0, -1, p}), rvec({1, p, 0}),
          rvec({-1, p, 0}), rvec({p, 0, 1}),  rvec({p, 0, -1})};
}

// dual to icosahedron_lines(): cube vertices plus the face centers of the
// (0, +-1, +-phi)-cyclic icosahedron, which lie on the mirrored cyclic
// classes (q, 0, p), (p, q, 0), (0, p, q) with q = 1/phi
std::vector<UnitVector> dodecahedron_lines() {
  double p = kPhi, q = 1.0 / kPhi;
  return {rvec({1, 1, 1}),   rvec({1, 1, -1}),  rvec({1, -1, 1}),
          rvec({1, -1, -1}), rvec({q, 0, p}),   rvec({-q, 0, p}),
          rvec({p, q, 0}),   rvec({p, -q, 0}),  rvec({0, p, q}),
          rvec({0, p, -q})};
}

WeightedConfiguration build_icosahedron() {
  auto c = equal_weighted(make_space(Field::R, 3, SpaceKind::Projective),
                          icosahedron_lines());
  c.exact_distances = {{Interval::from_rational(Rational(-3, 5))}};
  return c;
}

WeightedConfiguration build_icosa_dodeca() {
  WeightedConfiguration c;
  c.space = make_space(Field::R, 3, SpaceKind::Projective);
  for (const auto& v : icosahedron_lines()) {
    c.points.push_back(v);
    c.weights.push_back(5.0 / 84.0);
  }
  for (const auto& v : dodecahedron_lines()) {
    c.points.push_back(v);
    c.weights.push_back(9.0 / 140.0);
  }
  validate(c);
  return c;
}

WeightedConfiguration build_reznick() {
  WeightedConfiguration c;
  c.space = make_space(Field::R, 3, SpaceKind::Projective);
  double s37 = std::sqrt(3.0 / 7.0), s17 = std::sqrt(1.0 / 7.0),
         s47 = 2.0 / std::sqrt(7.0);
  auto add = [&](UnitVector v, double w) {
    c.points.push_back(std::move(v));
    c.weights.push_back(w);
  };
  add(rvec({1, 0, 0}), 2.0 / 27.0);
  add(rvec({0, 1, 0}), 1.0 / 10.0);
  add(rvec({0, 0, 1}), 1.0 / 10.0);
  for (double s : {1.0, -1.0}) add(rvec({s47, s * s37, 0}), 49.0 / 540.0);
  for (double s : {1.0, -1.0}) add(rvec({s47, 0, s * s37}), 49.0 / 540.0);
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0})
      add(rvec({s17, s1 * s37, s2 * s37}), 49.0 / 540.0);
  validate(c);
  return c;
}

WeightedConfiguration build_weighted11_r4() {
  double a = (std::sqrt(5.0) + 1.0) / 6.0;
  double b = std::sqrt(6.0 - 2.0 * std::sqrt(5.0)) / 6.0;
  double s6 = std::sqrt(6.0) / 6.0, s2 = std::sqrt(2.0) / 3.0;
  double t = 1.0 / 3.0;
  std::vector<std::vector<double>> g = {
      {1, -2 * t, a, a, a, a, b, b, b, b, s6},
      {-2 * t, 1, -b, -b, -b, -b, -a, -a, -a, -a, s6},
      {a, -b, 1, t, -t, t, -s2, -s2, s2, s2, s6},
      {a, -b, t, 1, t, -t, s2, -s2, s2, -s2, s6},
      {a, -b, -t, t, 1, t, s2, s2, -s2, -s2, s6},
      {a, -b, t, -t, t, 1, -s2, s2, -s2, s2, s6},
      {b, -a, -s2, s2, s2, -s2, 1, t, t, -t, -s6},
      {b, -a, -s2, -s2, s2, s2, t, 1, -t, t, -s6},
      {b, -a, s2, s2, -s2, -s2, t, -t, 1, t, -s6},
      {b, -a, s2, -s2, -s2, s2, -t, t, t, 1, -s6},
      {s6, s6, s6, s6, s6, s6, -s6, -s6, -s6, -s6, 1}};
  Eigen::MatrixXd G(11, 11);
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j) G(i, j) = g[i][j];
  std::vector<double> w = {3.0 / 40.0, 3.0 / 40.0, 3.0 / 32.0, 3.0 / 32.0,
                           3.0 / 32.0, 3.0 / 32.0, 3.0 / 32.0, 3.0 / 32.0,
                           3.0 / 32.0, 3.0 / 32.0, 1.0 / 10.0};
  return from_gram(G, w, make_space(Field::R, 4, SpaceKind::Projective), 1e-7);
}

WeightedConfiguration build_24cell() {
  std::vector<UnitVector> pts;
  // D4 root lines
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (double s : {1.0, -1.0}) {
        std::vector<double> v(4, 0.0);
        v[i] = 1.0;
        v[j] = s;
        pts.push_back(rvecv(v));
      }
    }
  }
  // dual 24-cell lines
  for (int i = 0; i < 4; ++i) {
    std::vector<double> v(4, 0.0);
    v[i] = 1.0;
    pts.push_back(rvecv(v));
  }
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0})
      for (double s3 : {1.0, -1.0}) pts.push_back(rvec({1, s1, s2, s3}));
  auto c = equal_weighted(make_space(Field::R, 4, SpaceKind::Projective),
                          std::move(pts));
  c.exact_distances = {{Interval(-1.0),
                        Interval::from_rational(Rational(-1, 2)),
                        Interval(0.0)}};
  return c;
}

WeightedConfiguration build_600cell() {
  std::vector<UnitVector> verts;
  for (int i = 0; i < 4; ++i) {
    std::vector<double> v(4, 0.0);
    v[i] = 1.0;
    verts.push_back(rvecv(v));
  }
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0})
      for (double s3 : {1.0, -1.0}) verts.push_back(rvec({1, s1, s2, s3}));
  static const int even_perms[12][4] = {
      {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2},
      {1, 2, 0, 3}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 1, 3, 0},
      {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
  double base[4] = {kPhi, 1.0, 1.0 / kPhi, 0.0};
  for (const auto& perm : even_perms) {
    for (double s1 : {1.0, -1.0})
      for (double s2 : {1.0, -1.0})
        for (double s3 : {1.0, -1.0}) {
          double sg[4] = {s1, s2, s3, 1.0};
          std::vector<double> v(4);
          for (int k = 0; k < 4; ++k) v[perm[k]] = sg[k] * base[k];
          verts.push_back(rvecv(v));
        }
  }
  auto lines = dedupe_lines(verts);
  if (lines.size() != 60)
    throw std::logic_error("600-cell construction: expected 60 lines");
  auto c = equal_weighted(make_space(Field::R, 4, SpaceKind::Projective),
                          std::move(lines));
  Interval s5 = iv_sqrt(Interval(5.0));
  c.exact_distances = {{Interval(-1.0),
                        (Interval(-1.0) - s5) * Interval(0.25),
                        Interval::from_rational(Rational(-1, 2)),
                        (s5 - 1.0) * Interval(0.25)}};
  return c;
}

WeightedConfiguration build_hemicube5() {
  // vectors live in the sum-zero hyperplane of R^6; realize in R^5 via Gram
  std::vector<std::vector<double>> raw;
  for (int i = 0; i < 6; ++i) {
    std::vector<double> v(6, 1.0 / std::sqrt(30.0));
    v[i] = -5.0 / std::sqrt(30.0);
    raw.push_back(v);
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        std::vector<double> v(6, 1.0 / std::sqrt(6.0));
        v[i] = v[j] = v[k] = -1.0 / std::sqrt(6.0);
        if (v[0] < 0) continue;  // one representative per antipodal pair
        raw.push_back(v);
      }
  size_t n = raw.size();
  Eigen::MatrixXd G(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      double dot = 0;
      for (int k = 0; k < 6; ++k) dot += raw[i][k] * raw[j][k];
      G(i, j) = i == j ? 1.0 : dot;
    }
  std::vector<double> w(n);
  for (size_t i = 0; i < n; ++i) w[i] = i < 6 ? 5.0 / 84.0 : 9.0 / 140.0;
  return from_gram(G, w, make_space(Field::R, 5, SpaceKind::Projective), 1e-7);
}

WeightedConfiguration build_stroud41() {
  WeightedConfiguration c;
  c.space = make_space(Field::R, 5, SpaceKind::Projective);
  for (int i = 0; i < 5; ++i) {
    std::vector<double> v(5, 0.0);
    v[i] = 1.0;
    c.points.push_back(rvecv(v));
    c.weights.push_back(2.0 / 105.0);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (double s : {1.0, -1.0}) {
        std::vector<double> v(5, 0.0);
        v[i] = 1.0;
        v[j] = s;
        c.points.push_back(rvecv(v));
        c.weights.push_back(8.0 / 315.0);
      }
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0})
      for (double s3 : {1.0, -1.0})
        for (double s4 : {1.0, -1.0}) {
          c.points.push_back(rvec({1, s1, s2, s3, s4}));
          c.weights.push_back(25.0 / 1008.0);
        }
  validate(c);
  return c;
}

WeightedConfiguration build_cross_hemicube6() {
  WeightedConfiguration c;
  c.space = make_space(Field::R, 6, SpaceKind::Projective);
  for (int i = 0; i < 6; ++i) {
    std::vector<double> v(6, 0.0);
    v[i] = 1.0;
    c.points.push_back(rvecv(v));
    c.weights.push_back(1.0 / 24.0);
  }
  // hemicube: even number of minus signs, first coordinate fixed positive
  for (int mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<double> v(6, 1.0);
    for (int k = 0; k < 5; ++k)
      if (mask & (1 << k)) v[k + 1] = -1.0;
    c.points.push_back(rvecv(v));
    c.weights.push_back(3.0 / 64.0);
  }
  validate(c);
  return c;
}

std::vector<std::vector<double>> e8_roots() {
  std::vector<std::vector<double>> roots;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (double si : {1.0, -1.0})
        for (double sj : {1.0, -1.0}) {
          std::vector<double> v(8, 0.0);
          v[i] = si;
          v[j] = sj;
          roots.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<double> v(8, 0.5);
    for (int k = 0; k < 8; ++k)
      if (mask & (1 << k)) v[k] = -0.5;
    roots.push_back(v);
  }
  return roots;
}

double dot8(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

WeightedConfiguration gram_config(
    const std::vector<std::vector<double>>& vecs,
    const std::vector<double>& weights, int d) {
  size_t n = vecs.size();
  Eigen::MatrixXd G(n, n);
  for (size_t i = 0; i < n; ++i) {
    double ni = std::sqrt(dot8(vecs[i], vecs[i]));
    for (size_t j = 0; j < n; ++j) {
      double nj = std::sqrt(dot8(vecs[j], vecs[j]));
      G(i, j) = i == j ? 1.0 : dot8(vecs[i], vecs[j]) / (ni * nj);
    }
  }
  return from_gram(G, weights,
                   make_space(Field::R, d, SpaceKind::Projective), 1e-7);
}

// one representative per antipodal pair of raw vectors
std::vector<std::vector<double>> half(std::vector<std::vector<double>> vecs) {
  std::vector<std::vector<double>> out;
  for (const auto& v : vecs) {
    bool dup = false;
    for (const auto& u : out) {
      double c = dot8(u, v) / std::sqrt(dot8(u, u) * dot8(v, v));
      if (std::abs(std::abs(c) - 1.0) < 1e-9) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(v);
  }
  return out;
}

WeightedConfiguration build_e8() {
  auto lines = half(e8_roots());
  if (lines.size() != 120) throw std::logic_error("E8: expected 120 lines");
  std::vector<double> w(120, 1.0 / 120.0);
  auto c = gram_config(lines, w, 8);
  c.exact_distances = {{Interval(-1.0),
                        Interval::from_rational(Rational(-1, 2))}};
  return c;
}

WeightedConfiguration build_kissing_e8() {
  std::vector<double> r0(8, 0.0);
  r0[6] = r0[7] = 1.0;
  std::vector<std::vector<double>> proj;
  for (const auto& r : e8_roots()) {
    if (std::abs(dot8(r, r0) - 1.0) > 1e-12) continue;
    std::vector<double> u(8);
    for (int k = 0; k < 8; ++k) u[k] = r[k] - 0.5 * r0[k];
    proj.push_back(u);
  }
  auto lines = half(proj);
  if (lines.size() != 28) throw std::logic_error("kissing E8: expected 28");
  std::vector<double> w(28, 1.0 / 28.0);
  auto c = gram_config(lines, w, 7);
  c.exact_distances = {{Interval::from_rational(Rational(-7, 9))}};
  return c;
}

WeightedConfiguration build_e7_union() {
  std::vector<double> r0(8, 0.0);
  r0[6] = r0[7] = 1.0;
  std::vector<std::vector<double>> vecs;
  std::vector<double> w;
  std::vector<std::vector<double>> e7;
  std::vector<std::vector<double>> dual;
  for (const auto& r : e8_roots()) {
    double a = dot8(r, r0);
    if (std::abs(a) < 1e-12) {
      e7.push_back(r);
    } else if (std::abs(std::abs(a) - 1.0) < 1e-12) {
      std::vector<double> u(8);
      for (int k = 0; k < 8; ++k) u[k] = r[k] - 0.5 * a * r0[k];
      dual.push_back(u);
    }
  }
  auto e7l = half(e7);
  auto duall = half(dual);
  if (e7l.size() != 63 || duall.size() != 28)
    throw std::logic_error("E7 union: expected 63 + 28 lines");
  for (const auto& v : e7l) {
    vecs.push_back(v);
    w.push_back(8.0 / 693.0);
  }
  for (const auto& v : duall) {
    vecs.push_back(v);
    w.push_back(3.0 / 308.0);
  }
  return gram_config(vecs, w, 7);
}

WeightedConfiguration build_e6_union() {
  std::vector<double> r1(8, 0.0), r2(8, -0.5);
  r1[6] = r1[7] = 1.0;
  std::vector<std::vector<double>> e6;
  std::vector<std::vector<double>> dual;
  for (const auto& r : e8_roots()) {
    double a = dot8(r, r1), b = dot8(r, r2);
    if (std::abs(a) < 1e-12 && std::abs(b) < 1e-12) {
      e6.push_back(r);
      continue;
    }
    // projection onto the orthogonal complement of span{r1, r2};
    // A2 Gram [[2,-1],[-1,2]] has inverse (1/3)[[2,1],[1,2]]
    double c1 = (2 * a + b) / 3.0, c2 = (a + 2 * b) / 3.0;
    std::vector<double> u(8);
    double n2 = 0;
    for (int k = 0; k < 8; ++k) {
      u[k] = r[k] - c1 * r1[k] - c2 * r2[k];
      n2 += u[k] * u[k];
    }
    if (std::abs(n2 - 4.0 / 3.0) < 1e-9) dual.push_back(u);
  }
  auto e6l = half(e6);
  auto duall = half(dual);
  if (e6l.size() != 36 || duall.size() != 27)
    throw std::logic_error("E6 union: expected 36 + 27 lines");
  std::vector<std::vector<double>> vecs;
  std::vector<double> w;
  for (const auto& v : e6l) {
    vecs.push_back(v);
    w.push_back(1.0 / 60.0);
  }
  for (const auto& v : duall) {
    vecs.push_back(v);
    w.push_back(2.0 / 135.0);
  }
  return gram_config(vecs, w, 6);
}

WeightedConfiguration build_simplex_midpoints8() {
  std::vector<std::vector<double>> vecs;
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) {
      std::vector<double> v(9, -2.0 / 9.0);
      v[i] += 1.0;
      v[j] += 1.0;
      vecs.push_back(v);
    }
  std::vector<double> w(36, 1.0 / 36.0);
  return gram_config(vecs, w, 8);
}

const double kOm[2] = {-0.5, std::sqrt(3.0) / 2.0};  // e^{2 pi i/3}

FieldScalar omega_pow(int k) {
  k = ((k % 3) + 3) % 3;
  if (k == 0) return FieldScalar(1.0);
  if (k == 1) return FieldScalar(kOm[0], kOm[1]);
  return FieldScalar(kOm[0], -kOm[1]);
}

UnitVector cvec(std::vector<FieldScalar> comps) {
  return UnitVector(std::move(comps));
}

WeightedConfiguration build_sic3() {
  // Hesse SIC: Weyl-Heisenberg orbit of the fiducial (0, 1, -1)/sqrt(2)
  std::vector<FieldScalar> fid = {FieldScalar(0.0), FieldScalar(1.0),
                                  FieldScalar(-1.0)};
  std::vector<UnitVector> pts;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::vector<FieldScalar> v(3);
      for (int k = 0; k < 3; ++k) v[k] = omega_pow(b * k) * fid[((k - a) % 3 + 3) % 3];
      pts.push_back(cvec(std::move(v)));
    }
  return equal_weighted(make_space(Field::C, 3, SpaceKind::Projective),
                        std::move(pts));
}

WeightedConfiguration build_21lines_c3() {
  WeightedConfiguration c;
  c.space = make_space(Field::C, 3, SpaceKind::Projective);
  auto sic = build_sic3();
  for (const auto& v : sic.points) {
    c.points.push_back(v);
    c.weights.push_back(2.0 / 45.0);
  }
  // standard basis plus three Fourier-type bases: 4 mutually unbiased bases
  for (int i = 0; i < 3; ++i) {
    std::vector<FieldScalar> v(3, FieldScalar(0.0));
    v[i] = FieldScalar(1.0);
    c.points.push_back(cvec(std::move(v)));
    c.weights.push_back(1.0 / 20.0);
  }
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) {
      std::vector<FieldScalar> v(3);
      for (int l = 0; l < 3; ++l) v[l] = omega_pow(j * l + k * l * l);
      c.points.push_back(cvec(std::move(v)));
      c.weights.push_back(1.0 / 20.0);
    }
  validate(c);
  return c;
}

WeightedConfiguration build_85code() {
  using CVec = std::vector<FieldScalar>;
  auto cyc = [](const CVec& v) {
    std::vector<CVec> out;
    CVec cur = v;
    for (int s = 0; s < 5; ++s) {
      out.push_back(cur);
      CVec next(5);
      for (int k = 0; k < 5; ++k) next[(k + 1) % 5] = cur[k];
      cur = next;
    }
    return out;
  };
  std::vector<CVec> x1;
  {
    CVec e1 = {FieldScalar(1.0), FieldScalar(0.0), FieldScalar(0.0),
               FieldScalar(0.0), FieldScalar(0.0)};
    for (auto& v : cyc(e1)) x1.push_back(v);
    FieldScalar w1 = omega_pow(1);
    for (double s1 : {1.0, -1.0})
      for (double s2 : {1.0, -1.0})
        for (double s3 : {1.0, -1.0}) {
          CVec v = {FieldScalar(0.0), FieldScalar(1.0), s1 * w1, s2 * w1,
                    FieldScalar(s3)};
          for (auto& u : cyc(v)) x1.push_back(u);
        }
  }
  if (x1.size() != 45) throw std::logic_error("85-code: expected 45 in X1");
  // Orient the second part so it sits at maximal projective distance from
  // X1: since X1 contains the standard basis, every such vector has exactly
  // three nonzero coordinates of modulus 1/sqrt(3) with sixth-root-of-unity
  // phases (first nonzero phase normalized to 1).  Enumerating those 360
  // candidates and keeping the ones with |<v,x>| in {0, 1/sqrt(3)} against
  // all of X1 yields exactly 40 lines -- the oriented copy of Psi.
  const double inv3 = 1.0 / std::sqrt(3.0);
  std::vector<FieldScalar> mu6;
  for (int k = 0; k < 6; ++k) {
    double a = std::numbers::pi * k / 3.0;
    mu6.emplace_back(std::cos(a), std::sin(a));
  }
  auto dot_abs = [](const CVec& a, const CVec& b) {
    FieldScalar s(0.0);
    for (size_t k = 0; k < a.size(); ++k) s = s + a[k] * b[k].conj();
    return std::sqrt(s.abs2());
  };
  std::vector<CVec> x2;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 5; ++k)
        for (const auto& p2 : mu6)
          for (const auto& p3 : mu6) {
            CVec v(5, FieldScalar(0.0));
            v[i] = FieldScalar(inv3);
            v[j] = inv3 * p2;
            v[k] = inv3 * p3;
            bool good = true;
            for (const auto& x : x1) {
              double norm = 0.0;
              for (const auto& c : x) norm += c.abs2();
              double a = dot_abs(v, x) / std::sqrt(norm);
              if (a > 1e-9 && std::abs(a - inv3) > 1e-9) {
                good = false;
                break;
              }
            }
            if (good) x2.push_back(v);
          }
  if (x2.size() != 40) throw std::logic_error("85-code: expected 40 in X2");
  WeightedConfiguration c;
  c.space = make_space(Field::C, 5, SpaceKind::Projective);
  for (auto& v : x1) {
    c.points.emplace_back(std::move(v));
    c.weights.push_back(4.0 / 315.0);
  }
  for (auto& v : x2) {
    c.points.emplace_back(std::move(v));
    c.weights.push_back(3.0 / 280.0);
  }
  validate(c);
  return c;
}

WeightedConfiguration build_cross_polytope_s2() {
  std::vector<UnitVector> pts;
  for (int i = 0; i < 3; ++i)
    for (double s : {1.0, -1.0}) {
      std::vector<double> v(3, 0.0);
      v[i] = s;
      pts.push_back(rvecv(v));
    }
  return equal_weighted(make_space(Field::R, 3, SpaceKind::Sphere),
                        std::move(pts));
}

WeightedConfiguration build_icosahedron_s2() {
  std::vector<UnitVector> pts;
  double p = kPhi;
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      pts.push_back(rvec({0, s1, s2 * p}));
      pts.push_back(rvec({s1, s2 * p, 0}));
      pts.push_back(rvec({s2 * p, 0, s1}));
    }
  return equal_weighted(make_space(Field::R, 3, SpaceKind::Sphere),
                        std::move(pts));
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&](CatalogEntry e) { cat.push_back(std::move(e)); };

  add({"polygon-8", "8 lines of the regular 16-gon (RP^1 as S^1)",
       make_space(Field::R, 2, SpaceKind::Sphere), 8, 7, true, {},
       [] { return build_polygon(8); }, {}});
  add({"orthobasis-4", "orthonormal basis, 4 lines in RP^3",
       make_space(Field::R, 4, SpaceKind::Projective), 4, 1, true,
       {{1.0, 0.25}}, [] { return build_orthobasis(Field::R, 4); }, {}});
  add({"icosahedron", "6 icosahedral lines in RP^2, |<x,y>| = 1/sqrt(5)",
       make_space(Field::R, 3, SpaceKind::Projective), 6, 2, true,
       {{3.0, 0.241202265916660}}, build_icosahedron, {}});
  add({"reznick-11", "Reznick weighted 3-design, 11 lines in RP^2",
       make_space(Field::R, 3, SpaceKind::Projective), 11, 3, false,
       {{6.0, 0.142857142857143}}, build_reznick, {}});
  add({"icosahedron-dodecahedron",
       "icosahedron and dual dodecahedron, 16 lines in RP^2",
       make_space(Field::R, 3, SpaceKind::Projective), 16, 4, false,
       {{7.0, 0.124867143799450}}, build_icosa_dodeca, {}});
  add({"weighted-11-r4", "small weighted 2-design, 11 lines in RP^3",
       make_space(Field::R, 4, SpaceKind::Projective), 11, 2, false,
       {{4.0, 0.125000000000000}}, build_weighted11_r4, {}});
  add({"24-cell", "D4 roots with dual 24-cell, 24 lines in RP^3",
       make_space(Field::R, 4, SpaceKind::Projective), 24, 3, false,
       {{5.0, 0.096277507157493}}, build_24cell, {}});
  add({"600-cell", "600-cell vertices, 60 lines in RP^3",
       make_space(Field::R, 4, SpaceKind::Projective), 60, 5, false,
       {{9.0, 0.047015486159502}}, build_600cell, {}});
  add({"hemicube-5", "hemicube union, 16 lines in RP^4",
       make_space(Field::R, 5, SpaceKind::Projective), 16, 2, false,
       {{3.0, 0.118257675970387}}, build_hemicube5, {}});
  add({"stroud-41", "Stroud weighted 3-design, 41 lines in RP^4",
       make_space(Field::R, 5, SpaceKind::Projective), 41, 3, false,
       {{5.0, 0.061838820473855}}, build_stroud41, {}});
  add({"cross-hemicube-6", "cross polytope and hemicube, 22 lines in RP^5",
       make_space(Field::R, 6, SpaceKind::Projective), 22, 2, false,
       {{3.0, 0.090559619406078}}, build_cross_hemicube6, {}});
  add({"e6-roots-union", "E6 and E6* minimal vectors, 63 lines in RP^5",
       make_space(Field::R, 6, SpaceKind::Projective), 63, 3, false,
       {{5.0, 0.042488105634495}}, build_e6_union, {}});
  add({"kissing-e8", "kissing configuration of E8, 28 lines in RP^6",
       make_space(Field::R, 7, SpaceKind::Projective), 28, 2, true,
       {{3.0, 0.071428571428571}}, build_kissing_e8, {}});
  add({"e7-roots-union", "E7 and E7* minimal vectors, 91 lines in RP^6",
       make_space(Field::R, 7, SpaceKind::Projective), 91, 3, false,
       {{5.0, 0.030645893660944}}, build_e7_union, {}});
  add({"simplex-midpoints-8", "edge midpoints of the regular 8-simplex",
       make_space(Field::R, 8, SpaceKind::Projective), 36, 1, false,
       {{3.0, 0.059098639455782}}, build_simplex_midpoints8, {}});
  add({"e8-roots", "E8 root system, 120 lines in RP^7",
       make_space(Field::R, 8, SpaceKind::Projective), 120, 3, true,
       {{5.0, 0.022916666666667}}, build_e8, {}});
  add({"sic-3", "Hesse SIC-POVM, 9 lines in CP^2",
       make_space(Field::C, 3, SpaceKind::Projective), 9, 2, true,
       {{3.0, 0.222222222222222}}, build_sic3, {}});
  add({"21-lines-c3", "9-ETF with 4 MUBs, 21 lines in CP^2",
       make_space(Field::C, 3, SpaceKind::Projective), 21, 3, false,
       {{5.0, 0.126109346785180}}, build_21lines_c3, {}});
  add({"85-code", "W(K5) roots with oriented O10 part, 85 lines in CP^4",
       make_space(Field::C, 5, SpaceKind::Projective), 85, 3, false,
       {{5.0, 0.041997097378053}}, build_85code, {}});
  add({"cross-polytope-s2", "6 cross-polytope vertices on S^2",
       make_space(Field::R, 3, SpaceKind::Sphere), 6, 3, true, {},
       build_cross_polytope_s2, {}});
  add({"icosahedron-s2", "12 icosahedron vertices on S^2",
       make_space(Field::R, 3, SpaceKind::Sphere), 12, 5, true, {},
       build_icosahedron_s2, {}});

  // census-only entries (coordinates not desk-scale)
  auto census_entry = [&](std::string name, std::string desc, Field f, int d,
                          int n, int strength, double p, double energy,
                          std::vector<CensusLine> cl) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(desc);
    e.space = make_space(f, d, SpaceKind::Projective);
    e.n_lines = n;
    e.strength = strength;
    e.tight = true;
    e.expected_energies = {{p, energy}};
    e.census = std::move(cl);
    cat.push_back(std::move(e));
  };
  census_entry("equiangular-276", "276 equiangular lines in RP^22", Field::R,
               23, 276, 2, 3.0, 0.011594202898551,
               {{0.2, 276LL * 275LL}});
  census_entry("leech-kissing-2300", "kissing configuration of the Leech "
               "lattice, 2300 lines in RP^22",
               Field::R, 23, 2300, 3, 5.0, 0.002028985507246,
               {{1.0 / 3.0, 2300LL * 891LL}, {0.0, 2300LL * 1408LL}});
  census_entry("leech-roots-98280", "Leech lattice roots, 98280 lines in "
               "RP^23",
               Field::R, 24, 98280, 5, 9.0, 0.000103419439357,
               {{0.5, 98280LL * 4600LL},
                {0.25, 98280LL * 47104LL},
                {0.0, 98280LL * 46575LL}});
  census_entry("eisenstein-e8", "Eisenstein structure on E8, 40 lines in CP^3",
               Field::C, 4, 40, 3, 5.0, 0.068301270189222,
               {{1.0 / std::sqrt(3.0), 40LL * 27LL},
                {0.0, 40LL * 12LL}});
  census_entry("eisenstein-k12", "Eisenstein structure on K12, 126 lines in "
               "CP^5",
               Field::C, 6, 126, 3, 5.0, 0.027777777777778,
               {{0.5, 126LL * 80LL}, {0.0, 126LL * 45LL}});
  const std::vector<std::pair<int, double>> sic_values = {
      {4, 0.146352549156242}, {5, 0.105319726474218}, {6, 0.080272843473504}};
  for (auto [d, e3] : sic_values) {
    census_entry("sic-" + std::to_string(d),
                 "SIC-POVM, " + std::to_string(d * d) + " equiangular lines",
                 Field::C, d, d * d, 2, 3.0, e3,
                 {{1.0 / std::sqrt(d + 1.0),
                   static_cast<long long>(d * d) *
                       static_cast<long long>(d * d - 1)}});
  }
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = make_catalog();
  return cat;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

WeightedConfiguration catalog_get(const std::string& name) {
  if (const auto* e = catalog_find(name)) {
    if (!e->constructible())
      throw std::invalid_argument("catalog entry '" + name +
                                  "' has census data only (no coordinates)");
    return e->build();
  }
  // parametric families
  auto dash = name.rfind('-');
  if (dash != std::string::npos) {
    std::string head = name.substr(0, dash);
    int num = 0;
    try {
      num = std::stoi(name.substr(dash + 1));
    } catch (...) {
      num = 0;
    }
    if (num > 0) {
      if (head == "orthobasis") return build_orthobasis(Field::R, num);
      if (head == "orthobasis-c") return build_orthobasis(Field::C, num);
      if (head == "orthobasis-h") return build_orthobasis(Field::H, num);
      if (head == "polygon") return build_polygon(num);
    }
  }
  throw std::invalid_argument("unknown catalog entry: " + name);
}

double census_energy(const CatalogEntry& e, double p) {
  double n = e.n_lines;
  double sum = n;  // diagonal terms |<x,x>|^p = 1
  long long total = e.n_lines;
  for (const auto& cl : e.census) {
    sum += static_cast<double>(cl.ordered_pairs) * std::pow(cl.abs_inner, p);
    total += cl.ordered_pairs;
  }
  if (total != static_cast<long long>(e.n_lines) * e.n_lines)
    throw std::logic_error("census pair counts inconsistent for " + e.name);
  return sum / (n * n);
}

}  // namespace pframe
