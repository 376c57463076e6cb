#include "pframe/configurations.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "pframe/jacobi.hpp"

namespace pframe {

double config_tau(const WeightedConfiguration& c, size_t i, size_t j) {
  if (c.uses_projective_tau()) return projective_tau(c.points[i], c.points[j]);
  return tau(c.space, c.points[i], c.points[j]);
}

void validate(const WeightedConfiguration& c, double weight_tol) {
  if (c.points.size() != c.weights.size())
    throw std::invalid_argument("config: points/weights size mismatch");
  if (c.points.empty()) throw std::invalid_argument("config: empty");
  if (c.projective_lines &&
      !(c.space.kind == SpaceKind::Sphere && c.space.d == 2))
    throw std::invalid_argument("projective_lines flag is for sphere d=2");
  size_t dim = static_cast<size_t>(c.space.d);
  double wsum = 0.0;
  for (size_t i = 0; i < c.points.size(); ++i) {
    if (c.points[i].dim() != dim)
      throw std::invalid_argument("config: point dimension mismatch");
    if (c.weights[i] < 0)
      throw std::invalid_argument("config: negative weight");
    if (c.space.field != Field::H) {
      for (const auto& comp : c.points[i].x) {
        int first_zero = c.space.field == Field::R ? 1 : 2;
        for (int k = first_zero; k < 4; ++k)
          if (comp.c[k] != 0.0)
            throw std::invalid_argument(
                "config: component outside the declared field");
      }
    }
    wsum += c.weights[i];
  }
  if (std::abs(wsum - 1.0) > weight_tol)
    throw std::invalid_argument("config: weights must sum to 1");
}

DistanceCensus distance_set(const WeightedConfiguration& c, double tol) {
  struct Bucket {
    double rep;
    long long count = 0;
    double mass = 0.0;
  };
  std::vector<Bucket> buckets;
  size_t n = c.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double t = config_tau(c, i, j);
      bool found = false;
      for (auto& b : buckets) {
        if (std::abs(b.rep - t) <= tol) {
          b.count++;
          b.mass += c.weights[i] * c.weights[j];
          found = true;
          break;
        }
      }
      if (!found) buckets.push_back({t, 1, c.weights[i] * c.weights[j]});
    }
  }
  std::sort(buckets.begin(), buckets.end(),
            [](const Bucket& a, const Bucket& b) { return a.rep < b.rep; });
  DistanceCensus out;
  for (const auto& b : buckets) {
    out.values.push_back(b.rep);
    out.pair_counts.push_back(b.count);
    out.weight_mass.push_back(b.mass);
  }
  return out;
}

StrengthReport design_strength(const WeightedConfiguration& c, int max_t,
                               double tol) {
  JacobiParams params = c.space.params();
  // aggregate over pairs once; moments reuse the census
  auto census = distance_set(c, 1e-12);
  double self_mass = 0.0;
  for (double w : c.weights) self_mass += w * w;
  StrengthReport rep;
  bool run = true;
  for (int m = 1; m <= max_t; ++m) {
    double s = self_mass;  // C_m(1) = 1
    for (size_t k = 0; k < census.values.size(); ++k)
      s += census.weight_mass[k] * jacobi_eval(params, m, census.values[k]);
    rep.residuals.push_back(std::abs(s));
    if (run && std::abs(s) <= tol)
      rep.strength = m;
    else
      run = false;
  }
  return rep;
}

TightnessReport tightness_check(const WeightedConfiguration& c, double tol) {
  TightnessReport rep;
  auto census = distance_set(c);
  rep.m_distances = static_cast<int>(census.values.size());
  rep.has_minus_one =
      !census.values.empty() && std::abs(census.values.front() + 1.0) <= 1e-9;
  int m = rep.m_distances;
  auto sr = design_strength(c, 2 * m + 1, tol);
  rep.strength = sr.strength;
  if (rep.strength == 2 * m) {
    rep.tight = true;
    rep.note = "tight 2m-design with m distances";
  } else if (rep.strength == 2 * m - 1 && rep.has_minus_one) {
    rep.tight = true;
    rep.note = "tight (2m-1)-design with m distances including -1";
  } else {
    rep.note = "strength " + std::to_string(rep.strength) + " with " +
               std::to_string(m) + " distances: not tight";
  }
  return rep;
}

WeightedConfiguration from_gram(const Eigen::MatrixXd& gram,
                                const std::vector<double>& weights,
                                const SpaceDescriptor& space, double psd_tol) {
  if (space.field != Field::R)
    throw std::invalid_argument("from_gram: real spaces only");
  const auto n = gram.rows();
  if (gram.cols() != n || static_cast<long long>(weights.size()) != n)
    throw std::invalid_argument("from_gram: shape mismatch");
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("from_gram: gram not symmetric");
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(gram(i, i) - 1.0) > 1e-12)
      throw std::invalid_argument("from_gram: diagonal must be 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const auto& ev = es.eigenvalues();
  if (ev(0) < -psd_tol * std::max(1.0, ev(n - 1)))
    throw std::invalid_argument("from_gram: matrix not PSD");
  int d = space.d;
  int rank = 0;
  for (Eigen::Index k = 0; k < n; ++k)
    if (ev(k) > 1e-9 * std::max(1.0, ev(n - 1))) rank++;
  if (rank > d)
    throw std::invalid_argument("from_gram: rank exceeds target dimension");
  // use the top-d eigenpairs (eigenvalues ascending)
  WeightedConfiguration c;
  c.space = space;
  c.weights = weights;
  for (Eigen::Index i = 0; i < n; ++i) {
    std::vector<FieldScalar> comps(d, FieldScalar(0.0));
    for (int k = 0; k < d; ++k) {
      double lam = std::max(ev(n - 1 - k), 0.0);
      comps[k] = FieldScalar(std::sqrt(lam) * es.eigenvectors()(i, n - 1 - k));
    }
    c.points.emplace_back(std::move(comps));
  }
  validate(c);
  return c;
}

namespace {

nlohmann::json scalar_to_json(const FieldScalar& s, Field f) {
  switch (f) {
    case Field::R: return s.c[0];
    case Field::C: return nlohmann::json::array({s.c[0], s.c[1]});
    default: return nlohmann::json::array({s.c[0], s.c[1], s.c[2], s.c[3]});
  }
}

FieldScalar scalar_from_json(const nlohmann::json& j, Field f) {
  if (f == Field::R) {
    if (!j.is_number()) throw std::invalid_argument("real component expected");
    return FieldScalar(j.get<double>());
  }
  if (!j.is_array()) throw std::invalid_argument("component array expected");
  if (f == Field::C) {
    if (j.size() != 2) throw std::invalid_argument("complex needs [re,im]");
    return FieldScalar(j[0].get<double>(), j[1].get<double>());
  }
  if (j.size() != 4) throw std::invalid_argument("quaternion needs 4 entries");
  return FieldScalar(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                     j[3].get<double>());
}

std::string field_str(Field f) {
  return f == Field::R ? "R" : f == Field::C ? "C" : "H";
}

Field field_parse(const std::string& s) {
  if (s == "R" || s == "r") return Field::R;
  if (s == "C" || s == "c") return Field::C;
  if (s == "H" || s == "h") return Field::H;
  throw std::invalid_argument("unknown field: " + s);
}

}  // namespace

nlohmann::json config_to_json(const WeightedConfiguration& c) {
  nlohmann::json j;
  j["space"] = {
      {"field", field_str(c.space.field)},
      {"d", c.space.d},
      {"kind", c.space.kind == SpaceKind::Sphere ? "sphere" : "projective"}};
  if (c.projective_lines) j["projective_lines"] = true;
  auto pts = nlohmann::json::array();
  for (const auto& pt : c.points) {
    auto row = nlohmann::json::array();
    for (const auto& comp : pt.x) row.push_back(scalar_to_json(comp, c.space.field));
    pts.push_back(row);
  }
  j["points"] = pts;
  j["weights"] = c.weights;
  return j;
}

WeightedConfiguration config_from_json(const nlohmann::json& j) {
  WeightedConfiguration c;
  const auto& sp = j.at("space");
  Field f = field_parse(sp.at("field").get<std::string>());
  std::string kind = sp.at("kind").get<std::string>();
  c.space = make_space(f, sp.at("d").get<int>(),
                       kind == "sphere" ? SpaceKind::Sphere
                                        : SpaceKind::Projective);
  c.projective_lines = j.value("projective_lines", false);
  for (const auto& row : j.at("points")) {
    std::vector<FieldScalar> comps;
    for (const auto& comp : row) comps.push_back(scalar_from_json(comp, f));
    c.points.emplace_back(std::move(comps));
  }
  c.weights = j.at("weights").get<std::vector<double>>();
  validate(c);
  return c;
}

WeightedConfiguration load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return config_from_json(j);
}

void save_config(const WeightedConfiguration& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << config_to_json(c).dump(2) << "\n";
}

}  // namespace pframe
