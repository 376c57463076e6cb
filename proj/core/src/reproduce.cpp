#include "pframe/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pframe/catalog.hpp"
#include "pframe/energy.hpp"
#include "pframe/lpbound.hpp"

namespace pframe {

namespace {

// one unit in the fourth significant digit of x
double unit4(double x) {
  return std::pow(10.0, std::floor(std::log10(std::abs(x))) - 3.0);
}

CellResult energy_cell(const CatalogEntry& e) {
  if (e.expected_energies.empty())
    throw std::logic_error("catalog entry without expected energy: " + e.name);
  double p = e.expected_energies.front().p;
  CellResult cell;
  cell.label = e.name + " (p=" + std::to_string(static_cast<int>(p)) + ")";
  cell.expected = e.expected_energies.front().value;
  cell.tolerance = 1e-12;
  if (e.constructible()) {
    // tabulated minimizer energies are attained at the energy-optimal
    // weights for the support; for tight designs these coincide with the
    // design weights, otherwise they are the interior quadratic optimum
    WeightedConfiguration c = e.build();
    WeightOptimum opt = optimal_weight_energy(c, PFrameKernel{p});
    cell.actual = opt.energy;
    double design = energy(c, PFrameKernel{p});
    if (std::abs(design - opt.energy) > 1e-12)
      cell.note = "energy-optimal weights differ from the design weights";
  } else {
    cell.actual = census_energy(e, p);
    cell.note = "coordinates not desk-scale; recomputed from the distance "
                "census";
  }
  cell.pass = std::abs(cell.actual - cell.expected) <= cell.tolerance;
  return cell;
}

TableReport energy_table(int which, Field field) {
  TableReport rep;
  rep.table = which;
  rep.title = std::string("minimizer energies on ") +
              (field == Field::R ? "real" : "complex") + " projective spaces";
  for (const auto& e : catalog()) {
    if (e.space.field != field || e.space.kind != SpaceKind::Projective)
      continue;
    if (e.expected_energies.empty()) continue;
    rep.cells.push_back(energy_cell(e));
  }
  return rep;
}

TableReport census85_table() {
  TableReport rep;
  rep.table = 3;
  rep.title = "inner-product census of the 85-line code";
  WeightedConfiguration c = catalog_get("85-code");
  if (c.size() != 85) throw std::logic_error("85-code: wrong size");

  struct Block {
    const char* name;
    int a_lo, a_hi, b_lo, b_hi;  // point index ranges [lo, hi)
    std::vector<std::pair<double, long long>> expected;  // (|<x,y>|, count)
  };
  const double s3 = 1.0 / std::sqrt(3.0);
  const std::vector<Block> blocks = {
      {"X1'X1", 0, 45, 0, 45, {{0.0, 540}, {0.5, 1440}, {1.0, 45}}},
      {"X2'X2", 45, 85, 45, 85, {{1.0 / 3.0, 1080}, {s3, 480}, {1.0, 40}}},
      {"X1'X2", 0, 45, 45, 85, {{0.0, 720}, {s3, 1080}}},
      {"X2'X1", 45, 85, 0, 45, {{0.0, 720}, {s3, 1080}}},
  };
  for (const auto& blk : blocks) {
    std::vector<long long> counts(blk.expected.size(), 0);
    long long stray = 0;
    for (int i = blk.a_lo; i < blk.a_hi; ++i)
      for (int j = blk.b_lo; j < blk.b_hi; ++j) {
        double a = inner_product(c.points[i], c.points[j]).abs();
        bool found = false;
        for (size_t k = 0; k < blk.expected.size(); ++k)
          if (std::abs(a - blk.expected[k].first) <= 1e-9) {
            ++counts[k];
            found = true;
            break;
          }
        if (!found) ++stray;
      }
    for (size_t k = 0; k < blk.expected.size(); ++k) {
      CellResult cell;
      cell.label = std::string(blk.name) + " count at |<x,y>| = " +
                   std::to_string(blk.expected[k].first);
      cell.expected = static_cast<double>(blk.expected[k].second);
      cell.actual = static_cast<double>(counts[k]);
      cell.tolerance = 0.0;
      cell.pass = counts[k] == blk.expected[k].second && stray == 0;
      if (stray > 0) cell.note = "values outside the expected census";
      rep.cells.push_back(cell);
    }
  }
  return rep;
}

TableReport compare_table() {
  TableReport rep;
  rep.table = 5;
  rep.title = "conjectured energies vs linear programming bounds";
  struct Row {
    const char* name;
    double p, printed_energy, printed_bound;
  };
  const std::vector<Row> rows = {
      {"icosahedron-dodecahedron", 7.0, 0.1249, 0.1248},
      {"24-cell", 5.0, 0.09628, 0.09607},
      {"hemicube-5", 3.0, 0.1183, 0.1170},
      {"stroud-41", 5.0, 0.06184, 0.06169},
      {"cross-hemicube-6", 3.0, 0.09056, 0.08970},
      {"e6-roots-union", 5.0, 0.04249, 0.04240},
      {"e7-roots-union", 5.0, 0.03065, 0.03060},
      {"simplex-midpoints-8", 3.0, 0.05910, 0.05852},
      // tabulated with the decimal point shifted one place left; the listed
      // digits match the recomputed energy and bound at the correct scale
      {"21-lines-c3", 5.0, 0.1261, 0.1258},
      {"85-code", 5.0, 0.04200, 0.04184},
  };
  for (const auto& row : rows) {
    const CatalogEntry* e = catalog_find(row.name);
    if (!e) throw std::logic_error("missing catalog entry: " +
                                   std::string(row.name));
    double en = optimal_weight_energy(e->build(), PFrameKernel{row.p}).energy;
    CellResult ec;
    ec.label = std::string(row.name) + " energy (p=" +
               std::to_string(static_cast<int>(row.p)) + ")";
    ec.expected = row.printed_energy;
    ec.actual = en;
    ec.tolerance = 0.51 * unit4(row.printed_energy);
    ec.pass = std::abs(en - row.printed_energy) <= ec.tolerance;
    rep.cells.push_back(ec);

    Certificate cert = lp_lower_bound(e->space, PFrameKernel{row.p},
                                      default_lp_degree(row.p));
    CellResult bc;
    bc.label = std::string(row.name) + " LP bound (p=" +
               std::to_string(static_cast<int>(row.p)) + ")";
    bc.expected = row.printed_bound;
    bc.actual = cert.bound.lo;
    bc.tolerance = 5e-5;
    // printed bounds are rounded down; the certified bound must reach the
    // printed value (up to tolerance) without crossing the attained energy
    bc.pass = cert.verdict == Verdict::Verified &&
              bc.actual >= row.printed_bound - bc.tolerance &&
              bc.actual <= en + 1e-10;
    if (cert.verdict != Verdict::Verified) bc.note = "certificate not verified";
    rep.cells.push_back(bc);
  }
  return rep;
}

TableReport lp_table() {
  TableReport rep;
  rep.table = 6;
  rep.title = "linear programming lower bounds, d = 3..8, p in {3, 5, 7}";
  const double printed[6][3] = {
      {0.2412, 0.1655, 0.1248},    {0.1612, 0.09607, 0.06454},
      {0.1170, 0.06169, 0.03740},  {0.08970, 0.04240, 0.02344},
      {0.07142, 0.03060, 0.01556}, {0.05852, 0.02291, 0.01080}};
  const double ps[3] = {3.0, 5.0, 7.0};
  for (int d = 3; d <= 8; ++d) {
    SpaceDescriptor space = make_space(Field::R, d, SpaceKind::Projective);
    for (int k = 0; k < 3; ++k) {
      double p = ps[k];
      Certificate cert =
          lp_lower_bound(space, PFrameKernel{p}, default_lp_degree(p));
      CellResult cell;
      cell.label = "d=" + std::to_string(d) +
                   " p=" + std::to_string(static_cast<int>(p));
      cell.expected = printed[d - 3][k];
      cell.actual = cert.bound.lo;
      cell.tolerance = 5e-5;
      double best = 0.0;
      bool have_best = false;
      for (const auto& e : catalog()) {
        if (!(e.space == space)) continue;
        double en = e.constructible()
                        ? optimal_weight_energy(e.build(), PFrameKernel{p})
                              .energy
                        : census_energy(e, p);
        if (!have_best || en < best) best = en;
        have_best = true;
      }
      cell.pass = cert.verdict == Verdict::Verified &&
                  cell.actual >= cell.expected - cell.tolerance &&
                  (!have_best || cell.actual <= best + 1e-10);
      if (cert.verdict != Verdict::Verified)
        cell.note = "certificate not verified";
      else if (have_best && cell.actual > best + 1e-10)
        cell.note = "bound exceeds the best catalog energy";
      rep.cells.push_back(cell);
    }
  }
  return rep;
}

TableReport parameters_table() {
  TableReport rep;
  rep.table = 9;
  rep.title = "weights, inner products, and strengths of the named "
              "configurations";
  const double s5 = std::sqrt(5.0);
  struct Row {
    const char* name;
    int strength;
    std::vector<double> weights;     // distinct values
    std::vector<double> abs_inner;   // distinct |<x,y>|, distinct lines
  };
  const std::vector<Row> rows = {
      {"orthobasis-4", 1, {0.25}, {0.0}},
      {"icosahedron", 2, {1.0 / 6.0}, {1.0 / s5}},
      {"reznick-11",
       3,
       {2.0 / 27.0, 49.0 / 540.0, 1.0 / 10.0},
       {0.0, 1.0 / 7.0, 4.0 / 7.0, 5.0 / 7.0, std::sqrt(1.0 / 7.0),
        std::sqrt(3.0 / 7.0), std::sqrt(4.0 / 7.0)}},
      {"icosahedron-dodecahedron",
       4,
       {5.0 / 84.0, 9.0 / 140.0},
       {1.0 / 3.0, 1.0 / s5, std::sqrt(5.0) / 3.0,
        std::sqrt(75.0 + 30.0 * s5) / 15.0, std::sqrt((5.0 - 2.0 * s5) / 15.0)}},
      {"weighted-11-r4",
       2,
       {3.0 / 40.0, 3.0 / 32.0, 1.0 / 10.0},
       {1.0 / 3.0, 2.0 / 3.0, std::sqrt(2.0) / 3.0, std::sqrt(6.0) / 6.0,
        (s5 + 1.0) / 6.0, std::sqrt(6.0 - 2.0 * s5) / 6.0}},
      {"24-cell", 3, {1.0 / 24.0}, {0.0, 0.5, 1.0 / std::sqrt(2.0)}},
      {"600-cell",
       5,
       {1.0 / 60.0},
       {0.0, (s5 - 1.0) / 4.0, 0.5, (s5 + 1.0) / 4.0}},
      {"hemicube-5",
       2,
       {5.0 / 84.0, 9.0 / 140.0},
       {0.2, 1.0 / 3.0, 1.0 / s5}},
      {"stroud-41",
       3,
       {2.0 / 105.0, 8.0 / 315.0, 25.0 / 1008.0},
       {0.0, 0.2, 0.5, 0.6, 1.0 / std::sqrt(2.0), 1.0 / s5,
        std::sqrt(0.4)}},
      {"cross-hemicube-6",
       2,
       {1.0 / 24.0, 3.0 / 64.0},
       {0.0, 1.0 / 3.0, 1.0 / std::sqrt(6.0)}},
      {"e6-roots-union",
       3,
       {2.0 / 135.0, 1.0 / 60.0},
       {0.0, 0.25, 0.5, std::sqrt(3.0 / 8.0)}},
      {"kissing-e8", 2, {1.0 / 28.0}, {1.0 / 3.0}},
      {"e7-roots-union",
       3,
       {3.0 / 308.0, 8.0 / 693.0},
       {0.0, 1.0 / 3.0, 0.5, 1.0 / std::sqrt(3.0)}},
      {"simplex-midpoints-8", 1, {1.0 / 36.0}, {2.0 / 7.0, 5.0 / 14.0}},
      {"e8-roots", 3, {1.0 / 120.0}, {0.0, 0.5}},
  };
  for (const auto& row : rows) {
    WeightedConfiguration c = catalog_get(row.name);

    CellResult sc;
    sc.label = std::string(row.name) + " design strength";
    sc.expected = row.strength;
    sc.actual = design_strength(c, row.strength + 1).strength;
    sc.pass = sc.actual == sc.expected;
    rep.cells.push_back(sc);

    std::vector<double> w;
    for (double x : c.weights) {
      bool seen = false;
      for (double y : w) seen = seen || std::abs(x - y) <= 1e-12;
      if (!seen) w.push_back(x);
    }
    std::sort(w.begin(), w.end());
    std::vector<double> expect_w = row.weights;
    std::sort(expect_w.begin(), expect_w.end());
    CellResult wc;
    wc.label = std::string(row.name) + " weight values";
    wc.expected = static_cast<double>(row.weights.size());
    wc.actual = static_cast<double>(w.size());
    wc.tolerance = 1e-12;
    wc.pass = w.size() == row.weights.size();
    for (size_t k = 0; wc.pass && k < w.size(); ++k)
      wc.pass = std::abs(w[k] - expect_w[k]) <= wc.tolerance;
    rep.cells.push_back(wc);

    DistanceCensus census = distance_set(c);
    std::vector<double> a;
    for (double t : census.values) a.push_back(std::sqrt((t + 1.0) / 2.0));
    std::sort(a.begin(), a.end());
    std::vector<double> expect = row.abs_inner;
    std::sort(expect.begin(), expect.end());
    CellResult dc;
    dc.label = std::string(row.name) + " inner products";
    dc.expected = static_cast<double>(expect.size());
    dc.actual = static_cast<double>(a.size());
    dc.tolerance = 1e-9;
    dc.pass = a.size() == expect.size();
    for (size_t k = 0; dc.pass && k < a.size(); ++k)
      dc.pass = std::abs(a[k] - expect[k]) <= dc.tolerance;
    rep.cells.push_back(dc);
  }
  return rep;
}

}  // namespace

TableReport reproduce_table(int which) {
  switch (which) {
    case 1: return energy_table(1, Field::R);
    case 2: return energy_table(2, Field::C);
    case 3: return census85_table();
    case 5: return compare_table();
    case 6: return lp_table();
    case 9: return parameters_table();
    default:
      throw std::invalid_argument("no reproduction harness for table " +
                                  std::to_string(which));
  }
}

std::vector<TableReport> reproduce_tables(const std::vector<int>& which) {
  std::vector<TableReport> out;
  out.reserve(which.size());
  for (int w : which) out.push_back(reproduce_table(w));
  return out;
}

}  // namespace pframe
