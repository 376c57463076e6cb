#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "pframe/catalog.hpp"
#include "pframe/configurations.hpp"
#include "pframe/energy.hpp"

using namespace pframe;

TEST_CASE("every constructible catalog entry validates") {
  for (const auto& e : catalog()) {
    if (!e.constructible()) continue;
    CAPTURE(e.name);
    WeightedConfiguration c = e.build();
    CHECK_NOTHROW(validate(c));
    CHECK(static_cast<int>(c.size()) == e.n_lines);
    // weights sum to one
    double sum = 0.0;
    for (double w : c.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("catalog strengths are attained") {
  for (const auto& e : catalog()) {
    if (!e.constructible()) continue;
    if (e.n_lines > 150) continue;  // keep the loop fast
    CAPTURE(e.name);
    WeightedConfiguration c = e.build();
    StrengthReport sr = design_strength(c, e.strength + 1, 1e-9);
    CHECK(sr.strength == e.strength);
  }
}

TEST_CASE("census-only entries have consistent pair counts") {
  for (const auto& e : catalog()) {
    if (e.constructible()) continue;
    CAPTURE(e.name);
    long long n = e.n_lines;
    long long pairs = 0;
    for (const auto& line : e.census) pairs += line.ordered_pairs;
    CHECK(pairs == n * (n - 1));
  }
}

TEST_CASE("tightness check matches the catalog flags") {
  for (const auto& e : catalog()) {
    if (!e.constructible()) continue;
    if (e.n_lines > 150) continue;
    CAPTURE(e.name);
    CHECK(tightness_check(e.build(), 1e-8).tight == e.tight);
  }
}

TEST_CASE("distance census of the icosahedron") {
  DistanceCensus dc = distance_set(catalog_get("icosahedron"));
  REQUIRE(dc.values.size() == 1);
  CHECK(dc.values[0] == doctest::Approx(-0.6).epsilon(1e-12));
  CHECK(dc.pair_counts[0] == 30);
  CHECK(dc.weight_mass[0] == doctest::Approx(30.0 / 36.0).epsilon(1e-12));
}

TEST_CASE("600-cell distance set matches the golden ratio values") {
  DistanceCensus dc = distance_set(catalog_get("600-cell"));
  // |<x,y>| in {0, (sqrt5 - 1)/4, 1/2, (sqrt5 + 1)/4} -> tau = 2s^2 - 1
  double s5 = std::sqrt(5.0);
  std::vector<double> expect;
  for (double s : {0.0, (s5 - 1.0) / 4.0, 0.5, (s5 + 1.0) / 4.0})
    expect.push_back(2.0 * s * s - 1.0);
  std::sort(expect.begin(), expect.end());
  REQUIRE(dc.values.size() == expect.size());
  for (size_t k = 0; k < expect.size(); ++k)
    CHECK(dc.values[k] == doctest::Approx(expect[k]).epsilon(1e-12));
}

TEST_CASE("design strength of the 85-line code is exactly 3") {
  WeightedConfiguration c = catalog_get("85-code");
  StrengthReport sr = design_strength(c, 4, 1e-12);
  CHECK(sr.strength == 3);
  CHECK(sr.residuals[0] <= 1e-12);
  CHECK(sr.residuals[1] <= 1e-12);
  CHECK(sr.residuals[2] <= 1e-12);
  CHECK(sr.residuals[3] > 1e-6);  // fourth moment survives
}

TEST_CASE("gram factorization reproduces the configuration") {
  WeightedConfiguration c = catalog_get("icosahedron");
  int n = static_cast<int>(c.size());
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G(i, j) = inner_product(c.points[i], c.points[j]).re();
  WeightedConfiguration back = from_gram(G, c.weights, c.space);
  CHECK(energy(back, PFrameKernel{3.0}) ==
        doctest::Approx(energy(c, PFrameKernel{3.0})).epsilon(1e-12));
  DistanceCensus a = distance_set(c), b = distance_set(back, 1e-7);
  REQUIRE(a.values.size() == b.values.size());
  for (size_t k = 0; k < a.values.size(); ++k) {
    CHECK(a.values[k] == doctest::Approx(b.values[k]).epsilon(1e-7));
    CHECK(a.pair_counts[k] == b.pair_counts[k]);
  }
}

TEST_CASE("json round trip preserves the configuration") {
  WeightedConfiguration c = catalog_get("sic-3");
  nlohmann::json j = config_to_json(c);
  WeightedConfiguration back = config_from_json(j);
  CHECK(back.space == c.space);
  CHECK(back.size() == c.size());
  CHECK(energy(back, PFrameKernel{3.0}) ==
        doctest::Approx(energy(c, PFrameKernel{3.0})).epsilon(1e-14));

  std::string path =
      (std::filesystem::temp_directory_path() / "pframe-roundtrip.json")
          .string();
  save_config(c, path);
  WeightedConfiguration loaded = load_config(path);
  CHECK(energy(loaded, PFrameKernel{3.0}) ==
        doctest::Approx(energy(c, PFrameKernel{3.0})).epsilon(1e-14));
  std::remove(path.c_str());
}

TEST_CASE("validation rejects malformed measures") {
  WeightedConfiguration c = catalog_get("icosahedron");
  c.weights[0] += 0.5;
  CHECK_THROWS(validate(c));
  c = catalog_get("icosahedron");
  c.weights.pop_back();
  CHECK_THROWS(validate(c));
}

TEST_CASE("parametric catalog names build the right sizes") {
  CHECK(catalog_get("orthobasis-5").size() == 5);
  CHECK(catalog_get("orthobasis-c-3").size() == 3);
  CHECK(catalog_get("orthobasis-h-2").size() == 2);
  CHECK(catalog_get("polygon-7").size() == 7);
  CHECK_THROWS(catalog_get("no-such-entry"));
}
