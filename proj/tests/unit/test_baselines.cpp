#include "amifmds/baselines.hpp"
#include "amifmds/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace amifmds;

TEST_CASE("default lag window") {
  CHECK(default_max_lag(2048) == 512);
  CHECK(default_max_lag(2) == 0);
  CHECK(default_max_lag(1) == 0);
}

TEST_CASE("cross-correlation finds a pure shift") {
  Xoshiro256 rng(8);
  std::vector<double> x(400);
  for (auto& v : x) v = rng.normal();
  std::vector<double> y(400, 0.0);
  for (std::size_t t = 5; t < 400; ++t) y[t] = x[t - 5];
  const auto r = max_abs_cross_correlation(x, y, 20);
  CHECK(std::abs(r.lag) == 5);
  CHECK(r.value > 0.9);
  CHECK(r.value <= 1.0);
  CHECK(macc(x, y, 20) == r.value);
  CHECK(maccoeff(x, y) < 0.3);
}

TEST_CASE("maccoeff is |Pearson| at lag 0") {
  std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> y{10, 8, 6, 4, 2};
  CHECK(maccoeff(x, y) == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> z{1, -1, 0, -1, 1};
  CHECK(maccoeff(x, z) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("baseline matrices are symmetric with the sentinel diagonal") {
  SeriesTable t;
  t.names = {"a", "b", "c"};
  t.values.resize(64, 3);
  Xoshiro256 rng(2);
  for (Eigen::Index i = 0; i < 64; ++i) {
    t.values(i, 0) = rng.normal();
    t.values(i, 1) = 0.5 * t.values(i, 0) + rng.normal();
    t.values(i, 2) = rng.normal();
  }
  for (auto metric : {BaselineMetric::Macc, BaselineMetric::Maccoeff}) {
    const auto s = baseline_similarity_matrix(t, metric, 16, 1);
    CHECK(s.values == baseline_similarity_matrix(t, metric, 16, 3).values);
    for (Eigen::Index i = 0; i < 3; ++i) {
      CHECK(std::isinf(s.values(i, i)));
      for (Eigen::Index j = 0; j < 3; ++j)
        if (i != j) CHECK(s.values(i, j) == s.values(j, i));
    }
  }
}

TEST_CASE("euclidean dissimilarity") {
  SeriesTable t;
  t.names = {"e1", "e2"};
  t.values.resize(2, 2);
  t.values << 1, 0, 0, 1;
  const auto g = euclidean_dissim(t);
  CHECK(g.values(0, 1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(g.values(0, 0) == 0.0);
}
