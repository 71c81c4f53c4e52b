#include "amifmds/dbscan.hpp"
#include "amifmds/rng.hpp"
#include "support/dbscan_oracle.hpp"

#include <doctest.h>

#include <numeric>
#include <vector>

using namespace amifmds;

TEST_CASE("two separated groups") {
  RealMatrix p(6, 2);
  p << 0, 0, 0.1, 0, 0.2, 0.05, 5, 5, 5.1, 5, 5.05, 5.1;
  const auto c = dbscan(p, {0.15, 2});
  CHECK(c.labels == std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(c.cluster_count() == 2);
}

TEST_CASE("min_pts 1 labels everything, isolated points are singletons") {
  RealMatrix p(4, 1);
  p << 0, 10, 0.1, 20;
  const auto c = dbscan(p, {0.15, 1});
  CHECK(c.labels == std::vector<int>{0, 1, 0, 2});
}

TEST_CASE("closed ball and noise") {
  RealMatrix p(3, 1);
  p << 0, 0.5, 3;
  CHECK(dbscan(p, {0.5, 2}).labels == std::vector<int>{0, 0, kNoise});
  CHECK_THROWS(dbscan(p, {0.0, 1}));
  CHECK_THROWS(dbscan(p, {1.0, 0}));
}

TEST_CASE("border point shared by two clusters goes to the earlier one") {
  RealMatrix p(5, 1);
  p << 0, 0.1, 0.3, 0.5, 0.6;
  const auto c = dbscan(p, {0.2, 3});
  CHECK(c.labels == oracle::dbscan(p, 0.2, 3));
}

TEST_CASE("seeded instances match the brute-force reference") {
  Xoshiro256 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<Eigen::Index>(1 + rng.next() % 50);
    const auto d = static_cast<Eigen::Index>(1 + rng.next() % 3);
    const double eps = rng.uniform(0.05, 0.4);
    const int min_pts = static_cast<int>(1 + rng.next() % 5);
    RealMatrix p(m, d);
    for (Eigen::Index i = 0; i < p.size(); ++i) p.data()[i] = rng.uniform();
    const auto c = dbscan(p, {eps, min_pts});
    REQUIRE(c.labels == oracle::dbscan(p, eps, min_pts));
    if (min_pts == 1) CHECK(std::count(c.labels.begin(), c.labels.end(), kNoise) == 0);
  }
}

TEST_CASE("permuting points keeps the partition") {
  Xoshiro256 rng(77);
  RealMatrix p(30, 2);
  for (Eigen::Index i = 0; i < p.size(); ++i) p.data()[i] = rng.uniform();
  std::vector<Eigen::Index> perm(30);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng.next() % (i + 1)]);
  RealMatrix q(30, 2);
  for (Eigen::Index i = 0; i < 30; ++i) q.row(i) = p.row(perm[static_cast<std::size_t>(i)]);
  const auto a = dbscan(p, {0.12, 1});
  const auto b = dbscan(q, {0.12, 1});
  std::vector<int> back(30);
  for (Eigen::Index i = 0; i < 30; ++i) back[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = b.labels[static_cast<std::size_t>(i)];
  CHECK(adjusted_rand_index(a.labels, back) == doctest::Approx(1.0));
}

TEST_CASE("adjusted rand index") {
  const std::vector<int> a{0, 0, 1, 1, 2, 2};
  const std::vector<int> renamed{5, 5, 3, 3, 9, 9};
  CHECK(adjusted_rand_index(a, a) == 1.0);
  CHECK(adjusted_rand_index(a, renamed) == doctest::Approx(1.0));

  std::vector<int> singletons(16);
  std::iota(singletons.begin(), singletons.end(), 0);
  const std::vector<int> one(16, 0);
  CHECK(adjusted_rand_index(singletons, one) == doctest::Approx(0.0).scale(1.0));

  // sklearn.metrics.adjusted_rand_score
  const std::vector<int> x{0, 0, 1, 1, 2, 2, 2, 3};
  const std::vector<int> y{0, 0, 0, 1, 1, 2, 2, -1};
  CHECK(adjusted_rand_index(x, y) == doctest::Approx(0.26956521739130435).epsilon(1e-12));

  const std::vector<int> shorter{0, 1};
  CHECK_THROWS_AS(adjusted_rand_index(a, shorter), std::invalid_argument);
}
