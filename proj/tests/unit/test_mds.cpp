#include "amifmds/mds.hpp"
#include "amifmds/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace amifmds;

namespace {

DissimilarityMatrix from_points(const RealMatrix& p) {
  DissimilarityMatrix g;
  g.names = default_names(p.rows());
  g.values = embedded_distances(p);
  return g;
}

}  // namespace

TEST_CASE("round trip of exact Euclidean distances") {
  Xoshiro256 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index m = 4 + trial % 10;
    const Eigen::Index d = 1 + trial % 3;
    RealMatrix p(m, d);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < d; ++j) p(i, j) = rng.uniform(-3.0, 3.0);
    const auto g = from_points(p);
    const auto e = classical_mds(g, d);
    CHECK((embedded_distances(e.coords) - g.values).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(stress(g, e) < 1e-6);
    for (Eigen::Index k = 1; k < e.eigenvalues.size(); ++k) CHECK(e.eigenvalues(k - 1) >= e.eigenvalues(k));
  }
}

TEST_CASE("equilateral triangle embeds in two dimensions") {
  DissimilarityMatrix g;
  g.names = {"a", "b", "c"};
  g.values = RealMatrix::Ones(3, 3) - RealMatrix::Identity(3, 3);
  const auto e = classical_mds(g, 2);
  CHECK(e.eigenvalues(0) == doctest::Approx(0.5));
  CHECK(e.eigenvalues(1) == doctest::Approx(0.5));
  CHECK(e.eigenvalues(2) == doctest::Approx(0.0).scale(1.0));
  CHECK((embedded_distances(e.coords) - g.values).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(e.warnings.empty());
}

TEST_CASE("double centering has zero row sums") {
  RealMatrix g(3, 3);
  g << 0, 1, 2, 1, 0, 1.5, 2, 1.5, 0;
  const auto b = double_center(g);
  CHECK(b.rowwise().sum().cwiseAbs().maxCoeff() < 1e-12);
  CHECK(b.isApprox(b.transpose()));
}

TEST_CASE("non-Euclidean input warns and zeroes the column") {
  // Violates the triangle inequality: eigenvalues 4.5, 0 and -5/6.
  DissimilarityMatrix g;
  g.names = default_names(3);
  g.values.resize(3, 3);
  g.values << 0, 1, 3, 1, 0, 1, 3, 1, 0;
  const auto e = classical_mds(g, 2);
  CHECK(e.eigenvalues(0) > 0.0);
  CHECK(e.eigenvalues(2) == doctest::Approx(-5.0 / 6.0));
  CHECK_FALSE(e.coords.col(0).isZero());
  CHECK(e.coords.col(1).isZero());
  CHECK_FALSE(e.warnings.empty());
}

TEST_CASE("sign convention and input validation") {
  Xoshiro256 rng(5);
  RealMatrix p(6, 2);
  for (Eigen::Index i = 0; i < p.size(); ++i) p.data()[i] = rng.normal();
  const auto e = classical_mds(from_points(p), 2);
  for (Eigen::Index c = 0; c < 2; ++c) {
    Eigen::Index arg = 0;
    e.coords.col(c).cwiseAbs().maxCoeff(&arg);
    CHECK(e.coords(arg, c) > 0.0);
  }

  auto g = from_points(p);
  CHECK_THROWS(classical_mds(g, 0));
  CHECK_THROWS(classical_mds(g, 6));
  g.values(0, 1) += 0.5;
  CHECK_THROWS(classical_mds(g, 2));
}
