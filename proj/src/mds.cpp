#include "amifmds/mds.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace amifmds {

RealMatrix double_center(const RealMatrix& g) {
  const Eigen::Index m = g.rows();
  const RealMatrix sq = g.array().square().matrix();
  const RealVector row_mean = sq.rowwise().mean();
  const RealVector col_mean = sq.colwise().mean().transpose();
  const double grand = sq.mean();
  RealMatrix b(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) b(i, j) = -0.5 * (sq(i, j) - row_mean(i) - col_mean(j) + grand);
  }
  return b;
}

namespace {

void validate_dissimilarity(const RealMatrix& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("classical_mds: matrix is not square");
  if (!g.allFinite()) throw std::invalid_argument("classical_mds: non-finite dissimilarity");
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    if (g(i, i) != 0.0) throw std::invalid_argument("classical_mds: nonzero diagonal at " + std::to_string(i));
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (g(i, j) < 0.0) throw std::invalid_argument("classical_mds: negative dissimilarity");
      if (std::abs(g(i, j) - g(j, i)) > 1e-12 * scale) throw std::invalid_argument("classical_mds: matrix is not symmetric");
    }
  }
}

}  // namespace

Embedding classical_mds(const DissimilarityMatrix& g, Eigen::Index d) {
  validate_dissimilarity(g.values);
  const Eigen::Index m = g.size();
  if (d < 1 || d > m - 1) {
    throw std::invalid_argument("classical_mds: dimension " + std::to_string(d) + " outside [1, " +
                                std::to_string(m - 1) + "]");
  }

  RealMatrix b = double_center(g.values);
  b = 0.5 * (b + b.transpose()).eval();
  const Eigen::SelfAdjointEigenSolver<RealMatrix> solver(b);
  if (solver.info() != Eigen::Success) throw std::runtime_error("classical_mds: eigendecomposition did not converge");

  Embedding e;
  e.names = g.names.empty() ? default_names(m) : g.names;
  e.eigenvalues = solver.eigenvalues().reverse();
  e.coords = RealMatrix::Zero(m, d);
  // Rounding leaves null directions at +-1e-16 relative; those count as zero.
  const double zero_tol = 1e-12 * std::max(e.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index c = 0; c < d; ++c) {
    const double lambda = e.eigenvalues(c);
    if (!(lambda > zero_tol)) {
      std::ostringstream os;
      os.precision(6);
      os << "mds: eigenvalue " << (c + 1) << " is non-positive (" << lambda << "); dimension " << (c + 1)
         << " set to zero";
      e.warnings.push_back(os.str());
      continue;
    }
    RealVector v = solver.eigenvectors().col(m - 1 - c);
    Eigen::Index pivot = 0;
    for (Eigen::Index i = 1; i < m; ++i) {
      if (std::abs(v(i)) > std::abs(v(pivot))) pivot = i;
    }
    if (v(pivot) < 0.0) v = -v;
    e.coords.col(c) = v * std::sqrt(lambda);
  }
  return e;
}

RealMatrix embedded_distances(const RealMatrix& coords) {
  const Eigen::Index m = coords.rows();
  RealMatrix d = RealMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      d(i, j) = (coords.row(i) - coords.row(j)).norm();
      d(j, i) = d(i, j);
    }
  }
  return d;
}

double stress(const DissimilarityMatrix& g, const Embedding& e) {
  if (g.size() != e.coords.rows()) throw std::invalid_argument("stress: size mismatch");
  const RealMatrix d = embedded_distances(e.coords);
  double num = 0.0;
  double den = 0.0;
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    for (Eigen::Index j = i + 1; j < g.size(); ++j) {
      const double diff = g.values(i, j) - d(i, j);
      num += diff * diff;
      den += g.values(i, j) * g.values(i, j);
    }
  }
  if (den == 0.0) return 0.0;
  return std::sqrt(num / den);
}

}  // namespace amifmds
