#pragma once

#include "amifmds/matrix.hpp"

#include <vector>

namespace amifmds {

struct MiConfig {
  int k = 3;
  double distance_floor = 1e-12;
};

// Digamma for x >= 1: upward recurrence to x >= 10, then the asymptotic series.
double digamma(double x);

// Pairwise max-coordinate distances between the rows of a sample matrix.
class ChebyshevDistances {
 public:
  ChebyshevDistances() = default;
  explicit ChebyshevDistances(const RealMatrix& samples);

  Eigen::Index size() const { return n_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return d_[static_cast<std::size_t>(i * n_ + j)]; }
  const double* row(Eigen::Index i) const { return d_.data() + i * n_; }

 private:
  Eigen::Index n_ = 0;
  std::vector<double> d_;
};

// Kraskov-Stoegbauer-Grassberger estimator, first variant, in nats:
//   psi(k) + psi(n) - < psi(n_x + 1) + psi(n_y + 1) >
// with the k-th joint neighbor found under the max-norm of the concatenated
// space and marginal counts taken strictly inside that radius. k is clamped
// to n - 1. Not clamped at zero.
double ksg_estimate(const ChebyshevDistances& x, const ChebyshevDistances& y, const MiConfig& cfg);

// Same estimate clamped below at 0. Both overloads produce identical values
// for the same samples; the distance form lets callers reuse marginals.
double estimate_mi(const RealMatrix& x, const RealMatrix& y, const MiConfig& cfg = {});
double estimate_mi(const ChebyshevDistances& x, const ChebyshevDistances& y, const MiConfig& cfg = {});

}  // namespace amifmds
