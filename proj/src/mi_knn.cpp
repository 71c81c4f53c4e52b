#include "amifmds/mi_knn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace amifmds {

double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: argument must be positive");
  double result = 0.0;
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli-number series; truncation error below 1e-12 for x >= 10.
  const double series =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
  return result + std::log(x) - 0.5 * inv - series;
}

ChebyshevDistances::ChebyshevDistances(const RealMatrix& samples)
    : n_(samples.rows()), d_(static_cast<std::size_t>(samples.rows() * samples.rows()), 0.0) {
  const RealMatrix rows = samples.transpose();  // column per sample for contiguous access
  const Eigen::Index p = rows.rows();
  for (Eigen::Index i = 0; i < n_; ++i) {
    const double* a = rows.col(i).data();
    for (Eigen::Index j = i + 1; j < n_; ++j) {
      const double* b = rows.col(j).data();
      double m = 0.0;
      for (Eigen::Index c = 0; c < p; ++c) m = std::max(m, std::abs(a[c] - b[c]));
      d_[static_cast<std::size_t>(i * n_ + j)] = m;
      d_[static_cast<std::size_t>(j * n_ + i)] = m;
    }
  }
}

double ksg_estimate(const ChebyshevDistances& x, const ChebyshevDistances& y, const MiConfig& cfg) {
  const Eigen::Index n = x.size();
  if (y.size() != n) {
    throw std::invalid_argument("estimate_mi: row counts differ (" + std::to_string(n) + " vs " +
                                std::to_string(y.size()) + ")");
  }
  if (n < 2) throw std::invalid_argument("estimate_mi: need at least 2 samples");
  if (cfg.k < 1) throw std::invalid_argument("estimate_mi: k must be >= 1");
  if (!(cfg.distance_floor > 0.0)) throw std::invalid_argument("estimate_mi: distance_floor must be positive");

  const Eigen::Index k = std::min<Eigen::Index>(cfg.k, n - 1);

  thread_local std::vector<double> psi{0.0};
  while (psi.size() <= static_cast<std::size_t>(n)) psi.push_back(digamma(static_cast<double>(psi.size())));

  // k smallest joint distances per row, kept sorted by insertion
  std::vector<double> nearest(static_cast<std::size_t>(k));
  double marginal_sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double* xi = x.row(i);
    const double* yi = y.row(i);
    std::size_t filled = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = std::max(xi[j], yi[j]);
      if (filled < nearest.size()) {
        std::size_t pos = filled++;
        for (; pos > 0 && nearest[pos - 1] > d; --pos) nearest[pos] = nearest[pos - 1];
        nearest[pos] = d;
      } else if (d < nearest.back()) {
        std::size_t pos = nearest.size() - 1;
        for (; pos > 0 && nearest[pos - 1] > d; --pos) nearest[pos] = nearest[pos - 1];
        nearest[pos] = d;
      }
    }
    const double eps = std::max(nearest.back(), cfg.distance_floor);

    // the diagonal is zero and always counted, hence the -1
    Eigen::Index nx = -1;
    Eigen::Index ny = -1;
    for (Eigen::Index j = 0; j < n; ++j) {
      nx += xi[j] < eps;
      ny += yi[j] < eps;
    }
    marginal_sum += psi[static_cast<std::size_t>(nx + 1)] + psi[static_cast<std::size_t>(ny + 1)];
  }
  return psi[static_cast<std::size_t>(k)] + psi[static_cast<std::size_t>(n)] - marginal_sum / static_cast<double>(n);
}

double estimate_mi(const ChebyshevDistances& x, const ChebyshevDistances& y, const MiConfig& cfg) {
  return std::max(0.0, ksg_estimate(x, y, cfg));
}

double estimate_mi(const RealMatrix& x, const RealMatrix& y, const MiConfig& cfg) {
  if (x.rows() != y.rows()) {
    throw std::invalid_argument("estimate_mi: row counts differ (" + std::to_string(x.rows()) + " vs " +
                                std::to_string(y.rows()) + ")");
  }
  if (x.rows() < 2) throw std::invalid_argument("estimate_mi: need at least 2 samples");
  if (x.cols() < 1 || y.cols() < 1) throw std::invalid_argument("estimate_mi: empty sample dimension");
  if (!x.allFinite() || !y.allFinite()) throw std::invalid_argument("estimate_mi: non-finite samples");
  return estimate_mi(ChebyshevDistances(x), ChebyshevDistances(y), cfg);
}

}  // namespace amifmds
