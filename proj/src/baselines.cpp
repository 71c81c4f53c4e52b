#include "amifmds/baselines.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace amifmds {

std::string_view to_string(BaselineMetric m) {
  switch (m) {
    case BaselineMetric::Macc: return "macc";
    case BaselineMetric::Maccoeff: return "maccoeff";
  }
  return "?";
}

std::size_t default_max_lag(std::size_t length) {
  if (length == 0) return 0;
  return std::min(length - 1, length / 4);
}

namespace {

struct Centered {
  std::vector<double> values;
  double sigma = 0.0;
};

Centered center(std::span<const double> v, const char* which) {
  Centered c;
  const double n = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  c.values.reserve(v.size());
  double ss = 0.0;
  for (double x : v) {
    c.values.push_back(x - mean);
    ss += (x - mean) * (x - mean);
  }
  c.sigma = std::sqrt(ss / n);
  if (!(c.sigma > 0.0)) throw std::invalid_argument(std::string("correlation: ") + which + " has zero variance");
  return c;
}

void check_lengths(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("correlation: length mismatch (" + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()) + ")");
  }
  if (x.empty()) throw std::invalid_argument("correlation: empty series");
}

}  // namespace

LaggedCorrelation max_abs_cross_correlation(std::span<const double> x, std::span<const double> y,
                                            std::size_t max_lag) {
  check_lengths(x, y);
  if (max_lag >= x.size()) throw std::invalid_argument("macc: max_lag must be smaller than the series length");
  const Centered cx = center(x, "x");
  const Centered cy = center(y, "y");
  const auto t = static_cast<long>(x.size());
  const double scale = static_cast<double>(t) * cx.sigma * cy.sigma;

  LaggedCorrelation best;
  best.value = -1.0;
  const auto lag_max = static_cast<long>(max_lag);
  for (long lag = -lag_max; lag <= lag_max; ++lag) {
    const long lo = std::max(0L, -lag);
    const long hi = std::min(t, t - lag);
    double acc = 0.0;
    for (long i = lo; i < hi; ++i) acc += cx.values[static_cast<std::size_t>(i)] * cy.values[static_cast<std::size_t>(i + lag)];
    const double r = std::abs(acc / scale);
    if (r > best.value) {
      best.value = r;
      best.lag = lag;
    }
  }
  best.value = std::min(best.value, 1.0);
  return best;
}

double macc(std::span<const double> x, std::span<const double> y, std::size_t max_lag) {
  return max_abs_cross_correlation(x, y, max_lag).value;
}

double maccoeff(std::span<const double> x, std::span<const double> y) {
  return macc(x, y, 0);
}

SimilarityMatrix baseline_similarity_matrix(const SeriesTable& table, BaselineMetric metric, std::size_t max_lag,
                                            unsigned threads) {
  table.validate();
  const Eigen::Index m = table.count();
  if (m < 2) throw std::invalid_argument("baseline_similarity_matrix: need at least 2 series");
  const auto column = [&](Eigen::Index c) {
    return std::span<const double>(table.values.col(c).data(), static_cast<std::size_t>(table.length()));
  };

  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> scores(pairs.size());
  detail::parallel_for(pairs.size(), threads, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    scores[p] = metric == BaselineMetric::Macc ? macc(column(i), column(j), max_lag) : maccoeff(column(i), column(j));
  });

  SimilarityMatrix s{table.names, RealMatrix(m, m)};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    s.values(i, j) = scores[p];
    s.values(j, i) = scores[p];
  }
  s.values.diagonal().setConstant(kInfinitySentinel);
  return s;
}

DissimilarityMatrix euclidean_dissim(const SeriesTable& table) {
  table.validate();
  const Eigen::Index m = table.count();
  DissimilarityMatrix g{table.names, RealMatrix::Zero(m, m)};
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double d = (table.values.col(i) - table.values.col(j)).norm();
      g.values(i, j) = d;
      g.values(j, i) = d;
    }
  }
  return g;
}

}  // namespace amifmds
