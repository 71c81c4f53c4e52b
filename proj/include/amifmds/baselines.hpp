#pragma once

#include "amifmds/matrix.hpp"
#include "amifmds/series.hpp"

#include <cstddef>
#include <span>
#include <string_view>

namespace amifmds {

enum class BaselineMetric { Macc, Maccoeff };

std::string_view to_string(BaselineMetric m);

// min(T - 1, T / 4)
std::size_t default_max_lag(std::size_t length);

struct LaggedCorrelation {
  double value = 0.0;  // max |r(lag)|
  long lag = 0;        // argmax; earliest lag from -max_lag wins ties
};

// Maximum absolute cross-correlation over lags in [-max_lag, max_lag] with
// zero padding, normalized by T and the population standard deviations.
LaggedCorrelation max_abs_cross_correlation(std::span<const double> x, std::span<const double> y,
                                            std::size_t max_lag);
double macc(std::span<const double> x, std::span<const double> y, std::size_t max_lag);

// |Pearson correlation| at lag 0.
double maccoeff(std::span<const double> x, std::span<const double> y);

SimilarityMatrix baseline_similarity_matrix(const SeriesTable& table, BaselineMetric metric,
                                            std::size_t max_lag, unsigned threads = 1);

// L2 norm of column differences; zero diagonal.
DissimilarityMatrix euclidean_dissim(const SeriesTable& table);

}  // namespace amifmds
