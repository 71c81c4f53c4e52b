#pragma once

#include "amifmds/matrix.hpp"

#include <span>
#include <vector>

namespace amifmds {

inline constexpr int kNoise = -1;

struct ClusterAssignment {
  std::vector<int> labels;  // 0..C-1, kNoise for noise

  int cluster_count() const;
};

struct DbscanConfig {
  double eps = 0.15;
  int min_pts = 1;
};

// DBSCAN over the rows of points with the Euclidean metric. A point is core
// when at least min_pts points (itself included) lie within distance <= eps.
// Points are visited in ascending index order and cluster ids follow the
// order of discovery.
ClusterAssignment dbscan(const RealMatrix& points, const DbscanConfig& cfg);

double adjusted_rand_index(std::span<const int> a, std::span<const int> b);

}  // namespace amifmds
