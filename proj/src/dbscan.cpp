#include "amifmds/dbscan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace amifmds {

int ClusterAssignment::cluster_count() const {
  int top = -1;
  for (int l : labels) top = std::max(top, l);
  return top + 1;
}

ClusterAssignment dbscan(const RealMatrix& points, const DbscanConfig& cfg) {
  if (!(cfg.eps > 0.0)) throw std::invalid_argument("dbscan: eps must be positive");
  if (cfg.min_pts < 1) throw std::invalid_argument("dbscan: min_pts must be >= 1");
  if (!points.allFinite()) throw std::invalid_argument("dbscan: non-finite coordinates");

  const Eigen::Index m = points.rows();
  const double eps2 = cfg.eps * cfg.eps;
  std::vector<std::vector<Eigen::Index>> neighbors(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if ((points.row(i) - points.row(j)).squaredNorm() <= eps2) neighbors[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  const auto is_core = [&](Eigen::Index i) {
    return static_cast<int>(neighbors[static_cast<std::size_t>(i)].size()) >= cfg.min_pts;
  };

  constexpr int kUnvisited = -2;
  ClusterAssignment out;
  out.labels.assign(static_cast<std::size_t>(m), kUnvisited);
  int cluster = 0;
  std::vector<Eigen::Index> frontier;
  for (Eigen::Index p = 0; p < m; ++p) {
    if (out.labels[static_cast<std::size_t>(p)] != kUnvisited) continue;
    if (!is_core(p)) {
      out.labels[static_cast<std::size_t>(p)] = kNoise;
      continue;
    }
    out.labels[static_cast<std::size_t>(p)] = cluster;
    frontier.assign(neighbors[static_cast<std::size_t>(p)].begin(), neighbors[static_cast<std::size_t>(p)].end());
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const Eigen::Index q = frontier[f];
      int& label = out.labels[static_cast<std::size_t>(q)];
      if (label == kNoise) label = cluster;  // border point
      if (label != kUnvisited) continue;
      label = cluster;
      if (is_core(q)) {
        const auto& nq = neighbors[static_cast<std::size_t>(q)];
        frontier.insert(frontier.end(), nq.begin(), nq.end());
      }
    }
    ++cluster;
  }
  return out;
}

namespace {

double choose2(double n) { return n * (n - 1.0) / 2.0; }

}  // namespace

double adjusted_rand_index(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("adjusted_rand_index: length mismatch (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  const auto n = static_cast<double>(a.size());
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> row;
  std::map<int, double> col;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1.0;
    row[a[i]] += 1.0;
    col[b[i]] += 1.0;
  }
  double index = 0.0;
  for (const auto& [_, c] : joint) index += choose2(c);
  double sum_a = 0.0;
  for (const auto& [_, c] : row) sum_a += choose2(c);
  double sum_b = 0.0;
  for (const auto& [_, c] : col) sum_b += choose2(c);

  const double total = choose2(n);
  if (total == 0.0) return 1.0;
  const double expected = sum_a * sum_b / total;
  const double max_index = 0.5 * (sum_a + sum_b);
  // Both partitions trivial in the same way (all singletons or one block).
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

}  // namespace amifmds
