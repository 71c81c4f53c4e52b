#pragma once

// Brute-force DBSCAN reference: clusters are the connected components of the
// core points under the eps relation (closed ball, transitive closure by
// repeated relaxation). A border point joins the neighboring component whose
// lowest core index is smallest; components are numbered by that index.

#include <Eigen/Dense>

#include <algorithm>
#include <vector>

namespace oracle {

inline std::vector<int> dbscan(const Eigen::MatrixXd& pts, double eps, int min_pts) {
  const auto m = static_cast<int>(pts.rows());
  std::vector<std::vector<bool>> near(m, std::vector<bool>(m, false));
  std::vector<bool> core(m, false);
  for (int i = 0; i < m; ++i) {
    int count = 0;
    for (int j = 0; j < m; ++j) {
      near[i][j] = (pts.row(i) - pts.row(j)).norm() <= eps;
      count += near[i][j] ? 1 : 0;
    }
    core[i] = count >= min_pts;
  }
  // root[i]: smallest core index reachable from core i
  std::vector<int> root(m, -1);
  for (int i = 0; i < m; ++i)
    if (core[i]) root[i] = i;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < m; ++i) {
      if (!core[i]) continue;
      for (int j = 0; j < m; ++j) {
        if (core[j] && near[i][j] && root[j] < root[i]) {
          root[i] = root[j];
          changed = true;
        }
      }
    }
  }
  std::vector<int> owner(m, -1);
  for (int i = 0; i < m; ++i) {
    if (core[i]) {
      owner[i] = root[i];
      continue;
    }
    for (int j = 0; j < m; ++j)
      if (core[j] && near[i][j] && (owner[i] < 0 || root[j] < owner[i])) owner[i] = root[j];
  }
  std::vector<int> roots;
  for (int i = 0; i < m; ++i)
    if (owner[i] >= 0) roots.push_back(owner[i]);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::vector<int> labels(m, -1);
  for (int i = 0; i < m; ++i)
    if (owner[i] >= 0) labels[i] = static_cast<int>(std::lower_bound(roots.begin(), roots.end(), owner[i]) - roots.begin());
  return labels;
}

}  // namespace oracle
