#pragma once

#include <Eigen/Dense>

#include <limits>
#include <string>
#include <vector>

namespace amifmds {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Diagonal marker of a similarity matrix: self-information of a continuous
// variable is unbounded.
inline constexpr double kInfinitySentinel = std::numeric_limits<double>::infinity();

// Pairwise similarity scores between named series. Off-diagonal entries are
// nonnegative; the diagonal holds kInfinitySentinel.
struct SimilarityMatrix {
  std::vector<std::string> names;
  RealMatrix values;

  Eigen::Index size() const { return values.rows(); }
};

// Pairwise dissimilarities: symmetric, nonnegative, finite, zero diagonal.
struct DissimilarityMatrix {
  std::vector<std::string> names;
  RealMatrix values;

  Eigen::Index size() const { return values.rows(); }
};

// Names "s1".."sM" for matrices built without a table.
std::vector<std::string> default_names(Eigen::Index count);

}  // namespace amifmds
