#pragma once

#include "amifmds/matrix.hpp"

#include <string>
#include <vector>

namespace amifmds {

struct Embedding {
  std::vector<std::string> names;
  RealMatrix coords;        // M x d, columns by descending eigenvalue
  RealVector eigenvalues;   // all M eigenvalues of the centered Gram matrix, descending
  std::vector<std::string> warnings;

  Eigen::Index dimension() const { return coords.cols(); }
};

// B = -1/2 J (g o g) J, J = I - 11^T / M.
RealMatrix double_center(const RealMatrix& g);

// Classical (Torgerson) MDS. Eigenpairs among the top d with non-positive
// eigenvalue produce zero columns and a warning. Each eigenvector is signed
// so that its largest-magnitude component is positive.
Embedding classical_mds(const DissimilarityMatrix& g, Eigen::Index d);

// Pairwise Euclidean distances between embedding rows.
RealMatrix embedded_distances(const RealMatrix& coords);

// Kruskal stress-1 of the embedding against g; 0 when g is all zeros.
double stress(const DissimilarityMatrix& g, const Embedding& e);

}  // namespace amifmds
