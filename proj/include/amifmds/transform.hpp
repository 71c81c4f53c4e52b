#pragma once

#include "amifmds/matrix.hpp"

#include <string_view>

namespace amifmds {

enum class TransformKind { Membership, Logarithmic };

std::string_view to_string(TransformKind k);
TransformKind parse_transform(std::string_view text);

struct TransformConfig {
  TransformKind kind = TransformKind::Membership;
  double epsilon = 1e-9;
};

// Divides every finite entry by the largest finite off-diagonal entry.
SimilarityMatrix normalize_similarity(const SimilarityMatrix& s);

// g = 1 - s off the diagonal.
DissimilarityMatrix membership(const SimilarityMatrix& s_norm);

// g = max(0, -ln(s + epsilon)) off the diagonal.
DissimilarityMatrix logarithmic(const SimilarityMatrix& s_norm, double epsilon = 1e-9);

// normalize_similarity followed by the configured transform.
DissimilarityMatrix to_dissimilarity(const SimilarityMatrix& s, const TransformConfig& cfg);

}  // namespace amifmds
