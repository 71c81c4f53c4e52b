#include "amifmds/transform.hpp"

#include "amifmds/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace amifmds {

std::string_view to_string(TransformKind k) {
  switch (k) {
    case TransformKind::Membership: return "membership";
    case TransformKind::Logarithmic: return "logarithmic";
  }
  return "?";
}

TransformKind parse_transform(std::string_view text) {
  if (text == "membership") return TransformKind::Membership;
  if (text == "logarithmic" || text == "log") return TransformKind::Logarithmic;
  throw std::invalid_argument("unknown transform '" + std::string(text) + "'");
}

namespace {

void check_square(const RealMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

template <typename Fn>
DissimilarityMatrix map_off_diagonal(const SimilarityMatrix& s, const char* what, Fn&& fn) {
  check_square(s.values, what);
  const Eigen::Index m = s.size();
  DissimilarityMatrix g{s.names, RealMatrix::Zero(m, m)};
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i == j) continue;
      const double v = s.values(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(what) + ": normalized similarity " + std::to_string(v) +
                                    " outside [0, 1]");
      }
      g.values(i, j) = fn(v);
    }
  }
  return g;
}

}  // namespace

SimilarityMatrix normalize_similarity(const SimilarityMatrix& s) {
  check_square(s.values, "normalize_similarity");
  const Eigen::Index m = s.size();
  double max_off = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i != j && std::isfinite(s.values(i, j))) max_off = std::max(max_off, s.values(i, j));
    }
  }
  if (!(max_off > 0.0)) throw NumericalError("normalize_similarity: no positive off-diagonal similarity");

  SimilarityMatrix out = s;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (std::isfinite(out.values(i, j))) out.values(i, j) /= max_off;
    }
  }
  return out;
}

DissimilarityMatrix membership(const SimilarityMatrix& s_norm) {
  return map_off_diagonal(s_norm, "membership", [](double v) { return 1.0 - v; });
}

DissimilarityMatrix logarithmic(const SimilarityMatrix& s_norm, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("logarithmic: epsilon must be positive");
  return map_off_diagonal(s_norm, "logarithmic", [epsilon](double v) { return std::max(0.0, -std::log(v + epsilon)); });
}

DissimilarityMatrix to_dissimilarity(const SimilarityMatrix& s, const TransformConfig& cfg) {
  const SimilarityMatrix norm = normalize_similarity(s);
  return cfg.kind == TransformKind::Membership ? membership(norm) : logarithmic(norm, cfg.epsilon);
}

}  // namespace amifmds
