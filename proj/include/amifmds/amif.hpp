#pragma once

#include "amifmds/matrix.hpp"
#include "amifmds/mi_knn.hpp"
#include "amifmds/series.hpp"
#include "amifmds/spectral.hpp"

#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace amifmds {

enum class Normalization {
  MeanFrequencyCount,  // raw / ((|freqs_a| + |freqs_b|) / 2)
  None,
};

std::string_view to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

struct AmifConfig {
  Eigen::Index n_f = 16;
  double q = 0.5;
  MiConfig mi;
  Normalization normalization = Normalization::MeanFrequencyCount;

  // Throws std::invalid_argument unless 0 < q <= 1, n_f >= 2, mi.k >= 1.
  void validate() const;
};

// Entry (i, j): MI between bin i of series a and bin j of series b.
using FreqMIMatrix = RealMatrix;

struct FrequencySelection {
  std::vector<Eigen::Index> freqs_a;  // ascending, distinct
  std::vector<Eigen::Index> freqs_b;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> cells;  // in selection order
};

FreqMIMatrix freq_mi_matrix(const SpectralTensor& a, const SpectralTensor& b, const MiConfig& mi);

// Keeps max(1, floor(q * n_f^2)) cells, highest value first, ties by
// ascending (row, col).
FrequencySelection select_top_q(const FreqMIMatrix& m, double q);

// Horizontal concatenation of freq_samples over freqs (ascending order).
RealMatrix aggregate(const SpectralTensor& t, std::span<const Eigen::Index> freqs);

double amif_score(const SpectralTensor& a, const SpectralTensor& b, const AmifConfig& cfg);

// Per-series spectra plus per-bin marginal distances, reused across every
// pair the series takes part in.
class SpectralCache {
 public:
  SpectralCache(const SpectralTensor& tensor);

  const SpectralTensor& tensor() const { return tensor_; }
  const ChebyshevDistances& bin_distances(Eigen::Index k) const { return bins_[static_cast<std::size_t>(k)]; }

 private:
  SpectralTensor tensor_;
  std::vector<ChebyshevDistances> bins_;
};

FreqMIMatrix freq_mi_matrix(const SpectralCache& a, const SpectralCache& b, const MiConfig& mi);
double amif_score(const SpectralCache& a, const SpectralCache& b, const AmifConfig& cfg);

// Scores every unordered pair once, mirrors it, and puts the sentinel on the
// diagonal. threads > 1 evaluates pairs concurrently with identical output.
SimilarityMatrix similarity_matrix(const SeriesTable& table, const AmifConfig& cfg, unsigned threads = 1);

// (s + s^T) / 2 off the diagonal, sentinel on the diagonal.
SimilarityMatrix refine(const SimilarityMatrix& s);

}  // namespace amifmds
