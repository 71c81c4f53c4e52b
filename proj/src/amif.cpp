#include "amifmds/amif.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace amifmds {

std::string_view to_string(Normalization n) {
  switch (n) {
    case Normalization::MeanFrequencyCount: return "mean-frequency-count";
    case Normalization::None: return "none";
  }
  return "?";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "mean-frequency-count") return Normalization::MeanFrequencyCount;
  if (text == "none") return Normalization::None;
  throw std::invalid_argument("unknown normalization '" + std::string(text) + "'");
}

void AmifConfig::validate() const {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("amif: q must lie in (0, 1], got " + std::to_string(q));
  if (n_f < 2) throw std::invalid_argument("amif: n_f must be >= 2");
  if (mi.k < 1) throw std::invalid_argument("amif: k must be >= 1");
  if (!(mi.distance_floor > 0.0)) throw std::invalid_argument("amif: distance_floor must be positive");
}

namespace {

void check_compatible(const SpectralTensor& a, const SpectralTensor& b) {
  if (a.n_seg() != b.n_seg() || a.n_f() != b.n_f()) {
    throw std::invalid_argument("amif: spectral shapes differ (" + std::to_string(a.n_seg()) + "x" +
                                std::to_string(a.n_f()) + " vs " + std::to_string(b.n_seg()) + "x" +
                                std::to_string(b.n_f()) + ")");
  }
}

double normalize_score(double raw, const FrequencySelection& sel, Normalization n) {
  if (n == Normalization::None) return raw;
  const double mean_count = 0.5 * static_cast<double>(sel.freqs_a.size() + sel.freqs_b.size());
  return raw / mean_count;
}

}  // namespace

SpectralCache::SpectralCache(const SpectralTensor& tensor) : tensor_(tensor) {
  bins_.reserve(static_cast<std::size_t>(tensor.n_f()));
  for (Eigen::Index k = 0; k < tensor.n_f(); ++k) bins_.emplace_back(freq_samples(tensor, k));
}

FreqMIMatrix freq_mi_matrix(const SpectralCache& a, const SpectralCache& b, const MiConfig& mi) {
  check_compatible(a.tensor(), b.tensor());
  const Eigen::Index n_f = a.tensor().n_f();
  FreqMIMatrix m(n_f, n_f);
  for (Eigen::Index i = 0; i < n_f; ++i) {
    for (Eigen::Index j = 0; j < n_f; ++j) m(i, j) = estimate_mi(a.bin_distances(i), b.bin_distances(j), mi);
  }
  return m;
}

FreqMIMatrix freq_mi_matrix(const SpectralTensor& a, const SpectralTensor& b, const MiConfig& mi) {
  check_compatible(a, b);
  return freq_mi_matrix(SpectralCache(a), SpectralCache(b), mi);
}

FrequencySelection select_top_q(const FreqMIMatrix& m, double q) {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("select_top_q: q must lie in (0, 1]");
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("select_top_q: empty matrix");

  const Eigen::Index total = m.rows() * m.cols();
  const auto count = std::max<Eigen::Index>(
      1, static_cast<Eigen::Index>(std::floor(q * static_cast<double>(total))));

  // Flat index r * cols + c orders ties by ascending (row, col).
  std::vector<Eigen::Index> order(static_cast<std::size_t>(total));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const auto value = [&](Eigen::Index flat) { return m(flat / m.cols(), flat % m.cols()); };
  std::partial_sort(order.begin(), order.begin() + std::min(count, total), order.end(),
                    [&](Eigen::Index l, Eigen::Index r) {
                      const double vl = value(l);
                      const double vr = value(r);
                      if (vl != vr) return vl > vr;
                      return l < r;
                    });

  FrequencySelection sel;
  std::vector<bool> row_used(static_cast<std::size_t>(m.rows()), false);
  std::vector<bool> col_used(static_cast<std::size_t>(m.cols()), false);
  for (Eigen::Index i = 0; i < std::min(count, total); ++i) {
    const Eigen::Index r = order[static_cast<std::size_t>(i)] / m.cols();
    const Eigen::Index c = order[static_cast<std::size_t>(i)] % m.cols();
    sel.cells.emplace_back(r, c);
    row_used[static_cast<std::size_t>(r)] = true;
    col_used[static_cast<std::size_t>(c)] = true;
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (row_used[static_cast<std::size_t>(r)]) sel.freqs_a.push_back(r);
  }
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (col_used[static_cast<std::size_t>(c)]) sel.freqs_b.push_back(c);
  }
  return sel;
}

RealMatrix aggregate(const SpectralTensor& t, std::span<const Eigen::Index> freqs) {
  if (freqs.empty()) throw std::invalid_argument("aggregate: empty frequency set");
  std::vector<Eigen::Index> sorted(freqs.begin(), freqs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  RealMatrix out(t.n_seg(), 2 * static_cast<Eigen::Index>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out.middleCols(2 * static_cast<Eigen::Index>(i), 2) = freq_samples(t, sorted[i]);
  }
  return out;
}

double amif_score(const SpectralCache& a, const SpectralCache& b, const AmifConfig& cfg) {
  cfg.validate();
  const FreqMIMatrix m = freq_mi_matrix(a, b, cfg.mi);
  const FrequencySelection sel = select_top_q(m, cfg.q);
  const double raw = estimate_mi(aggregate(a.tensor(), sel.freqs_a), aggregate(b.tensor(), sel.freqs_b), cfg.mi);
  return normalize_score(raw, sel, cfg.normalization);
}

double amif_score(const SpectralTensor& a, const SpectralTensor& b, const AmifConfig& cfg) {
  check_compatible(a, b);
  return amif_score(SpectralCache(a), SpectralCache(b), cfg);
}

SimilarityMatrix similarity_matrix(const SeriesTable& table, const AmifConfig& cfg, unsigned threads) {
  cfg.validate();
  table.validate();
  const Eigen::Index m = table.count();
  if (m < 2) throw std::invalid_argument("similarity_matrix: need at least 2 series");

  std::vector<std::unique_ptr<SpectralCache>> caches(static_cast<std::size_t>(m));
  detail::parallel_for(static_cast<std::size_t>(m), threads, [&](std::size_t c) {
    const auto col = table.values.col(static_cast<Eigen::Index>(c));
    caches[c] = std::make_unique<SpectralCache>(
        segment_and_fft(std::span<const double>(col.data(), static_cast<std::size_t>(col.size())), cfg.n_f));
  });

  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> scores(pairs.size());
  detail::parallel_for(pairs.size(), threads, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    scores[p] = amif_score(*caches[static_cast<std::size_t>(i)], *caches[static_cast<std::size_t>(j)], cfg);
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

SimilarityMatrix refine(const SimilarityMatrix& s) {
  if (s.values.rows() != s.values.cols()) throw std::invalid_argument("refine: matrix is not square");
  const Eigen::Index m = s.values.rows();
  SimilarityMatrix out{s.names, RealMatrix(m, m)};
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i == j) {
        out.values(i, j) = kInfinitySentinel;
        continue;
      }
      const double a = s.values(i, j);
      const double b = s.values(j, i);
      if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("refine: non-finite off-diagonal entry");
      out.values(i, j) = 0.5 * (a + b);
    }
  }
  return out;
}

}  // namespace amifmds
