#pragma once

#include "amifmds/matrix.hpp"

#include <complex>
#include <span>

namespace amifmds {

// Segment-by-frequency DFT coefficients of one series.
struct SpectralTensor {
  Eigen::MatrixXcd coeffs;  // n_seg x n_f

  Eigen::Index n_seg() const { return coeffs.rows(); }
  Eigen::Index n_f() const { return coeffs.cols(); }
};

// Splits the series into floor(T / n_f) non-overlapping rectangular segments
// (remainder discarded) and stores the unnormalized n_f-point DFT of each.
// Requires T >= 2 * n_f.
SpectralTensor segment_and_fft(std::span<const double> series, Eigen::Index n_f);

// n_seg x 2 matrix: real parts of bin k in column 0, imaginary parts in column 1.
RealMatrix freq_samples(const SpectralTensor& tensor, Eigen::Index k);

}  // namespace amifmds
