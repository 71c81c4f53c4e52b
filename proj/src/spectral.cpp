#include "amifmds/spectral.hpp"

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace amifmds {

SpectralTensor segment_and_fft(std::span<const double> series, Eigen::Index n_f) {
  if (n_f < 1) throw std::invalid_argument("segment_and_fft: n_f must be positive");
  const auto t = static_cast<Eigen::Index>(series.size());
  if (t < 2 * n_f) {
    throw std::invalid_argument("segment_and_fft: series length " + std::to_string(t) +
                                " is shorter than two segments of " + std::to_string(n_f));
  }
  const Eigen::Index n_seg = t / n_f;

  // Twiddles indexed by (k * j) mod n_f keep every bin's phase exact to one rounding.
  std::vector<std::complex<double>> twiddle(static_cast<std::size_t>(n_f));
  for (Eigen::Index m = 0; m < n_f; ++m) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n_f);
    twiddle[static_cast<std::size_t>(m)] = {std::cos(angle), std::sin(angle)};
  }

  SpectralTensor out;
  out.coeffs.resize(n_seg, n_f);
  for (Eigen::Index s = 0; s < n_seg; ++s) {
    const double* seg = series.data() + s * n_f;
    for (Eigen::Index k = 0; k < n_f; ++k) {
      std::complex<double> acc{0.0, 0.0};
      for (Eigen::Index j = 0; j < n_f; ++j) acc += seg[j] * twiddle[static_cast<std::size_t>((k * j) % n_f)];
      out.coeffs(s, k) = acc;
    }
  }
  return out;
}

RealMatrix freq_samples(const SpectralTensor& tensor, Eigen::Index k) {
  if (k < 0 || k >= tensor.n_f()) {
    throw std::invalid_argument("freq_samples: bin " + std::to_string(k) + " outside [0, " +
                                std::to_string(tensor.n_f()) + ")");
  }
  RealMatrix out(tensor.n_seg(), 2);
  out.col(0) = tensor.coeffs.col(k).real();
  out.col(1) = tensor.coeffs.col(k).imag();
  return out;
}

}  // namespace amifmds
