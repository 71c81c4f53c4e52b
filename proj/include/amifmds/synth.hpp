#pragma once

#include "amifmds/series.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace amifmds {

struct SynthConfig {
  Eigen::Index length = 2048;
  Eigen::Index n_parents = 8;
  double trend_scale = 1e-3;
  std::uint64_t seed = 0;
  // Test hook: skip the final per-column standardization.
  bool standardize = true;
  // Keep AR draws whose characteristic roots reach the unit circle. Such
  // parents grow geometrically (|x| ~ 1e27 at T = 2048), so by default the
  // family is redrawn from its next substream instead.
  bool allow_nonstationary = false;

  void validate() const;
};

struct SynthResult {
  SeriesTable table;   // columns x1, y1, x2, y2, ...
  LabelVector labels;  // 1, 1, 2, 2, ...
  std::vector<std::string> warnings;
};

// True when x_t = c0 x_{t-1} + c1 x_{t-2} + c2 x_{t-3} + e_t is stationary
// (all characteristic roots strictly inside the unit circle).
bool is_stationary(const std::array<double, 3>& coeffs);

// Parent AR(3) processes with random linear trends and their element-wise
// squares. Per family the draw order is a1, a2, a3, noise[0..T), slope, all
// from a substream keyed by family index (and regeneration attempt).
SynthResult generate(const SynthConfig& cfg);

}  // namespace amifmds
