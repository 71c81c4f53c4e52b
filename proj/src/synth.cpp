#include "amifmds/synth.hpp"

#include "amifmds/errors.hpp"
#include "amifmds/rng.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace amifmds {

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& word : s_) word = sm.next();
}

Xoshiro256 Xoshiro256::substream(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
  return Xoshiro256(mix.next());
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Xoshiro256::normal() {
  for (;;) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

void SynthConfig::validate() const {
  if (length < 8) throw std::invalid_argument("synth: length must be >= 8");
  if (n_parents < 1) throw std::invalid_argument("synth: need at least one parent process");
  if (!(trend_scale >= 0.0) || !std::isfinite(trend_scale)) throw std::invalid_argument("synth: trend scale must be finite and >= 0");
}

namespace {

constexpr int kMaxAttempts = 64;

bool has_variance(const RealVector& v) {
  return (v.array() - v.mean()).square().sum() > 0.0;
}

}  // namespace

bool is_stationary(const std::array<double, 3>& coeffs) {
  // Step-down recursion: stationary iff every reflection coefficient has
  // magnitude below one.
  std::vector<double> phi(coeffs.begin(), coeffs.end());
  while (!phi.empty()) {
    const std::size_t p = phi.size();
    const double k = phi[p - 1];
    if (!(std::abs(k) < 1.0)) return false;
    std::vector<double> next(p - 1);
    for (std::size_t i = 0; i + 1 < p; ++i) next[i] = (phi[i] + k * phi[p - 2 - i]) / (1.0 - k * k);
    phi = std::move(next);
  }
  return true;
}

namespace {

// One parent/child family drawn from its own substream. Returns the AR
// coefficients.
std::array<double, 3> draw_family(Xoshiro256& rng, Eigen::Index length, double trend_scale, RealVector& parent,
                                  RealVector& child) {
  const double a1 = rng.uniform(-0.5, 0.5);
  const double a2 = rng.uniform(-0.5, 0.5);
  const double a3 = rng.uniform(-0.5, 0.5);
  RealVector noise(length);
  for (Eigen::Index t = 0; t < length; ++t) noise(t) = rng.normal();

  parent.resize(length);
  for (Eigen::Index t = 0; t < length; ++t) {
    if (t < 3) {
      parent(t) = noise(t);
    } else {
      parent(t) = a1 * parent(t - 1) + a2 * parent(t - 2) + a3 * parent(t - 3) + noise(t);
    }
  }

  const double slope = rng.uniform(-trend_scale, trend_scale);
  for (Eigen::Index t = 0; t < length; ++t) parent(t) += slope * static_cast<double>(t + 1);
  child = parent.array().square().matrix();
  return {a1, a2, a3};
}

}  // namespace

SynthResult generate(const SynthConfig& cfg) {
  cfg.validate();
  SynthResult out;
  const Eigen::Index m = 2 * cfg.n_parents;
  out.table.values.resize(cfg.length, m);
  out.table.names.reserve(static_cast<std::size_t>(m));
  out.labels.labels.reserve(static_cast<std::size_t>(m));

  for (Eigen::Index p = 0; p < cfg.n_parents; ++p) {
    RealVector parent;
    RealVector child;
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxAttempts) {
        throw NumericalError("synth: family " + std::to_string(p + 1) + " degenerate after " +
                             std::to_string(kMaxAttempts) + " attempts");
      }
      const auto stream = (static_cast<std::uint64_t>(attempt) << 32) | static_cast<std::uint64_t>(p);
      Xoshiro256 rng = Xoshiro256::substream(cfg.seed, stream);
      const auto coeffs = draw_family(rng, cfg.length, cfg.trend_scale, parent, child);
      const bool usable = parent.allFinite() && child.allFinite() && has_variance(parent) && has_variance(child);
      if (usable && (cfg.allow_nonstationary || is_stationary(coeffs))) break;
    }
    if (attempt > 0) {
      out.warnings.push_back("synth: family " + std::to_string(p + 1) + " regenerated " + std::to_string(attempt) +
                             " time(s) after a degenerate or non-stationary draw");
    }
    out.table.values.col(2 * p) = parent;
    out.table.values.col(2 * p + 1) = child;
    out.table.names.push_back("x" + std::to_string(p + 1));
    out.table.names.push_back("y" + std::to_string(p + 1));
    out.labels.labels.push_back(static_cast<int>(p + 1));
    out.labels.labels.push_back(static_cast<int>(p + 1));
  }

  if (cfg.standardize) out.table = standardize(out.table);
  return out;
}

}  // namespace amifmds
