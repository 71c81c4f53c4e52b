#include "amifmds/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace amifmds;

TEST_CASE("segment count discards the remainder") {
  std::vector<double> x(36, 1.0);
  CHECK(segment_and_fft(x, 9).n_seg() == 4);
  x.resize(40);
  CHECK(segment_and_fft(x, 9).n_seg() == 4);
  CHECK(segment_and_fft(x, 9).n_f() == 9);
}

TEST_CASE("too short a series is rejected") {
  std::vector<double> x(17, 0.0);
  CHECK_THROWS_AS(segment_and_fft(x, 9), std::invalid_argument);
}

TEST_CASE("cosine concentrates in its bin and the mirror bin") {
  std::vector<double> x(32);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = std::cos(2.0 * std::numbers::pi * 2.0 * static_cast<double>(j) / 16.0);
  const auto t = segment_and_fft(x, 16);
  for (Eigen::Index s = 0; s < t.n_seg(); ++s) {
    for (Eigen::Index k = 0; k < 16; ++k) {
      const double expect = (k == 2 || k == 14) ? 8.0 : 0.0;
      CHECK(std::abs(t.coeffs(s, k)) == doctest::Approx(expect).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("matches a reference DFT") {
  std::vector<double> x(16);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = 0.5 * static_cast<double>(j) - 0.01 * static_cast<double>(j * j);
  const auto t = segment_and_fft(x, 8);
  // numpy.fft.fft on the first 8 samples
  CHECK(t.coeffs(0, 1).real() == doctest::Approx(-1.9531370849898477).epsilon(1e-13));
  CHECK(t.coeffs(0, 1).imag() == doctest::Approx(4.0558787847868).epsilon(1e-13));
  CHECK(t.coeffs(0, 3).real() == doctest::Approx(-1.7268629150101524).epsilon(1e-13));
  CHECK(t.coeffs(0, 3).imag() == doctest::Approx(0.6958787847867995).epsilon(1e-13));
}

TEST_CASE("Parseval and conjugate symmetry hold per segment") {
  std::vector<double> x(64);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = std::sin(0.37 * static_cast<double>(j * j % 23)) + 0.1 * static_cast<double>(j % 5);
  const Eigen::Index nf = 16;
  const auto t = segment_and_fft(x, nf);
  for (Eigen::Index s = 0; s < t.n_seg(); ++s) {
    double time_energy = 0.0;
    for (Eigen::Index j = 0; j < nf; ++j) time_energy += x[static_cast<std::size_t>(s * nf + j)] * x[static_cast<std::size_t>(s * nf + j)];
    double freq_energy = 0.0;
    for (Eigen::Index k = 0; k < nf; ++k) {
      freq_energy += std::norm(t.coeffs(s, k));
      const auto mirror = t.coeffs(s, (nf - k) % nf);
      CHECK(std::abs(t.coeffs(s, k) - std::conj(mirror)) < 1e-12);
    }
    CHECK(freq_energy / static_cast<double>(nf) == doctest::Approx(time_energy).epsilon(1e-12));
  }
}

TEST_CASE("freq_samples splits real and imaginary parts") {
  std::vector<double> x(32);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = static_cast<double>(j % 7);
  const auto t = segment_and_fft(x, 8);
  const auto f = freq_samples(t, 3);
  REQUIRE(f.rows() == 4);
  REQUIRE(f.cols() == 2);
  for (Eigen::Index s = 0; s < 4; ++s) {
    CHECK(f(s, 0) == t.coeffs(s, 3).real());
    CHECK(f(s, 1) == t.coeffs(s, 3).imag());
  }
  CHECK_THROWS_AS(freq_samples(t, 8), std::invalid_argument);
}
