#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eegswt/psd.hpp"
#include "eegswt/resample.hpp"
#include "test_support.hpp"

using namespace eegswt;

TEST_CASE("rate ratios in lowest terms") {
  const auto r = rational_ratio(2500.0, 2048.0);
  CHECK(r.up == 512);
  CHECK(r.down == 625);
  const auto same = rational_ratio(1000.0, 1000.0);
  CHECK(same.up == 1);
  CHECK(same.down == 1);
  const auto half = rational_ratio(1000.0, 500.0);
  CHECK(half.up == 1);
  CHECK(half.down == 2);
  const auto frac = rational_ratio(2.5, 10.0);
  CHECK(frac.up == 4);
  CHECK(frac.down == 1);
}

TEST_CASE("output length") {
  const std::vector<double> x(25000, 0.0);
  CHECK(resample(x, 2500.0, 2048.0).size() == 20480);
  CHECK(resample(std::vector<double>(1001, 0.0), 1000.0, 500.0).size() == 501);
  CHECK(resample(std::vector<double>(100, 0.0), 1000.0, 3000.0).size() == 300);
}

TEST_CASE("same rate is the identity") {
  const auto x = oracle::random_signal(777, 4);
  CHECK(resample(x, 1000.0, 1000.0) == x);
}

TEST_CASE("a 10 Hz tone keeps its frequency through 2500 -> 2048") {
  const auto x = oracle::tone(10.0, 2500.0, 25000);
  const auto y = resample(x, 2500.0, 2048.0);
  const auto psd = welch_psd(y, 2048.0);
  const double peak_hz = psd.frequencies[psd.peak_bin()];
  CHECK(std::abs(peak_hz - 10.0) <= psd.resolution());
  // Brute-force periodogram of the whole output as a second opinion.
  CHECK(std::abs(oracle::periodogram_peak_hz(y, 2048.0, 20.0) - 10.0) <= 2048.0 / static_cast<double>(y.size()));
}

TEST_CASE("tone amplitude survives resampling away from the edges") {
  const auto x = oracle::tone(40.0, 2500.0, 12500, 1.0, 0.3);
  const auto y = resample(x, 2500.0, 2048.0);
  const auto expected = oracle::tone(40.0, 2048.0, y.size(), 1.0, 0.3);
  double worst = 0.0;
  for (std::size_t i = 500; i + 500 < y.size(); ++i) worst = std::max(worst, std::abs(y[i] - expected[i]));
  CHECK(worst < 1e-3);
}

TEST_CASE("content above the new Nyquist is suppressed") {
  const auto x = oracle::tone(1240.0, 2500.0, 25000);
  const auto y = resample(x, 2500.0, 2048.0);
  double energy = 0.0;
  for (std::size_t i = 500; i + 500 < y.size(); ++i) energy += y[i] * y[i];
  const double rms = std::sqrt(energy / static_cast<double>(y.size() - 1000));
  CHECK(rms < 1e-3);
}

TEST_CASE("invalid rates") {
  const std::vector<double> x(10, 1.0);
  CHECK_THROWS_AS(resample(x, 0.0, 100.0), std::invalid_argument);
  CHECK_THROWS_AS(resample(x, 100.0, -1.0), std::invalid_argument);
}
