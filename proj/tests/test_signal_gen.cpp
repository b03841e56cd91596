#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "eegswt/psd.hpp"
#include "eegswt/signal_gen.hpp"
#include "test_support.hpp"

using namespace eegswt;

namespace {

double realized_snr_db(const SyntheticTrial& t) {
  return 10.0 * std::log10(mean_power(t.clean) / mean_power(t.noise));
}

// Log-log slope of the Welch PSD between 2 Hz and fs/4.
double pink_slope(const std::vector<double>& x, double fs) {
  const auto psd = welch_psd(x, fs, WelchParams{1024, 0.5});
  std::vector<double> lf, lp;
  for (std::size_t k = 0; k < psd.frequencies.size(); ++k) {
    const double f = psd.frequencies[k];
    if (f < 2.0 || f > fs / 4.0) continue;
    lf.push_back(std::log10(f));
    lp.push_back(std::log10(psd.power[k]));
  }
  return oracle::ls_slope(lf, lp);
}

}  // namespace

TEST_CASE("burst occupies the centred 400 ms of an 800 ms window") {
  const auto b = make_burst(10.0, 1000.0, 800.0, 400.0, 42);
  REQUIRE(b.size() == 800);
  for (std::size_t i = 0; i < 800; ++i) {
    if (i < 200 || i >= 600) {
      CHECK(b[i] == 0.0);
    }
  }
  double inside = 0.0;
  for (std::size_t i = 200; i < 600; ++i) inside += b[i] * b[i];
  CHECK(inside > 0.0);
}

TEST_CASE("a 3 Hz burst holds 1.2 cycles") {
  const auto b = make_burst(3.0, 1000.0, 800.0, 400.0, 9, Taper::rectangular);
  // Count zero crossings of the burst: 1.2 cycles give 2 or 3 crossings.
  int crossings = 0;
  for (std::size_t i = 201; i < 600; ++i) {
    if ((b[i - 1] < 0.0) != (b[i] < 0.0)) ++crossings;
  }
  CHECK(crossings >= 2);
  CHECK(crossings <= 3);
}

TEST_CASE("full-window rectangular burst is a unit tone") {
  const auto b = make_burst(10.0, 1000.0, 800.0, 800.0, 3, Taper::rectangular);
  double peak = 0.0;
  for (double v : b) peak = std::max(peak, std::abs(v));
  CHECK(peak <= 1.0);
  CHECK(peak > 0.999);
  for (double v : b) CHECK(v != 0.0);
}

TEST_CASE("burst preconditions") {
  CHECK_THROWS_AS(make_burst(10.0, 1000.0, 400.0, 800.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_burst(600.0, 1000.0, 800.0, 400.0, 1), std::invalid_argument);
}

TEST_CASE("pink noise slope") {
  double lo = 0.0, hi = -2.0, sum = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const double s = pink_slope(pink_noise(8192, seed), 1000.0);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
    sum += s;
  }
  MESSAGE("mean slope " << sum / 50.0 << ", range [" << lo << ", " << hi << "]");
  CHECK(sum / 50.0 >= -1.2);
  CHECK(sum / 50.0 <= -0.8);
  CHECK(lo >= -1.2);
  CHECK(hi <= -0.8);
}

TEST_CASE("pink noise is deterministic, unit RMS and near zero mean") {
  const auto a = pink_noise(8192, 123);
  CHECK(a == pink_noise(8192, 123));
  CHECK(a != pink_noise(8192, 124));
  CHECK(mean_power(a) == doctest::Approx(1.0).epsilon(1e-12));
  const double mean = std::accumulate(a.begin(), a.end(), 0.0) / 8192.0;
  double var = 0.0;
  for (double v : a) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / 8191.0);
  CHECK(std::abs(mean) < 3.0 * sd / std::sqrt(8192.0));
  CHECK_THROWS_AS(pink_noise(1, 0), std::invalid_argument);
}

TEST_CASE("mix_at_snr scale") {
  const std::vector<double> one{1.0, -1.0, 1.0, -1.0};
  const std::vector<double> two{2.0, -2.0, 2.0, -2.0};
  CHECK(mix_at_snr(one, one, 0.0).scale == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mix_at_snr(one, one, -5.0).scale == doctest::Approx(std::pow(10.0, 0.25)).epsilon(1e-15));
  CHECK(mix_at_snr(one, one, -5.0).scale == doctest::Approx(1.7783).epsilon(1e-4));
  CHECK(mix_at_snr(one, two, 15.0).scale == doctest::Approx(std::sqrt(1.0 / (4.0 * std::pow(10.0, 1.5)))).epsilon(1e-15));
  CHECK(mix_at_snr(one, two, 15.0).scale == doctest::Approx(0.0889).epsilon(1e-3));
  const auto m = mix_at_snr(one, two, 0.0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(m.mixed[i] == one[i] + m.scale * two[i]);
  const std::vector<double> zero(4, 0.0);
  CHECK_THROWS_AS(mix_at_snr(zero, one, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mix_at_snr(one, zero, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mix_at_snr(one, std::vector<double>{1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("band burst frequencies") {
  CHECK(burst_frequency(Band::delta) == 3.0);
  CHECK(burst_frequency(Band::theta) == 6.0);
  CHECK(burst_frequency(Band::alpha) == 10.0);
  CHECK(burst_frequency(Band::beta) == 20.0);
  CHECK(burst_frequency(Band::gamma) == 45.0);
}

TEST_CASE("trial invariants") {
  const auto t = make_trial(Band::gamma, -5.0, 99);
  CHECK(t.burst_freq_hz == 45.0);
  CHECK(t.band == Band::gamma);
  CHECK(t.snr_db == -5.0);
  CHECK(t.sampling_rate_hz == 1000.0);
  REQUIRE(t.clean.size() == 800);
  CHECK(t.noise.size() == 800);
  CHECK(t.mixed.size() == 800);
  for (std::size_t i = 0; i < 800; ++i) CHECK(t.mixed[i] == t.clean[i] + t.noise[i]);
  for (std::size_t i = 0; i < 200; ++i) CHECK(t.clean[i] == 0.0);
  for (std::size_t i = 600; i < 800; ++i) CHECK(t.clean[i] == 0.0);
  CHECK(std::abs(realized_snr_db(t) - -5.0) < 0.01);
  CHECK(make_trial(Band::alpha, 10.0, 1).burst_freq_hz == 10.0);
}

TEST_CASE("trials are deterministic in their seed") {
  const auto a = make_trial(Band::beta, 10.0, 555);
  const auto b = make_trial(Band::beta, 10.0, 555);
  CHECK(a.mixed == b.mixed);
  CHECK(a.mixed != make_trial(Band::beta, 10.0, 556).mixed);
}

TEST_CASE("SNR calibration over many trials") {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    for (Band band : kAllBands) {
      for (double snr : {-5.0, 10.0, 15.0}) {
        worst = std::max(worst, std::abs(realized_snr_db(make_trial(band, snr, mix_seed(seed, 17))) - snr));
      }
    }
  }
  CHECK(worst < 0.01);
}

TEST_CASE("clean burst spectrum peaks at the burst frequency") {
  for (Band band : kAllBands) {
    const auto t = make_trial(band, 10.0, 2024);
    const auto psd = welch_psd(t.clean, t.sampling_rate_hz);
    const double peak = psd.frequencies[psd.peak_bin()];
    const double bins = t.burst_freq_hz >= 6.0 ? 1.0 : 2.0;
    CAPTURE(t.burst_freq_hz);
    CHECK(std::abs(peak - t.burst_freq_hz) <= bins * psd.resolution());
  }
}

TEST_CASE("mix_seed spreads nearby indices") {
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
  CHECK(mix_seed(7, 3) == mix_seed(7, 3));
}
