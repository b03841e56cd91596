#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "eegswt/resample.hpp"

namespace eegswt {
namespace {

constexpr double kStopbandDb = 80.0;
// Filter half-length in units of max(up, down) input-rate samples.
constexpr std::int64_t kHalfLengthFactor = 16;

double kaiser_beta(double attenuation_db) {
  if (attenuation_db > 50.0) return 0.1102 * (attenuation_db - 8.7);
  if (attenuation_db >= 21.0) {
    return 0.5842 * std::pow(attenuation_db - 21.0, 0.4) + 0.07886 * (attenuation_db - 21.0);
  }
  return 0.0;
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

// Lowpass prototype at the upsampled rate: cutoff at the lower of the two
// Nyquist frequencies, passband gain `up` to undo zero stuffing.
std::vector<double> design_filter(std::int64_t up, std::int64_t down) {
  const std::int64_t widest = std::max(up, down);
  const std::int64_t half = kHalfLengthFactor * widest;
  const double cutoff = 0.5 / static_cast<double>(widest);  // cycles per upsampled sample
  const double beta = kaiser_beta(kStopbandDb);
  const double norm = std::cyl_bessel_i(0.0, beta);
  std::vector<double> h(static_cast<std::size_t>(2 * half + 1));
  for (std::int64_t i = 0; i <= 2 * half; ++i) {
    const double t = static_cast<double>(i - half);
    const double r = t / static_cast<double>(half);
    const double window = std::cyl_bessel_i(0.0, beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / norm;
    h[static_cast<std::size_t>(i)] = static_cast<double>(up) * 2.0 * cutoff * sinc(2.0 * cutoff * t) * window;
  }
  return h;
}

}  // namespace

RateRatio rational_ratio(double from_hz, double to_hz) {
  if (!(from_hz > 0.0) || !(to_hz > 0.0)) throw std::invalid_argument("resample: rates must be positive");
  const double rf = std::round(from_hz);
  const double rt = std::round(to_hz);
  if (std::abs(rf - from_hz) < 1e-9 && std::abs(rt - to_hz) < 1e-9 && rf < 9e15 && rt < 9e15) {
    const auto f = static_cast<std::int64_t>(rf);
    const auto t = static_cast<std::int64_t>(rt);
    const auto g = std::gcd(f, t);
    return {t / g, f / g};
  }
  // Continued-fraction convergents of to/from with denominators up to 1e6.
  const double target = to_hz / from_hz;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = target;
  for (int i = 0; i < 64; ++i) {
    const auto a = static_cast<std::int64_t>(std::floor(x));
    const std::int64_t p2 = a * p1 + p0;
    const std::int64_t q2 = a * q1 + q0;
    if (q2 > 1'000'000) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double frac = x - static_cast<double>(a);
    if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - target) <= 1e-12 * target || frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return {p1, q1};
}

std::vector<double> resample(std::span<const double> signal, double from_hz, double to_hz) {
  const RateRatio ratio = rational_ratio(from_hz, to_hz);
  if (ratio.up == ratio.down) return {signal.begin(), signal.end()};
  const auto n_in = static_cast<std::int64_t>(signal.size());
  const auto n_out = static_cast<std::int64_t>(std::llround(static_cast<double>(n_in) * to_hz / from_hz));
  if (n_in == 0 || n_out == 0) return {};

  const std::vector<double> h = design_filter(ratio.up, ratio.down);
  const auto taps = static_cast<std::int64_t>(h.size());
  const std::int64_t half = (taps - 1) / 2;
  std::vector<double> out(static_cast<std::size_t>(n_out), 0.0);
  // y[m] = sum_i h[i] * xu[m*down + half - i], xu the zero-stuffed input;
  // only taps landing on multiples of `up` touch a real sample.
  for (std::int64_t m = 0; m < n_out; ++m) {
    const std::int64_t t0 = m * ratio.down + half;
    double acc = 0.0;
    for (std::int64_t i = t0 % ratio.up; i < taps && i <= t0; i += ratio.up) {
      const std::int64_t k = (t0 - i) / ratio.up;
      if (k < n_in) acc += h[static_cast<std::size_t>(i)] * signal[static_cast<std::size_t>(k)];
    }
    out[static_cast<std::size_t>(m)] = acc;
  }
  return out;
}

}  // namespace eegswt
