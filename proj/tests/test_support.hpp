#pragma once

// Test-only oracles. Nothing here calls into the library's FFT, PSD or SWT
// paths, so they can serve as independent references.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace oracle {

inline std::vector<double> random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = normal(rng);
  return x;
}

inline double rel_l2(std::span<const double> a, std::span<const double> b) {
  long double num = 0.0L;
  long double den = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (static_cast<long double>(a[i]) - b[i]) * (static_cast<long double>(a[i]) - b[i]);
    den += static_cast<long double>(b[i]) * b[i];
  }
  return static_cast<double>(std::sqrt(num / den));
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline std::vector<double> tone(double freq_hz, double fs, std::size_t n, double amplitude = 1.0, double phase = 0.0) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = amplitude * std::sin(2.0 * std::numbers::pi * freq_hz * static_cast<double>(i) / fs + phase);
  }
  return x;
}

// |sum_n w[n] x[n] e^{-i 2 pi f n / fs}|^2 with a Hann window, by direct summation.
inline double windowed_dft_power(std::span<const double> x, double fs, double freq_hz) {
  const auto n = x.size();
  std::complex<long double> acc = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double w = 0.5L - 0.5L * std::cos(2.0L * std::numbers::pi_v<long double> * i / n);
    const long double ang = -2.0L * std::numbers::pi_v<long double> * freq_hz * i / fs;
    acc += w * x[i] * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return static_cast<double>(std::norm(acc));
}

// Frequency of the largest Hann-windowed periodogram bin (bins k * fs / n).
inline double periodogram_peak_hz(std::span<const double> x, double fs, double f_max) {
  const auto n = x.size();
  double best = -1.0;
  double best_f = 0.0;
  for (std::size_t k = 1; static_cast<double>(k) * fs / n <= f_max; ++k) {
    const double f = static_cast<double>(k) * fs / static_cast<double>(n);
    const double p = windowed_dft_power(x, fs, f);
    if (p > best) {
      best = p;
      best_f = f;
    }
  }
  return best_f;
}

inline double pearson(std::span<const double> a, std::span<const double> b) {
  const auto n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

// Least-squares slope of y against x.
inline double ls_slope(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace oracle
