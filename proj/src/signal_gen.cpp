#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "eegswt/signal_gen.hpp"
#include "fft.hpp"

namespace eegswt {
namespace {

constexpr double kTukeyFraction = 0.2;  // total tapered fraction, half per side

double tukey(std::size_t n, std::size_t length) {
  if (length < 2) return 1.0;
  const double width = kTukeyFraction * static_cast<double>(length - 1) / 2.0;
  const double pos = static_cast<double>(n);
  const double from_end = static_cast<double>(length - 1) - pos;
  const double edge = std::min(pos, from_end);
  if (edge >= width) return 1.0;
  return 0.5 * (1.0 - std::cos(std::numbers::pi * edge / width));
}

std::size_t samples_for(double ms, double sampling_rate_hz) {
  return static_cast<std::size_t>(std::llround(ms * sampling_rate_hz / 1000.0));
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = (master ^ index) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> make_burst(double freq_hz, double sampling_rate_hz, double window_ms, double burst_ms,
                               std::uint64_t seed, Taper taper) {
  if (!(sampling_rate_hz > 0.0)) throw std::invalid_argument("make_burst: sampling rate must be positive");
  if (!(burst_ms > 0.0) || burst_ms > window_ms) {
    throw std::invalid_argument("make_burst: burst must be positive and no longer than the window");
  }
  if (!(freq_hz > 0.0) || freq_hz >= sampling_rate_hz / 2.0) {
    throw std::invalid_argument("make_burst: frequency must lie in (0, fs/2)");
  }
  const std::size_t n_window = samples_for(window_ms, sampling_rate_hz);
  const std::size_t n_burst = std::min(samples_for(burst_ms, sampling_rate_hz), n_window);
  const std::size_t start = (n_window - n_burst) / 2;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  const double phase = uniform(rng);

  std::vector<double> out(n_window, 0.0);
  const double omega = 2.0 * std::numbers::pi * freq_hz / sampling_rate_hz;
  for (std::size_t n = 0; n < n_burst; ++n) {
    const double envelope = taper == Taper::tukey ? tukey(n, n_burst) : 1.0;
    out[start + n] = envelope * std::sin(omega * static_cast<double>(n) + phase);
  }
  return out;
}

std::vector<double> pink_noise(std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 2) throw std::invalid_argument("pink_noise: need at least 2 samples");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::complex<double>> spectrum(n_samples / 2 + 1);
  for (std::size_t k = 1; k < spectrum.size(); ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    spectrum[k] = std::complex<double>(re, im) / std::sqrt(static_cast<double>(k));
  }
  if (n_samples % 2 == 0) spectrum.back() = {spectrum.back().real(), 0.0};

  auto x = detail::irfft(spectrum, n_samples);
  const double rms = std::sqrt(mean_power(x));
  for (auto& v : x) v /= rms;
  return x;
}

double mean_power(std::span<const double> signal) {
  if (signal.empty()) return 0.0;
  double s = 0.0;
  for (double v : signal) s += v * v;
  return s / static_cast<double>(signal.size());
}

Mixture mix_at_snr(std::span<const double> clean, std::span<const double> noise, double snr_db) {
  if (clean.size() != noise.size()) throw std::invalid_argument("mix_at_snr: length mismatch");
  const double p_clean = mean_power(clean);
  const double p_noise = mean_power(noise);
  if (p_clean == 0.0) throw std::invalid_argument("mix_at_snr: clean signal is all zero");
  if (p_noise == 0.0) throw std::invalid_argument("mix_at_snr: noise is all zero");
  Mixture out;
  out.scale = std::sqrt(p_clean / (p_noise * std::pow(10.0, snr_db / 10.0)));
  out.mixed.resize(clean.size());
  for (std::size_t i = 0; i < clean.size(); ++i) out.mixed[i] = clean[i] + out.scale * noise[i];
  return out;
}

double burst_frequency(Band band) {
  switch (band) {
    case Band::delta: return 3.0;
    case Band::theta: return 6.0;
    case Band::alpha: return 10.0;
    case Band::beta: return 20.0;
    case Band::gamma: return 45.0;
  }
  throw std::invalid_argument("burst_frequency: invalid band");
}

SyntheticTrial make_trial(Band band, double snr_db, std::uint64_t seed, const TrialConfig& config) {
  SyntheticTrial trial;
  trial.band = band;
  trial.snr_db = snr_db;
  trial.seed = seed;
  trial.sampling_rate_hz = config.sampling_rate_hz;
  trial.burst_freq_hz = burst_frequency(band);
  trial.clean = make_burst(trial.burst_freq_hz, config.sampling_rate_hz, config.window_ms, config.burst_ms,
                           mix_seed(seed, 1));
  const auto noise = pink_noise(trial.clean.size(), mix_seed(seed, 2));
  auto mixture = mix_at_snr(trial.clean, noise, snr_db);
  trial.noise_scale = mixture.scale;
  trial.noise.resize(noise.size());
  for (std::size_t i = 0; i < noise.size(); ++i) trial.noise[i] = mixture.scale * noise[i];
  trial.mixed = std::move(mixture.mixed);
  return trial;
}

}  // namespace eegswt
