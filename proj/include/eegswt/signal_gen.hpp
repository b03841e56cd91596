#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eegswt/bands.hpp"

namespace eegswt {

enum class Taper {
  tukey,        // cosine ramps over the first and last 10% of the burst
  rectangular,  // no envelope
};

// splitmix64 finaliser applied to master ^ index. Used to derive per-trial and
// per-stream seeds from one master seed.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

// Unit-amplitude sinusoid with a seed-drawn uniform initial phase, occupying the
// centred burst_ms interval of a window_ms window; zero elsewhere.
// Throws std::invalid_argument if burst_ms > window_ms or freq_hz >= fs/2.
std::vector<double> make_burst(double freq_hz, double sampling_rate_hz, double window_ms,
                               double burst_ms, std::uint64_t seed, Taper taper = Taper::tukey);

// 1/f noise by spectral shaping of complex white Gaussian noise (DC removed),
// normalised to unit RMS. Throws std::invalid_argument for n_samples < 2.
std::vector<double> pink_noise(std::size_t n_samples, std::uint64_t seed);

double mean_power(std::span<const double> signal);

struct Mixture {
  std::vector<double> mixed;
  double scale{0.0};
};

// scale = sqrt(P_clean / (P_noise * 10^(snr_db/10))); mixed = clean + scale * noise.
// Throws std::invalid_argument on length mismatch or an all-zero input.
Mixture mix_at_snr(std::span<const double> clean, std::span<const double> noise, double snr_db);

// Oscillation frequency used for each band's simulated burst: 3, 6, 10, 20, 45 Hz.
double burst_frequency(Band band);

struct TrialConfig {
  double sampling_rate_hz{1000.0};
  double window_ms{800.0};
  double burst_ms{400.0};
};

struct SyntheticTrial {
  std::vector<double> clean;
  std::vector<double> noise;  // already scaled: mixed = clean + noise
  std::vector<double> mixed;
  double noise_scale{0.0};
  double sampling_rate_hz{0.0};
  double burst_freq_hz{0.0};
  Band band{Band::alpha};
  double snr_db{0.0};
  std::uint64_t seed{0};
};

SyntheticTrial make_trial(Band band, double snr_db, std::uint64_t seed,
                          const TrialConfig& config = {});

}  // namespace eegswt
