#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eegswt/bands.hpp"

namespace eegswt {

struct WelchParams {
  // 0 selects one second of samples, or the whole signal if shorter.
  std::size_t segment_length{0};
  double overlap_fraction{0.5};
};

// One-sided power spectral density in signal-units^2/Hz on [0, fs/2].
struct PsdEstimate {
  std::vector<double> frequencies;
  std::vector<double> power;
  std::size_t segment_length{0};
  double overlap_fraction{0.0};
  std::string window_name{"hann"};

  double resolution() const;
  // Power at the bin nearest to freq_hz.
  double at(double freq_hz) const;
  std::size_t peak_bin() const;
};

// Welch averaged periodogram: Hann window, per-segment mean removal, density
// scaling, so that sum(power) * df matches the signal variance.
// Throws std::invalid_argument if the signal is shorter than one segment.
PsdEstimate welch_psd(std::span<const double> signal, double sampling_rate_hz,
                      const WelchParams& params = {});

// Trapezoidal integral of the density over [f_low, f_high], clipped to the
// estimate's frequency range. Throws std::invalid_argument if they do not overlap.
double band_power(const PsdEstimate& psd, const BandDefinition& band);
double band_power(const PsdEstimate& psd, double f_low, double f_high);

}  // namespace eegswt
