#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace eegswt {

struct RateRatio {
  std::int64_t up{1};
  std::int64_t down{1};
};

// to_hz / from_hz reduced to lowest terms (2500 -> 2048 gives 512/625).
// Non-integral rates are approximated by continued fractions.
RateRatio rational_ratio(double from_hz, double to_hz);

// Polyphase windowed-sinc rational resampler, Kaiser window designed for
// 80 dB stopband attenuation. Output length is round(N * to_hz / from_hz).
// Throws std::invalid_argument for non-positive rates.
std::vector<double> resample(std::span<const double> signal, double from_hz, double to_hz);

}  // namespace eegswt
