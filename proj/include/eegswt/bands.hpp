#pragma once

#include <array>
#include <string_view>

namespace eegswt {

enum class Band { delta, theta, alpha, beta, gamma };

inline constexpr std::array<Band, 5> kAllBands = {Band::delta, Band::theta, Band::alpha,
                                                  Band::beta, Band::gamma};

// Frequency interval in Hz, 0 <= f_low < f_high.
struct BandDefinition {
  Band name{Band::alpha};
  double f_low{0.0};
  double f_high{0.0};
};

// Clinical EEG bands: delta 0-4, theta 4-8, alpha 8-12, beta 12-32, gamma 32-128 Hz.
BandDefinition default_band(Band band);

std::string_view band_name(Band band);

// Throws std::invalid_argument for anything but the five band names.
Band parse_band(std::string_view name);

}  // namespace eegswt
