#include <stdexcept>
#include <string>

#include "eegswt/bands.hpp"

namespace eegswt {

BandDefinition default_band(Band band) {
  switch (band) {
    case Band::delta: return {band, 0.0, 4.0};
    case Band::theta: return {band, 4.0, 8.0};
    case Band::alpha: return {band, 8.0, 12.0};
    case Band::beta: return {band, 12.0, 32.0};
    case Band::gamma: return {band, 32.0, 128.0};
  }
  throw std::invalid_argument("default_band: invalid band");
}

std::string_view band_name(Band band) {
  switch (band) {
    case Band::delta: return "delta";
    case Band::theta: return "theta";
    case Band::alpha: return "alpha";
    case Band::beta: return "beta";
    case Band::gamma: return "gamma";
  }
  return "unknown";
}

Band parse_band(std::string_view name) {
  for (Band b : kAllBands) {
    if (band_name(b) == name) return b;
  }
  throw std::invalid_argument("unknown band '" + std::string(name) +
                              "'; valid bands: delta, theta, alpha, beta, gamma");
}

}  // namespace eegswt
