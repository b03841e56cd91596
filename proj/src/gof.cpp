#include <stdexcept>

#include "eegswt/gof.hpp"

namespace eegswt {

double gof(std::span<const double> reference, std::span<const double> extracted) {
  if (reference.size() != extracted.size()) throw std::invalid_argument("gof: length mismatch");
  double deviation = 0.0;
  double energy = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = reference[i] - extracted[i];
    deviation += d * d;
    energy += reference[i] * reference[i];
  }
  if (energy == 0.0) throw std::invalid_argument("gof: reference signal is all zero");
  return 1.0 - deviation / energy;
}

}  // namespace eegswt
