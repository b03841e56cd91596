#pragma once

#include <span>

namespace eegswt {

// Goodness of fit G = 1 - sum((s - s_f)^2) / sum(s^2). Equals 1 only for a
// perfect extraction, 0 for an all-zero one, and is unbounded below.
// Throws std::invalid_argument on length mismatch or an all-zero reference.
double gof(std::span<const double> reference, std::span<const double> extracted);

}  // namespace eegswt
