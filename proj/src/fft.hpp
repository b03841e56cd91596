#pragma once

#include <complex>
#include <span>
#include <vector>

namespace eegswt::detail {

// Real-to-complex DFT, bins 0..n/2, unnormalised.
std::vector<std::complex<double>> rfft(std::span<const double> x);

// Inverse of rfft for a length-n signal, scaled by 1/n so irfft(rfft(x)) == x.
std::vector<double> irfft(std::span<const std::complex<double>> spectrum, std::size_t n);

}  // namespace eegswt::detail
