#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eegswt/psd.hpp"
#include "fft.hpp"

namespace eegswt {

double PsdEstimate::resolution() const {
  return frequencies.size() < 2 ? 0.0 : frequencies[1] - frequencies[0];
}

double PsdEstimate::at(double freq_hz) const {
  if (power.empty()) throw std::out_of_range("PsdEstimate::at: empty estimate");
  const double df = resolution();
  const auto idx = df > 0.0 ? static_cast<std::size_t>(std::llround(freq_hz / df)) : 0;
  return power[std::min(idx, power.size() - 1)];
}

std::size_t PsdEstimate::peak_bin() const {
  return static_cast<std::size_t>(std::max_element(power.begin(), power.end()) - power.begin());
}

PsdEstimate welch_psd(std::span<const double> signal, double sampling_rate_hz, const WelchParams& params) {
  if (!(sampling_rate_hz > 0.0)) throw std::invalid_argument("welch_psd: sampling rate must be positive");
  if (!(params.overlap_fraction >= 0.0 && params.overlap_fraction < 1.0)) {
    throw std::invalid_argument("welch_psd: overlap must lie in [0, 1)");
  }
  std::size_t seg = params.segment_length;
  if (seg == 0) seg = std::min(signal.size(), static_cast<std::size_t>(std::llround(sampling_rate_hz)));
  if (seg < 2 || signal.size() < seg) {
    throw std::invalid_argument("welch_psd: signal shorter than one segment (" + std::to_string(signal.size()) +
                                " < " + std::to_string(std::max<std::size_t>(seg, 2)) + ")");
  }
  const std::size_t overlap = static_cast<std::size_t>(std::llround(params.overlap_fraction * static_cast<double>(seg)));
  const std::size_t step = std::max<std::size_t>(1, seg - std::min(overlap, seg - 1));

  // Periodic Hann window.
  std::vector<double> window(seg);
  double window_energy = 0.0;
  for (std::size_t n = 0; n < seg; ++n) {
    window[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(seg));
    window_energy += window[n] * window[n];
  }

  const std::size_t bins = seg / 2 + 1;
  PsdEstimate est;
  est.segment_length = seg;
  est.overlap_fraction = params.overlap_fraction;
  est.window_name = "hann";
  est.frequencies.resize(bins);
  est.power.assign(bins, 0.0);
  for (std::size_t k = 0; k < bins; ++k) {
    est.frequencies[k] = static_cast<double>(k) * sampling_rate_hz / static_cast<double>(seg);
  }

  std::size_t segments = 0;
  std::vector<double> buffer(seg);
  for (std::size_t start = 0; start + seg <= signal.size(); start += step) {
    double mean = 0.0;
    for (std::size_t n = 0; n < seg; ++n) mean += signal[start + n];
    mean /= static_cast<double>(seg);
    for (std::size_t n = 0; n < seg; ++n) buffer[n] = (signal[start + n] - mean) * window[n];
    const auto spectrum = detail::rfft(buffer);
    for (std::size_t k = 0; k < bins; ++k) est.power[k] += std::norm(spectrum[k]);
    ++segments;
  }

  const double scale = 1.0 / (sampling_rate_hz * window_energy * static_cast<double>(segments));
  for (std::size_t k = 0; k < bins; ++k) {
    // Fold negative frequencies, except DC and (even length) Nyquist.
    const bool unpaired = k == 0 || (seg % 2 == 0 && k == bins - 1);
    est.power[k] *= scale * (unpaired ? 1.0 : 2.0);
  }
  return est;
}

double band_power(const PsdEstimate& psd, double f_low, double f_high) {
  if (psd.frequencies.size() < 2 || psd.frequencies.size() != psd.power.size()) {
    throw std::invalid_argument("band_power: malformed PSD estimate");
  }
  const double lo = std::max(f_low, psd.frequencies.front());
  const double hi = std::min(f_high, psd.frequencies.back());
  if (!(hi > lo)) throw std::invalid_argument("band_power: band does not overlap the estimate's frequency range");

  auto interpolate = [&](double f) {
    const auto it = std::upper_bound(psd.frequencies.begin(), psd.frequencies.end(), f);
    const std::size_t i = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - psd.frequencies.begin(), 1),
                                                 psd.frequencies.size() - 1);
    const double f0 = psd.frequencies[i - 1];
    const double f1 = psd.frequencies[i];
    const double t = (f - f0) / (f1 - f0);
    return psd.power[i - 1] + t * (psd.power[i] - psd.power[i - 1]);
  };

  // Trapezoids between lo, every interior grid point, and hi.
  double area = 0.0;
  double prev_f = lo;
  double prev_p = interpolate(lo);
  for (std::size_t i = 0; i < psd.frequencies.size(); ++i) {
    const double f = psd.frequencies[i];
    if (f <= lo) continue;
    if (f >= hi) break;
    area += 0.5 * (prev_p + psd.power[i]) * (f - prev_f);
    prev_f = f;
    prev_p = psd.power[i];
  }
  area += 0.5 * (prev_p + interpolate(hi)) * (hi - prev_f);
  return area;
}

double band_power(const PsdEstimate& psd, const BandDefinition& band) {
  return band_power(psd, band.f_low, band.f_high);
}

}  // namespace eegswt
