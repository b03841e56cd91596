#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eegswt/swt.hpp"

namespace eegswt {
namespace {

constexpr int kMaxLevels = 30;

// out[n] (+)= gain * sum_k taps[k] * in[(n - (k - centre) * step) mod M]
// Each tap contributes a circularly shifted, scaled copy of the input, which
// keeps the inner loop contiguous.
void circular_filter(std::span<const double> in, std::span<const double> taps, std::size_t step,
                     std::ptrdiff_t centre, double gain, std::span<double> out) {
  const auto m = static_cast<std::ptrdiff_t>(in.size());
  for (std::size_t k = 0; k < taps.size(); ++k) {
    const double coeff = gain * taps[k];
    if (coeff == 0.0) continue;
    std::ptrdiff_t shift = ((static_cast<std::ptrdiff_t>(k) - centre) * static_cast<std::ptrdiff_t>(step)) % m;
    if (shift < 0) shift += m;
    // n in [shift, m): in[n - shift]; n in [0, shift): in[n - shift + m]
    for (std::ptrdiff_t n = shift; n < m; ++n) out[n] += coeff * in[n - shift];
    for (std::ptrdiff_t n = 0; n < shift; ++n) out[n] += coeff * in[n - shift + m];
  }
}

std::ptrdiff_t analysis_centre(const WaveletSpec& w) { return static_cast<std::ptrdiff_t>(w.length() / 2); }

// Analysis and synthesis offsets add up to L - 1, cancelling the filter-bank
// delay so coefficients stay time-aligned with the signal.
std::ptrdiff_t synthesis_centre(const WaveletSpec& w) {
  return static_cast<std::ptrdiff_t>(w.length()) - 1 - analysis_centre(w);
}

std::size_t level_step(int level) { return std::size_t{1} << (level - 1); }

void check_wavelet(const WaveletSpec& w) {
  const std::size_t len = w.dec_lo.size();
  if (len < 2 || w.dec_hi.size() != len || w.rec_lo.size() != len || w.rec_hi.size() != len) {
    throw std::invalid_argument("wavelet '" + w.name + "' has an inconsistent filter bank");
  }
}

// Forward transform computing approximations up to max_level and only the
// detail levels flagged in need_detail (indexed by level - 1).
SwtDecomposition forward(std::span<const double> signal, const WaveletSpec& wavelet, int levels,
                         double sampling_rate_hz, int max_level, const std::vector<bool>& need_detail) {
  if (levels < 1 || levels > kMaxLevels) throw std::invalid_argument("swt_forward: levels must be in [1, 30]");
  if (signal.empty()) throw std::invalid_argument("swt_forward: empty signal");
  if (!(sampling_rate_hz > 0.0)) throw std::invalid_argument("swt_forward: sampling rate must be positive");
  check_wavelet(wavelet);
  const std::size_t block = std::size_t{1} << levels;
  if (block > signal.size()) {
    throw std::invalid_argument("swt_forward: too many levels (" + std::to_string(levels) + ") for " +
                                std::to_string(signal.size()) + " samples");
  }
  const std::size_t padded = (signal.size() + block - 1) / block * block;

  SwtDecomposition out;
  out.wavelet_name = wavelet.name;
  out.levels = levels;
  out.original_length = signal.size();
  out.sampling_rate_hz = sampling_rate_hz;
  out.approx.assign(static_cast<std::size_t>(levels), std::vector<double>(padded, 0.0));
  out.detail.assign(static_cast<std::size_t>(levels), std::vector<double>(padded, 0.0));

  std::vector<double> current(padded);
  for (std::size_t i = 0; i < padded; ++i) current[i] = signal[i % signal.size()];

  const auto centre = analysis_centre(wavelet);
  for (int j = 1; j <= max_level; ++j) {
    const std::size_t step = level_step(j);
    auto& approx = out.approx[static_cast<std::size_t>(j - 1)];
    circular_filter(current, wavelet.dec_lo, step, centre, 1.0, approx);
    if (need_detail[static_cast<std::size_t>(j - 1)]) {
      circular_filter(current, wavelet.dec_hi, step, centre, 1.0, out.detail[static_cast<std::size_t>(j - 1)]);
    }
    current = approx;
  }
  return out;
}

void check_decomposition(const SwtDecomposition& d, const WaveletSpec& wavelet) {
  if (d.wavelet_name != wavelet.name) {
    throw std::invalid_argument("decomposition was made with '" + d.wavelet_name + "', not '" + wavelet.name + "'");
  }
  check_wavelet(wavelet);
  const auto levels = static_cast<std::size_t>(d.levels);
  if (d.levels < 1 || d.approx.size() != levels || d.detail.size() != levels) {
    throw std::invalid_argument("decomposition level count is inconsistent");
  }
  const std::size_t m = d.padded_length();
  for (std::size_t j = 0; j < levels; ++j) {
    if (d.approx[j].size() != m || d.detail[j].size() != m) {
      throw std::invalid_argument("decomposition sequences differ in length");
    }
  }
  if (m % (std::size_t{1} << d.levels) != 0 || d.original_length == 0 || d.original_length > m) {
    throw std::invalid_argument("decomposition length is not a multiple of 2^levels");
  }
}

}  // namespace

const std::vector<double>& SwtDecomposition::coefficients(LevelSelection which) const {
  if (which.level < 1 || which.level > levels) throw std::out_of_range("level out of range");
  const auto idx = static_cast<std::size_t>(which.level - 1);
  return which.kind == CoeffKind::approx ? approx[idx] : detail[idx];
}

SwtDecomposition swt_forward(std::span<const double> signal, const WaveletSpec& wavelet, int levels,
                             double sampling_rate_hz) {
  return forward(signal, wavelet, levels, sampling_rate_hz, levels,
                 std::vector<bool>(static_cast<std::size_t>(std::max(levels, 0)), true));
}

std::vector<double> reconstruct(const SwtDecomposition& decomposition, const WaveletSpec& wavelet,
                                std::span<const LevelSelection> keep) {
  check_decomposition(decomposition, wavelet);
  const int levels = decomposition.levels;
  std::vector<bool> keep_approx(static_cast<std::size_t>(levels), false);
  std::vector<bool> keep_detail(static_cast<std::size_t>(levels), false);
  for (const auto& sel : keep) {
    if (sel.level < 1 || sel.level > levels) {
      throw std::invalid_argument("selected level " + std::to_string(sel.level) + " outside 1.." +
                                  std::to_string(levels));
    }
    (sel.kind == CoeffKind::approx ? keep_approx : keep_detail)[static_cast<std::size_t>(sel.level - 1)] = true;
  }

  const std::size_t m = decomposition.padded_length();
  const auto centre = synthesis_centre(wavelet);
  // `current` carries the approximation-space signal at the level being
  // inverted; it stays empty while everything above is zero.
  std::vector<double> current;
  for (int j = levels; j >= 1; --j) {
    const auto idx = static_cast<std::size_t>(j - 1);
    if (keep_approx[idx]) {
      if (current.empty()) {
        current = decomposition.approx[idx];
      } else {
        for (std::size_t i = 0; i < m; ++i) current[i] += decomposition.approx[idx][i];
      }
    }
    if (current.empty() && !keep_detail[idx]) continue;
    std::vector<double> next(m, 0.0);
    const std::size_t step = level_step(j);
    if (!current.empty()) circular_filter(current, wavelet.rec_lo, step, centre, 0.5, next);
    if (keep_detail[idx]) circular_filter(decomposition.detail[idx], wavelet.rec_hi, step, centre, 0.5, next);
    current = std::move(next);
  }
  if (current.empty()) current.assign(m, 0.0);
  current.resize(decomposition.original_length);
  return current;
}

std::vector<double> iswt(const SwtDecomposition& decomposition, const WaveletSpec& wavelet) {
  check_decomposition(decomposition, wavelet);
  std::vector<LevelSelection> all;
  for (int j = 1; j <= decomposition.levels; ++j) all.push_back({j, CoeffKind::detail});
  all.push_back({decomposition.levels, CoeffKind::approx});
  return reconstruct(decomposition, wavelet, all);
}

std::vector<DyadicBand> level_band_map(double sampling_rate_hz, int levels) {
  std::vector<DyadicBand> out;
  out.reserve(static_cast<std::size_t>(levels) + 1);
  for (int j = 1; j <= levels; ++j) {
    out.push_back({j, CoeffKind::detail, sampling_rate_hz / std::ldexp(1.0, j + 1),
                   sampling_rate_hz / std::ldexp(1.0, j)});
  }
  out.push_back({levels, CoeffKind::approx, 0.0, sampling_rate_hz / std::ldexp(1.0, levels + 1)});
  return out;
}

std::vector<LevelSelection> select_levels(const BandDefinition& band, double sampling_rate_hz, int levels) {
  if (!(sampling_rate_hz > 0.0)) throw std::invalid_argument("select_levels: sampling rate must be positive");
  if (levels < 1) throw std::invalid_argument("select_levels: levels must be >= 1");
  if (!(band.f_low >= 0.0 && band.f_low < band.f_high)) {
    throw std::invalid_argument("select_levels: band must satisfy 0 <= f_low < f_high");
  }
  if (band.f_low >= sampling_rate_hz / 2.0) {
    throw std::invalid_argument("select_levels: band " + std::string(band_name(band.name)) +
                                " lies above the Nyquist frequency");
  }
  std::vector<LevelSelection> out;
  for (const auto& d : level_band_map(sampling_rate_hz, levels)) {
    const double lo = std::max(band.f_low, d.f_low);
    const double hi = std::min(band.f_high, d.f_high);
    if (hi - lo > 0.0) out.push_back({d.level, d.kind});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> extract_levels(std::span<const double> signal, const WaveletSpec& wavelet,
                                   std::span<const LevelSelection> keep, int levels) {
  // Only the approximation chain down to the deepest selected level and the
  // selected details are needed; skipped sequences would be zeroed anyway.
  int max_level = 0;
  std::vector<bool> need_detail(static_cast<std::size_t>(std::max(levels, 0)), false);
  for (const auto& sel : keep) {
    if (sel.level < 1 || sel.level > levels) {
      throw std::invalid_argument("selected level " + std::to_string(sel.level) + " outside 1.." +
                                  std::to_string(levels));
    }
    max_level = std::max(max_level, sel.level);
    if (sel.kind == CoeffKind::detail) need_detail[static_cast<std::size_t>(sel.level - 1)] = true;
  }
  const auto decomposition = forward(signal, wavelet, levels, 1.0, max_level, need_detail);
  return reconstruct(decomposition, wavelet, keep);
}

std::vector<double> extract_band(std::span<const double> signal, const WaveletSpec& wavelet,
                                 const BandDefinition& band, double sampling_rate_hz, int levels) {
  const auto keep = select_levels(band, sampling_rate_hz, levels);
  return extract_levels(signal, wavelet, keep, levels);
}

std::vector<LevelSelection> parse_level_selection(std::string_view spec) {
  std::vector<LevelSelection> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    std::string token(spec.substr(pos, comma - pos));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.size() < 2) throw std::invalid_argument("invalid level selection token '" + token + "'");
    const char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
    if (kind != 'a' && kind != 'd') throw std::invalid_argument("invalid level selection token '" + token + "'");
    const std::string digits = token.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        digits.size() > 2) {
      throw std::invalid_argument("invalid level selection token '" + token + "'");
    }
    const int level = std::stoi(digits);
    if (level < 1) throw std::invalid_argument("invalid level selection token '" + token + "'");
    out.push_back({level, kind == 'a' ? CoeffKind::approx : CoeffKind::detail});
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_level_selection(std::span<const LevelSelection> selection) {
  std::string out;
  for (const auto& s : selection) {
    if (!out.empty()) out += ',';
    out += (s.kind == CoeffKind::approx ? 'a' : 'd');
    out += std::to_string(s.level);
  }
  return out;
}

int default_levels(double sampling_rate_hz) {
  if (!(sampling_rate_hz > 0.0)) throw std::invalid_argument("default_levels: sampling rate must be positive");
  int j = 1;
  while (j < kMaxLevels && sampling_rate_hz / std::ldexp(1.0, j + 1) > 2.0) ++j;
  return j;
}

}  // namespace eegswt
