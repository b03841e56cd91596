#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eegswt/bands.hpp"
#include "eegswt/wavelet.hpp"

namespace eegswt {

enum class CoeffKind { approx, detail };

// One coefficient sequence of a decomposition, e.g. {7, detail} for cD7.
struct LevelSelection {
  int level{1};
  CoeffKind kind{CoeffKind::detail};

  auto operator<=>(const LevelSelection&) const = default;
};

// Undecimated decomposition. Every sequence has padded_length() samples, a
// multiple of 2^levels; approx[j-1] / detail[j-1] hold level j.
struct SwtDecomposition {
  std::string wavelet_name;
  int levels{0};
  std::vector<std::vector<double>> approx;
  std::vector<std::vector<double>> detail;
  std::size_t original_length{0};
  double sampling_rate_hz{1.0};

  std::size_t padded_length() const { return approx.empty() ? 0 : approx.front().size(); }
  const std::vector<double>& coefficients(LevelSelection which) const;
};

// A trous forward transform with circular convolution. Inputs whose length is
// not a multiple of 2^levels are periodically extended to the next multiple.
// Throws std::invalid_argument for levels < 1, an empty signal, or
// 2^levels > signal length ("too many levels").
SwtDecomposition swt_forward(std::span<const double> signal, const WaveletSpec& wavelet,
                             int levels, double sampling_rate_hz = 1.0);

// Inverse transform; returns original_length samples. Equivalent to averaging
// the decimated inverses over all shift branches at each level.
// Throws std::invalid_argument when the wavelet does not match the decomposition.
std::vector<double> iswt(const SwtDecomposition& decomposition, const WaveletSpec& wavelet);

// Reconstruction from a subset of coefficient sequences: the sum over `keep`
// of the signal rebuilt from that sequence alone. Keeping every detail level
// plus the deepest approximation is exactly iswt().
std::vector<double> reconstruct(const SwtDecomposition& decomposition, const WaveletSpec& wavelet,
                                std::span<const LevelSelection> keep);

struct DyadicBand {
  int level{1};
  CoeffKind kind{CoeffKind::detail};
  double f_low{0.0};
  double f_high{0.0};
};

// detail j -> [fs/2^(j+1), fs/2^j], approx J -> [0, fs/2^(J+1)].
// Ordered detail 1..J, then approx J.
std::vector<DyadicBand> level_band_map(double sampling_rate_hz, int levels);

// Intersection rule: every sequence whose dyadic interval meets [f_low, f_high)
// with positive width. Sorted. Throws std::invalid_argument when the band lies
// entirely at or above Nyquist.
std::vector<LevelSelection> select_levels(const BandDefinition& band, double sampling_rate_hz,
                                          int levels);

// Decompose, keep the sequences chosen by select_levels, reconstruct.
std::vector<double> extract_band(std::span<const double> signal, const WaveletSpec& wavelet,
                                 const BandDefinition& band, double sampling_rate_hz, int levels);

// As extract_band with an explicit selection (e.g. parsed from "a6,a7,d7").
std::vector<double> extract_levels(std::span<const double> signal, const WaveletSpec& wavelet,
                                   std::span<const LevelSelection> keep, int levels);

// Parses a comma-separated list of a<level>/d<level> tokens.
std::vector<LevelSelection> parse_level_selection(std::string_view spec);
std::string format_level_selection(std::span<const LevelSelection> selection);

// Smallest depth whose approximation band [0, fs/2^(J+1)] ends at or below 2 Hz
// (J = 9 at 2048 Hz, J = 8 at 1000 Hz).
int default_levels(double sampling_rate_hz);

}  // namespace eegswt
