#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eegswt {

enum class Family {
  haar,
  daubechies,
  symlet,
  coiflet,
  discrete_meyer,
  biorthogonal,
  reverse_biorthogonal,
};

std::string_view family_name(Family family);

// A discrete mother wavelet realised as a two-channel filter bank.
//
// All four filters share one length. Highpass filters follow a single
// convention for every family:
//
//   dec_hi = qmf_highpass(reverse(rec_lo))
//   rec_hi = reverse(qmf_highpass(dec_lo))
//
// which for orthogonal families (rec_lo = reverse(dec_lo)) reduces to
// dec_hi = qmf_highpass(dec_lo) and rec_hi = reverse(dec_hi).
struct WaveletSpec {
  std::string name;
  Family family{Family::haar};
  std::vector<double> dec_lo;
  std::vector<double> dec_hi;
  std::vector<double> rec_lo;
  std::vector<double> rec_hi;
  std::size_t support_length{0};
  bool orthogonal{true};
  int vanishing_moments{0};
  // Truncated FIR approximation of a wavelet with infinite support (dmey).
  // Validated against a relaxed tolerance tier.
  bool approximate{false};

  std::size_t length() const { return dec_lo.size(); }
};

struct ValidationCheck {
  std::string name;
  double residual{0.0};
  double tolerance{0.0};
  bool passed{false};
};

struct ValidationReport {
  std::string wavelet_name;
  bool approximate{false};
  std::vector<ValidationCheck> checks;

  bool passed() const;
  const ValidationCheck* find(std::string_view check_name) const;
};

// g[n] = (-1)^n * lowpass[L-1-n]. Throws std::invalid_argument on empty input.
std::vector<double> qmf_highpass(std::span<const double> lowpass);

// Names of the default catalog, in catalog order.
std::vector<std::string> default_catalog_names();

// Builds one wavelet by name without validating it.
// Throws std::invalid_argument naming the offender and listing valid names.
WaveletSpec make_wavelet(std::string_view name);

// Returns the default catalog, or the requested subset in the requested order.
// Every returned spec has passed validate_wavelet; a failing spec is a
// construction bug and raises std::logic_error.
std::vector<WaveletSpec> build_catalog(
    const std::optional<std::vector<std::string>>& selection = std::nullopt);

// Runs the admissibility checks. Failures are reported, never thrown.
ValidationReport validate_wavelet(const WaveletSpec& spec);

// Lowpass filter of the discrete Meyer approximation: the Meyer scaling
// filter sampled from its frequency response, then projected onto the set of
// exactly orthonormal lowpass filters of the same length.
std::vector<double> meyer_lowpass(std::size_t taps = 62);

}  // namespace eegswt
