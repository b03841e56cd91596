#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "eegswt/swt.hpp"
#include "eegswt/wavelet.hpp"
#include "wavelet_tables.hpp"

namespace eegswt {
namespace {

constexpr double kSumTolerance = 1e-10;
constexpr double kOrthoTolerance = 1e-8;
constexpr double kApproxTolerance = 1e-6;
constexpr double kMomentTolerance = 1e-6;
constexpr double kReconstructionTolerance = 1e-8;
constexpr std::uint64_t kValidationSeed = 0x5eed5eedULL;

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::vector<double> reversed(std::span<const double> v) { return {v.rbegin(), v.rend()}; }

Family family_of(std::string_view name) {
  if (name == "haar") return Family::haar;
  if (name == "dmey") return Family::discrete_meyer;
  if (starts_with(name, "db")) return Family::daubechies;
  if (starts_with(name, "sym")) return Family::symlet;
  if (starts_with(name, "coif")) return Family::coiflet;
  if (starts_with(name, "bior")) return Family::biorthogonal;
  return Family::reverse_biorthogonal;
}

// Vanishing moments of the analysis wavelet, i.e. the order of the zero of
// rec_lo at z = -1.
int declared_vanishing_moments(std::string_view name, Family family) {
  switch (family) {
    case Family::haar:
    case Family::discrete_meyer:
      return 1;
    case Family::daubechies:
      return std::stoi(std::string(name.substr(2)));
    case Family::symlet:
      return std::stoi(std::string(name.substr(3)));
    case Family::coiflet:
      return 2 * std::stoi(std::string(name.substr(4)));
    case Family::biorthogonal:
      return name[4] - '0';
    case Family::reverse_biorthogonal:
      // The 5.5 pair is not a spline pair: its shorter filter has only a
      // fourfold zero at Nyquist.
      if (name == "rbio5.5") return 4;
      return name[6] - '0';
  }
  return 0;
}

std::string valid_names_list() {
  std::string out;
  for (const auto& n : default_catalog_names()) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

WaveletSpec assemble(std::string_view name, std::vector<double> dec_lo, std::vector<double> rec_lo) {
  WaveletSpec spec;
  spec.name = std::string(name);
  spec.family = family_of(name);
  spec.orthogonal = rec_lo.empty();
  if (spec.orthogonal) rec_lo = reversed(dec_lo);
  spec.dec_hi = qmf_highpass(reversed(rec_lo));
  spec.rec_hi = reversed(qmf_highpass(dec_lo));
  spec.dec_lo = std::move(dec_lo);
  spec.rec_lo = std::move(rec_lo);
  spec.support_length = spec.dec_lo.size();
  spec.vanishing_moments = declared_vanishing_moments(name, spec.family);
  spec.approximate = spec.family == Family::discrete_meyer;
  return spec;
}

ValidationCheck make_check(std::string name, double residual, double tolerance) {
  // NaN residuals fail.
  const bool passed = residual <= tolerance;
  return {std::move(name), residual, tolerance, passed};
}

// max_k |sum_n a[n] b[n - 2k] - delta(k)|
double double_shift_residual(std::span<const double> a, std::span<const double> b) {
  const auto la = static_cast<std::ptrdiff_t>(a.size());
  const auto lb = static_cast<std::ptrdiff_t>(b.size());
  const std::ptrdiff_t reach = std::max(la, lb);
  double worst = 0.0;
  for (std::ptrdiff_t k = -reach / 2; k <= reach / 2; ++k) {
    double s = 0.0;
    for (std::ptrdiff_t n = 0; n < la; ++n) {
      const std::ptrdiff_t m = n - 2 * k;
      if (m >= 0 && m < lb) s += a[n] * b[m];
    }
    worst = std::max(worst, std::abs(s - (k == 0 ? 1.0 : 0.0)));
  }
  return worst;
}

double max_abs_difference(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Moments are taken in the centred, scaled coordinate t in [-1, 1]; vanishing
// is invariant under that change of variable and it avoids the cancellation of
// raw n^p sums for long filters.
double moment_residual(std::span<const double> highpass, int moments) {
  if (moments <= 0 || highpass.empty()) return 0.0;
  double peak = 0.0;
  for (double v : highpass) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return std::numeric_limits<double>::infinity();
  const double centre = (static_cast<double>(highpass.size()) - 1.0) / 2.0;
  const double half_width = std::max(centre, 1.0);
  double worst = 0.0;
  for (int p = 0; p < moments; ++p) {
    double s = 0.0;
    for (std::size_t n = 0; n < highpass.size(); ++n) {
      s += std::pow((static_cast<double>(n) - centre) / half_width, p) * highpass[n];
    }
    worst = std::max(worst, std::abs(s) / peak);
  }
  return worst;
}

double reconstruction_residual(const WaveletSpec& spec) {
  std::mt19937_64 rng(kValidationSeed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(256);
  for (auto& v : x) v = normal(rng);
  try {
    const auto y = iswt(swt_forward(x, spec, 3), spec);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      num += (y[i] - x[i]) * (y[i] - x[i]);
      den += x[i] * x[i];
    }
    return std::sqrt(num / den);
  } catch (const std::exception&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::haar: return "haar";
    case Family::daubechies: return "daubechies";
    case Family::symlet: return "symlet";
    case Family::coiflet: return "coiflet";
    case Family::discrete_meyer: return "discrete_meyer";
    case Family::biorthogonal: return "biorthogonal";
    case Family::reverse_biorthogonal: return "reverse_biorthogonal";
  }
  return "unknown";
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(std::string_view check_name) const {
  for (const auto& c : checks) {
    if (c.name == check_name) return &c;
  }
  return nullptr;
}

std::vector<double> qmf_highpass(std::span<const double> lowpass) {
  if (lowpass.empty()) throw std::invalid_argument("qmf_highpass: empty lowpass filter");
  const std::size_t len = lowpass.size();
  std::vector<double> g(len);
  for (std::size_t n = 0; n < len; ++n) {
    const double v = lowpass[len - 1 - n];
    g[n] = (n % 2 == 0) ? v : -v;
  }
  return g;
}

std::vector<std::string> default_catalog_names() {
  std::vector<std::string> names{"haar"};
  for (int i = 2; i <= 10; ++i) names.push_back("db" + std::to_string(i));
  for (int i = 2; i <= 10; ++i) names.push_back("sym" + std::to_string(i));
  names.emplace_back("sym20");
  for (int i = 1; i <= 5; ++i) names.push_back("coif" + std::to_string(i));
  names.emplace_back("dmey");
  for (const char* prefix : {"bior", "rbio"}) {
    for (const char* order : {"1.1", "1.3", "1.5", "2.2", "2.4", "2.6", "2.8", "3.1", "3.3",
                              "3.5", "3.7", "3.9", "4.4", "5.5", "6.8"}) {
      names.push_back(std::string(prefix) + order);
    }
  }
  return names;
}

WaveletSpec make_wavelet(std::string_view name) {
  if (name == "dmey") return assemble(name, meyer_lowpass(62), {});
  for (const auto& table : detail::lowpass_tables()) {
    if (table.name == name) return assemble(name, table.dec_lo, table.rec_lo);
  }
  throw std::invalid_argument("unknown wavelet '" + std::string(name) +
                              "'; valid names: " + valid_names_list());
}

std::vector<WaveletSpec> build_catalog(const std::optional<std::vector<std::string>>& selection) {
  const std::vector<std::string> names = selection ? *selection : default_catalog_names();
  std::vector<WaveletSpec> catalog;
  catalog.reserve(names.size());
  // Resolve every name before building so an unknown one fails fast.
  const auto known = default_catalog_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw std::invalid_argument("unknown wavelet '" + n + "'; valid names: " + valid_names_list());
    }
  }
  for (const auto& n : names) {
    auto spec = make_wavelet(n);
    const auto report = validate_wavelet(spec);
    if (!report.passed()) {
      for (const auto& c : report.checks) {
        if (!c.passed) {
          throw std::logic_error("catalog wavelet " + n + " failed check " + c.name);
        }
      }
    }
    catalog.push_back(std::move(spec));
  }
  return catalog;
}

ValidationReport validate_wavelet(const WaveletSpec& spec) {
  ValidationReport report;
  report.wavelet_name = spec.name;
  report.approximate = spec.approximate;
  const double tier = spec.approximate ? kApproxTolerance : kOrthoTolerance;

  double lo_sum = 0.0;
  for (double v : spec.dec_lo) lo_sum += v;
  double hi_sum = 0.0;
  for (double v : spec.dec_hi) hi_sum += v;
  report.checks.push_back(make_check("lowpass_sum", std::abs(lo_sum - std::numbers::sqrt2), kSumTolerance));
  report.checks.push_back(make_check("highpass_sum", std::abs(hi_sum), kSumTolerance));

  if (spec.orthogonal) {
    report.checks.push_back(make_check("orthonormality", double_shift_residual(spec.dec_lo, spec.dec_lo), tier));
  } else {
    report.checks.push_back(make_check("duality", double_shift_residual(spec.dec_lo, reversed(spec.rec_lo)), tier));
  }

  // The highpass pair must follow from the lowpass pair; for orthogonal
  // families the synthesis filters must also be the time-reversed analysis ones.
  double structure = 0.0;
  if (!spec.dec_lo.empty() && !spec.rec_lo.empty()) {
    structure = std::max(max_abs_difference(spec.dec_hi, qmf_highpass(reversed(spec.rec_lo))),
                         max_abs_difference(spec.rec_hi, reversed(qmf_highpass(spec.dec_lo))));
    if (spec.orthogonal) {
      structure = std::max(structure, max_abs_difference(spec.rec_lo, reversed(spec.dec_lo)));
    }
  } else {
    structure = std::numeric_limits<double>::infinity();
  }
  report.checks.push_back(make_check("filter_structure", structure, 0.0));

  report.checks.push_back(make_check("vanishing_moments", moment_residual(spec.dec_hi, spec.vanishing_moments),
                                     kMomentTolerance));
  report.checks.push_back(make_check("perfect_reconstruction", reconstruction_residual(spec),
                                     spec.approximate ? kApproxTolerance : kReconstructionTolerance));
  return report;
}

}  // namespace eegswt
