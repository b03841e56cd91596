#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eegswt/bands.hpp"
#include "eegswt/signal_gen.hpp"
#include "eegswt/wavelet.hpp"

namespace eegswt {

struct GofRecord {
  std::string wavelet_name;
  Band band{Band::alpha};
  double snr_db{0.0};
  std::size_t n_trials{0};
  double mean_gof{0.0};
  double std_gof{0.0};
};

struct RankingTable {
  // Sorted by wavelet name, band, then SNR.
  std::vector<GofRecord> records;
  // Best first.
  std::vector<std::string> ranking;
  std::map<std::string, double> grand_means;

  const GofRecord* find(std::string_view wavelet, Band band, double snr_db) const;
};

struct BenchmarkConfig {
  std::vector<Band> bands{kAllBands.begin(), kAllBands.end()};
  std::vector<double> snrs_db{-5.0, 10.0, 15.0};
  std::size_t n_trials{100};
  std::uint64_t master_seed{0};
  TrialConfig trial{};
  // 0 picks default_levels(trial.sampling_rate_hz).
  int levels{0};
  // 0 = hardware concurrency.
  unsigned threads{1};
};

// Seed of trial `trial_index` in the cell (band, snrs_db[snr_index]):
// mix_seed(master, band << 56 | snr_index << 40 | trial_index). It does not
// depend on the wavelet, so every wavelet is scored on the same trials.
std::uint64_t trial_seed(std::uint64_t master_seed, Band band, std::size_t snr_index,
                         std::size_t trial_index);

// For every (wavelet, band, snr): extract the band from n_trials synthetic
// trials and aggregate gof(clean, extracted). Deterministic for a given config
// regardless of thread count.
RankingTable run_benchmark(std::span<const WaveletSpec> catalog, const BenchmarkConfig& config);

// Wavelet names by descending grand-mean GOF (mean of that wavelet's record
// means); ties broken lexicographically.
std::vector<std::string> rank(std::span<const GofRecord> records);

std::map<std::string, double> grand_means(std::span<const GofRecord> records);

}  // namespace eegswt
