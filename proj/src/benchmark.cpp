#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eegswt/benchmark.hpp"
#include "eegswt/gof.hpp"
#include "eegswt/parallel.hpp"
#include "eegswt/swt.hpp"

namespace eegswt {

const GofRecord* RankingTable::find(std::string_view wavelet, Band band, double snr_db) const {
  for (const auto& r : records) {
    if (r.wavelet_name == wavelet && r.band == band && r.snr_db == snr_db) return &r;
  }
  return nullptr;
}

std::uint64_t trial_seed(std::uint64_t master_seed, Band band, std::size_t snr_index, std::size_t trial_index) {
  const std::uint64_t index = (static_cast<std::uint64_t>(band) << 56) |
                              (static_cast<std::uint64_t>(snr_index) << 40) |
                              static_cast<std::uint64_t>(trial_index);
  return mix_seed(master_seed, index);
}

std::map<std::string, double> grand_means(std::span<const GofRecord> records) {
  std::map<std::string, std::pair<double, std::size_t>> sums;
  for (const auto& r : records) {
    auto& [sum, count] = sums[r.wavelet_name];
    sum += r.mean_gof;
    ++count;
  }
  std::map<std::string, double> out;
  for (const auto& [name, acc] : sums) out[name] = acc.first / static_cast<double>(acc.second);
  return out;
}

std::vector<std::string> rank(std::span<const GofRecord> records) {
  if (records.empty()) throw std::invalid_argument("rank: no records");
  const auto means = grand_means(records);
  std::vector<std::string> names;
  names.reserve(means.size());
  for (const auto& [name, mean] : means) names.push_back(name);
  std::stable_sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
    const double ma = means.at(a);
    const double mb = means.at(b);
    if (ma != mb) return ma > mb;
    return a < b;
  });
  return names;
}

RankingTable run_benchmark(std::span<const WaveletSpec> catalog, const BenchmarkConfig& config) {
  if (catalog.empty()) throw std::invalid_argument("run_benchmark: empty catalog");
  if (config.n_trials < 1) throw std::invalid_argument("run_benchmark: n_trials must be >= 1");
  if (config.bands.empty() || config.snrs_db.empty()) {
    throw std::invalid_argument("run_benchmark: need at least one band and one SNR");
  }
  const double fs = config.trial.sampling_rate_hz;
  const int levels = config.levels > 0 ? config.levels : default_levels(fs);
  const std::size_t n_bands = config.bands.size();
  const std::size_t n_snrs = config.snrs_db.size();
  const std::size_t n_trials = config.n_trials;
  const std::size_t n_cells = n_bands * n_snrs;

  // Trials are shared by all wavelets.
  std::vector<SyntheticTrial> trials(n_cells * n_trials);
  parallel_for(trials.size(), config.threads, [&](std::size_t i) {
    const std::size_t cell = i / n_trials;
    const std::size_t t = i % n_trials;
    const Band band = config.bands[cell / n_snrs];
    const std::size_t s = cell % n_snrs;
    trials[i] = make_trial(band, config.snrs_db[s], trial_seed(config.master_seed, band, s, t), config.trial);
  });

  std::vector<std::vector<LevelSelection>> selections;
  selections.reserve(n_bands);
  for (Band b : config.bands) selections.push_back(select_levels(default_band(b), fs, levels));

  std::vector<GofRecord> records(catalog.size() * n_cells);
  parallel_for(catalog.size(), config.threads, [&](std::size_t w) {
    const WaveletSpec& wavelet = catalog[w];
    std::vector<double> scores(n_trials);
    for (std::size_t cell = 0; cell < n_cells; ++cell) {
      const std::size_t b = cell / n_snrs;
      for (std::size_t t = 0; t < n_trials; ++t) {
        const auto& trial = trials[cell * n_trials + t];
        const auto extracted = extract_levels(trial.mixed, wavelet, selections[b], levels);
        scores[t] = gof(trial.clean, extracted);
      }
      double mean = 0.0;
      for (double g : scores) mean += g;
      mean /= static_cast<double>(n_trials);
      double var = 0.0;
      for (double g : scores) var += (g - mean) * (g - mean);
      const double sd = n_trials > 1 ? std::sqrt(var / static_cast<double>(n_trials - 1)) : 0.0;
      records[w * n_cells + cell] =
          GofRecord{wavelet.name, config.bands[b], config.snrs_db[cell % n_snrs], n_trials, mean, sd};
    }
  });

  std::sort(records.begin(), records.end(), [](const GofRecord& a, const GofRecord& b) {
    if (a.wavelet_name != b.wavelet_name) return a.wavelet_name < b.wavelet_name;
    if (a.band != b.band) return a.band < b.band;
    return a.snr_db < b.snr_db;
  });

  RankingTable table;
  table.ranking = rank(records);
  table.grand_means = grand_means(records);
  table.records = std::move(records);
  return table;
}

}  // namespace eegswt
