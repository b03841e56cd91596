#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "eegswt/bands.hpp"

namespace eegswt {

// Settings shared by the command-line subcommands. Zero means "derive it"
// for levels (default_levels(fs)), sampling rate (from the input file) and
// threads (hardware concurrency).
struct RunConfig {
  std::vector<std::string> wavelets;  // empty = default catalog
  std::vector<Band> bands{kAllBands.begin(), kAllBands.end()};
  int levels{0};
  double sampling_rate_hz{0.0};
  std::vector<double> snrs_db{-5.0, 10.0, 15.0};
  std::size_t n_trials{100};
  std::uint64_t master_seed{0};
  std::filesystem::path output;
  std::string level_override;
  unsigned threads{0};

  // Checks every field against the preconditions of the operations it feeds.
  // Throws UsageError describing the first violation.
  void validate() const;
};

// Flat "key = value" lines; '#' starts a comment. Keys mirror long CLI flags
// without the leading dashes. Throws UsageError on malformed lines.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

// Splits "a,b,c" into trimmed, non-empty items.
std::vector<std::string> split_list(std::string_view list);

}  // namespace eegswt
