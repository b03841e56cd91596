#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "eegswt/benchmark.hpp"
#include "eegswt/psd.hpp"
#include "eegswt/wavelet.hpp"

namespace eegswt {

// {"wavelet": str, "checks": [{"name": str, "residual": float, "tolerance": float, "passed": bool}]}
std::string validation_json_line(const ValidationReport& report);

// Header wavelet,band,snr_db,n_trials,mean_gof,std_gof
void write_records_csv(std::ostream& out, const RankingTable& table);
// {"ranking": [names...], "grand_means": {name: float}}
std::string ranking_json(const RankingTable& table);
// Writes records.csv and ranking.json into dir, creating it if needed.
void write_benchmark(const std::filesystem::path& dir, const RankingTable& table);

// Header frequency_hz,power
void write_psd_csv(std::ostream& out, const PsdEstimate& psd);

}  // namespace eegswt
