#include <fstream>
#include <ostream>

#include <json.hpp>

#include "eegswt/error.hpp"
#include "eegswt/recording.hpp"
#include "eegswt/report.hpp"

namespace eegswt {

std::string validation_json_line(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["wavelet"] = report.wavelet_name;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json check;
    check["name"] = c.name;
    check["residual"] = c.residual;
    check["tolerance"] = c.tolerance;
    check["passed"] = c.passed;
    j["checks"].push_back(std::move(check));
  }
  return j.dump();
}

void write_records_csv(std::ostream& out, const RankingTable& table) {
  out << "wavelet,band,snr_db,n_trials,mean_gof,std_gof\n";
  for (const auto& r : table.records) {
    out << r.wavelet_name << ',' << band_name(r.band) << ',' << format_double(r.snr_db) << ',' << r.n_trials << ','
        << format_double(r.mean_gof) << ',' << format_double(r.std_gof) << '\n';
  }
}

std::string ranking_json(const RankingTable& table) {
  nlohmann::ordered_json j;
  j["ranking"] = table.ranking;
  nlohmann::ordered_json means = nlohmann::ordered_json::object();
  for (const auto& name : table.ranking) means[name] = table.grand_means.at(name);
  j["grand_means"] = std::move(means);
  return j.dump(2) + "\n";
}

void write_benchmark(const std::filesystem::path& dir, const RankingTable& table) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  {
    std::ofstream out(dir / "records.csv", std::ios::binary);
    if (!out) throw DataError("cannot write " + (dir / "records.csv").string());
    write_records_csv(out, table);
  }
  std::ofstream out(dir / "ranking.json", std::ios::binary);
  if (!out) throw DataError("cannot write " + (dir / "ranking.json").string());
  out << ranking_json(table);
}

void write_psd_csv(std::ostream& out, const PsdEstimate& psd) {
  out << "frequency_hz,power\n";
  for (std::size_t k = 0; k < psd.frequencies.size(); ++k) {
    out << format_double(psd.frequencies[k]) << ',' << format_double(psd.power[k]) << '\n';
  }
}

}  // namespace eegswt
