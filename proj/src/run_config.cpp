#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "eegswt/error.hpp"
#include "eegswt/run_config.hpp"
#include "eegswt/swt.hpp"
#include "eegswt/wavelet.hpp"

namespace eegswt {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<std::string> split_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = std::min(list.find(',', pos), list.size());
    const auto item = trim(list.substr(pos, comma - pos));
    if (!item.empty()) out.emplace_back(item);
    pos = comma + 1;
  }
  return out;
}

void RunConfig::validate() const {
  const auto known = default_catalog_names();
  std::set<std::string> seen;
  for (const auto& w : wavelets) {
    if (std::find(known.begin(), known.end(), w) == known.end()) {
      try {
        make_wavelet(w);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (!seen.insert(w).second) throw UsageError("wavelet '" + w + "' listed twice");
  }
  if (bands.empty()) throw UsageError("no bands selected");
  if (levels < 0 || levels > 30) throw UsageError("levels must lie in [1, 30]");
  if (!(sampling_rate_hz >= 0.0) || !std::isfinite(sampling_rate_hz)) {
    throw UsageError("sampling rate must be positive");
  }
  if (snrs_db.empty()) throw UsageError("no SNR values given");
  for (double s : snrs_db) {
    if (!std::isfinite(s)) throw UsageError("SNR values must be finite");
  }
  if (n_trials < 1) throw UsageError("trials must be >= 1");
  if (!level_override.empty()) {
    std::vector<LevelSelection> sel;
    try {
      sel = parse_level_selection(level_override);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (levels > 0) {
      for (const auto& s : sel) {
        if (s.level > levels) {
          throw UsageError("level override '" + level_override + "' exceeds decomposition depth " +
                           std::to_string(levels));
        }
      }
    }
  }
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  std::vector<std::pair<std::string, std::string>> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = std::string_view(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
    }
    auto key = trim(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.remove_prefix(1);
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError(path.string() + ":" + std::to_string(line_no) + ": empty key");
    out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

}  // namespace eegswt
