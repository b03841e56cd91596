#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace eegswt {

// Channel-major samples; every channel has the same length.
struct MultichannelRecording {
  std::vector<std::string> channel_names;
  std::vector<std::vector<double>> samples;
  double sampling_rate_hz{0.0};

  std::size_t n_channels() const { return samples.size(); }
  std::size_t n_samples() const { return samples.empty() ? 0 : samples.front().size(); }
  const std::vector<double>& channel(std::string_view name) const;
};

// CSV layout:
//   # fs=<hz>
//   name_1,name_2,...
//   v_11,v_12,...
// The fs line is required unless fallback_fs_hz > 0. Blank lines are skipped.
// Throws DataError with the offending row/column.
MultichannelRecording parse_recording(std::istream& in, double fallback_fs_hz = 0.0);
MultichannelRecording read_recording(const std::filesystem::path& path,
                                     double fallback_fs_hz = 0.0);

void write_recording(std::ostream& out, const MultichannelRecording& recording);
void write_recording(const std::filesystem::path& path, const MultichannelRecording& recording);

// Shortest decimal text with 17 significant digits; round-trips bit-exactly.
std::string format_double(double value);

// One value per line.
void write_column(const std::filesystem::path& path, std::span<const double> values);

}  // namespace eegswt
