#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "eegswt/error.hpp"
#include "eegswt/recording.hpp"

namespace eegswt {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool parse_number(std::string_view text, double& value) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// "# fs=2048" or "fs=2048"; returns false when the line is not an fs line.
bool parse_fs_line(std::string_view line, double& fs) {
  if (!line.empty() && line.front() == '#') line = trim(line.substr(1));
  if (line.substr(0, 3) != "fs=") return false;
  return parse_number(trim(line.substr(3)), fs);
}

}  // namespace

const std::vector<double>& MultichannelRecording::channel(std::string_view name) const {
  for (std::size_t c = 0; c < channel_names.size(); ++c) {
    if (channel_names[c] == name) return samples[c];
  }
  throw DataError("recording has no channel named '" + std::string(name) + "'");
}

MultichannelRecording parse_recording(std::istream& in, double fallback_fs_hz) {
  MultichannelRecording rec;
  double fs = 0.0;
  bool have_fs = false;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (!have_header && (line.front() == '#' || line.substr(0, 3) == "fs=")) {
      double value = 0.0;
      if (parse_fs_line(line, value)) {
        if (!(value > 0.0)) throw DataError("line " + std::to_string(line_no) + ": sampling rate must be positive");
        fs = value;
        have_fs = true;
      } else if (line.front() != '#') {
        throw DataError("line " + std::to_string(line_no) + ": malformed fs line");
      }
      continue;
    }
    if (line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (!have_header) {
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (fields[c].empty()) {
          throw DataError("line " + std::to_string(line_no) + ", column " + std::to_string(c + 1) +
                          ": empty channel name");
        }
        rec.channel_names.emplace_back(fields[c]);
      }
      rec.samples.resize(rec.channel_names.size());
      have_header = true;
      continue;
    }
    if (fields.size() != rec.channel_names.size()) {
      throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(rec.channel_names.size()) +
                      " values, found " + std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double value = 0.0;
      if (!parse_number(fields[c], value)) {
        throw DataError("line " + std::to_string(line_no) + ", column " + std::to_string(c + 1) + ": '" +
                        std::string(fields[c]) + "' is not a number");
      }
      rec.samples[c].push_back(value);
    }
  }
  if (!have_fs) {
    if (!(fallback_fs_hz > 0.0)) throw DataError("missing '# fs=<hz>' line and no sampling rate given");
    fs = fallback_fs_hz;
  }
  if (!have_header) throw DataError("missing channel-name header");
  if (rec.n_samples() == 0) throw DataError("recording has no samples");
  rec.sampling_rate_hz = fs;
  return rec;
}

MultichannelRecording read_recording(const std::filesystem::path& path, double fallback_fs_hz) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return parse_recording(in, fallback_fs_hz);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return {buf, ptr};
}

void write_recording(std::ostream& out, const MultichannelRecording& recording) {
  out << "# fs=" << format_double(recording.sampling_rate_hz) << '\n';
  for (std::size_t c = 0; c < recording.channel_names.size(); ++c) {
    out << (c ? "," : "") << recording.channel_names[c];
  }
  out << '\n';
  for (std::size_t i = 0; i < recording.n_samples(); ++i) {
    for (std::size_t c = 0; c < recording.n_channels(); ++c) {
      out << (c ? "," : "") << format_double(recording.samples[c][i]);
    }
    out << '\n';
  }
}

void write_recording(const std::filesystem::path& path, const MultichannelRecording& recording) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  write_recording(out, recording);
}

void write_column(const std::filesystem::path& path, std::span<const double> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  for (double v : values) out << format_double(v) << '\n';
}

}  // namespace eegswt
