#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "eegswt/benchmark.hpp"
#include "eegswt/cli.hpp"
#include "eegswt/error.hpp"
#include "eegswt/psd.hpp"
#include "eegswt/recording.hpp"
#include "eegswt/report.hpp"
#include "eegswt/resample.hpp"
#include "eegswt/run_config.hpp"
#include "eegswt/signal_gen.hpp"
#include "eegswt/swt.hpp"

namespace eegswt {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

WaveletSpec wavelet_or_usage_error(const std::string& name) {
  try {
    return make_wavelet(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Band band_or_usage_error(const std::string& name) {
  try {
    return parse_band(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Band> parse_band_list(const std::string& list) {
  if (list.empty() || list == "all") return {kAllBands.begin(), kAllBands.end()};
  std::vector<Band> out;
  for (const auto& item : split_list(list)) out.push_back(band_or_usage_error(item));
  return out;
}

// Channels to process: the named one, or all of them.
std::vector<std::size_t> channel_indices(const MultichannelRecording& rec, const std::string& channel) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < rec.n_channels(); ++c) {
    if (channel.empty() || rec.channel_names[c] == channel) out.push_back(c);
  }
  if (out.empty()) throw UsageError("input has no channel named '" + channel + "'");
  return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

// Appends "--key=value" for every config-file key that the chosen subcommand
// (or the root) understands and that was not given on the command line.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }
  if (config_path.empty()) return args;

  CLI::App* sub = nullptr;
  for (const auto& a : args) {
    if ((sub = app.get_subcommand_no_throw(a)) != nullptr) break;
  }
  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> extra;
  for (const auto& [key, value] : read_config_file(config_path)) {
    const std::string flag = "--" + key;
    if (key == "config") continue;
    const bool known_here = (sub && sub->get_option_no_throw(flag)) || app.get_option_no_throw(flag);
    if (!known_here) {
      const auto subs = app.get_subcommands([](CLI::App*) { return true; });
      const bool known_elsewhere = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) {
        return s->get_option_no_throw(flag) != nullptr;
      });
      if (!known_elsewhere) throw UsageError("unknown key '" + key + "' in config file " + config_path);
      continue;
    }
    if (!given(flag)) extra.push_back(flag + "=" + value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stationary wavelet transform EEG band extraction and mother-wavelet benchmarking", "eegswt"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string config_path;
  app.add_option("--threads", cfg.threads, "Worker threads, 0 = one per core");
  app.add_option("--config", config_path, "Flat key = value file mirroring long flags; command-line flags win");

  std::string wavelet_name, band, input, channel, catalog = "all", bands_list = "all";
  std::filesystem::path output;
  bool all = false;
  double resample_hz = 0.0, snr_db = 0.0;
  double window_ms = 800.0, burst_ms = 400.0, overlap = 0.5;
  std::size_t segment = 0;
  TrialConfig trial_config;

  auto* validate = app.add_subcommand("validate", "Check filter-bank admissibility, one JSON line per wavelet");
  auto* one = validate->add_option("--wavelet", wavelet_name, "Wavelet to check");
  validate->add_flag("--all", all, "Check the whole default catalog (default)")->excludes(one);

  auto* decompose = app.add_subcommand("decompose", "Write every SWT coefficient sequence as a one-column CSV");
  decompose->add_option("--input", input, "Recording CSV")->required();
  decompose->add_option("--wavelet", wavelet_name, "Mother wavelet")->required();
  decompose->add_option("--levels", cfg.levels, "Decomposition depth (default: deepest band reaches 2 Hz)");
  decompose->add_option("--fs", cfg.sampling_rate_hz, "Sampling rate in Hz (overrides the file)");
  decompose->add_option("--channel", channel, "Only this channel");
  decompose->add_option("--out", output, "Output directory")->required();

  auto* extract = app.add_subcommand("extract", "Extract one EEG band by SWT coefficient selection");
  extract->add_option("--input", input, "Recording CSV")->required();
  extract->add_option("--wavelet", wavelet_name, "Mother wavelet")->required();
  auto* band_opt = extract->add_option("--band", band, "delta, theta, alpha, beta or gamma");
  auto* override_opt =
      extract->add_option("--levels-override", cfg.level_override, "Explicit selection such as a6,a7,d7");
  extract->add_option("--levels", cfg.levels, "Decomposition depth (default: deepest band reaches 2 Hz)");
  extract->add_option("--fs", cfg.sampling_rate_hz, "Sampling rate in Hz (overrides the file)");
  extract->add_option("--resample", resample_hz, "Process at this rate, e.g. 2048, and resample back");
  extract->add_option("--channel", channel, "Only this channel");
  extract->add_option("--out", output, "Output CSV")->required();

  auto* gen = app.add_subcommand("gen", "Generate a synthetic burst-in-pink-noise trial");
  gen->add_option("--band", band, "delta, theta, alpha, beta or gamma")->required();
  gen->add_option("--snr", snr_db, "Signal-to-noise ratio in dB")->required();
  gen->add_option("--seed", cfg.master_seed, "Trial seed")->required();
  gen->add_option("--fs", trial_config.sampling_rate_hz, "Sampling rate in Hz")->capture_default_str();
  gen->add_option("--window-ms", window_ms, "Window length")->capture_default_str();
  gen->add_option("--burst-ms", burst_ms, "Burst length")->capture_default_str();
  gen->add_option("--out", output, "Output CSV")->required();

  auto* bench = app.add_subcommand("bench", "Run the wavelet x band x SNR goodness-of-fit benchmark");
  bench->add_option("--catalog", catalog, "Comma-separated wavelets or 'all'")->capture_default_str();
  bench->add_option("--bands", bands_list, "Comma-separated bands or 'all'")->capture_default_str();
  bench->add_option("--snrs", cfg.snrs_db, "Comma-separated SNRs in dB")->delimiter(',')->capture_default_str();
  bench->add_option("--trials", cfg.n_trials, "Trials per cell")->capture_default_str();
  bench->add_option("--seed", cfg.master_seed, "Master seed")->capture_default_str();
  bench->add_option("--levels", cfg.levels, "Decomposition depth (default 8 at 1000 Hz)");
  bench->add_option("--out", output, "Output directory")->required();

  auto* psd = app.add_subcommand("psd", "Welch power spectral density of one channel");
  psd->add_option("--input", input, "Recording CSV")->required();
  psd->add_option("--fs", cfg.sampling_rate_hz, "Sampling rate in Hz (overrides the file)");
  psd->add_option("--channel", channel, "Channel (default: first)");
  psd->add_option("--segment", segment, "Segment length in samples (default: one second)");
  psd->add_option("--overlap", overlap, "Segment overlap fraction")->capture_default_str();
  psd->add_option("--out", output, "Output CSV")->required();

  try {
    auto argv = merge_config(app, args);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    cfg.output = output;
    if (validate->parsed()) {
      if (!wavelet_name.empty()) cfg.wavelets = {wavelet_name};
      cfg.validate();
      const auto names = cfg.wavelets.empty() ? default_catalog_names() : cfg.wavelets;
      bool ok = true;
      for (const auto& name : names) {
        const auto report = validate_wavelet(make_wavelet(name));
        ok = ok && report.passed();
        out << validation_json_line(report) << '\n';
      }
      return ok ? kExitOk : kExitData;
    }

    if (decompose->parsed()) {
      cfg.wavelets = {wavelet_name};
      cfg.validate();
      const auto wavelet = wavelet_or_usage_error(wavelet_name);
      const auto rec = read_recording(input, cfg.sampling_rate_hz);
      const double fs = cfg.sampling_rate_hz > 0.0 ? cfg.sampling_rate_hz : rec.sampling_rate_hz;
      const int levels = cfg.levels > 0 ? cfg.levels : default_levels(fs);
      const auto chans = channel_indices(rec, channel);
      std::filesystem::create_directories(output);
      for (std::size_t c : chans) {
        const auto d = swt_forward(rec.samples[c], wavelet, levels, fs);
        const std::string prefix = chans.size() > 1 ? rec.channel_names[c] + "." : "";
        for (int j = 1; j <= levels; ++j) {
          const auto idx = static_cast<std::size_t>(j - 1);
          write_column(output / (prefix + "approx_" + std::to_string(j) + ".csv"), d.approx[idx]);
          write_column(output / (prefix + "detail_" + std::to_string(j) + ".csv"), d.detail[idx]);
        }
      }
      return kExitOk;
    }

    if (extract->parsed()) {
      cfg.wavelets = {wavelet_name};
      if (!band_opt->count() && !override_opt->count()) throw UsageError("extract needs --band or --levels-override");
      if (!band.empty()) cfg.bands = {band_or_usage_error(band)};
      if (resample_hz < 0.0) throw UsageError("--resample must be positive");
      cfg.validate();
      const auto wavelet = wavelet_or_usage_error(wavelet_name);
      const auto rec = read_recording(input, cfg.sampling_rate_hz);
      const double fs = cfg.sampling_rate_hz > 0.0 ? cfg.sampling_rate_hz : rec.sampling_rate_hz;
      const double work_fs = resample_hz > 0.0 ? resample_hz : fs;
      const int levels = cfg.levels > 0 ? cfg.levels : default_levels(work_fs);
      const auto selection = cfg.level_override.empty() ? select_levels(default_band(cfg.bands.front()), work_fs, levels)
                                                        : parse_level_selection(cfg.level_override);
      for (const auto& s : selection) {
        if (s.level > levels) throw UsageError("level override exceeds decomposition depth " + std::to_string(levels));
      }
      MultichannelRecording result;
      result.sampling_rate_hz = fs;
      for (std::size_t c : channel_indices(rec, channel)) {
        std::vector<double> x = rec.samples[c];
        if (resample_hz > 0.0) x = resample(x, fs, work_fs);
        auto y = extract_levels(x, wavelet, selection, levels);
        if (resample_hz > 0.0) {
          y = resample(y, work_fs, fs);
          y.resize(rec.n_samples(), 0.0);
        }
        result.channel_names.push_back(rec.channel_names[c]);
        result.samples.push_back(std::move(y));
      }
      auto file = open_output(output);
      write_recording(file, result);
      return kExitOk;
    }

    if (gen->parsed()) {
      cfg.bands = {band_or_usage_error(band)};
      cfg.validate();
      trial_config.window_ms = window_ms;
      trial_config.burst_ms = burst_ms;
      const auto trial = make_trial(cfg.bands.front(), snr_db, cfg.master_seed, trial_config);
      MultichannelRecording rec;
      rec.sampling_rate_hz = trial.sampling_rate_hz;
      rec.channel_names = {"clean", "noise_scaled", "mixed"};
      rec.samples = {trial.clean, trial.noise, trial.mixed};
      auto file = open_output(output);
      write_recording(file, rec);
      return kExitOk;
    }

    if (bench->parsed()) {
      if (catalog != "all") cfg.wavelets = split_list(catalog);
      cfg.bands = parse_band_list(bands_list);
      cfg.validate();
      const auto specs = build_catalog(cfg.wavelets.empty() ? std::nullopt
                                                            : std::optional<std::vector<std::string>>(cfg.wavelets));
      BenchmarkConfig bc;
      bc.bands = cfg.bands;
      bc.snrs_db = cfg.snrs_db;
      bc.n_trials = cfg.n_trials;
      bc.master_seed = cfg.master_seed;
      bc.levels = cfg.levels;
      bc.threads = cfg.threads;
      const auto table = run_benchmark(specs, bc);
      write_benchmark(output, table);
      out << "best: " << table.ranking.front() << " (grand mean GOF "
          << format_double(table.grand_means.at(table.ranking.front())) << ")\n";
      return kExitOk;
    }

    if (psd->parsed()) {
      cfg.validate();
      const auto rec = read_recording(input, cfg.sampling_rate_hz);
      const double fs = cfg.sampling_rate_hz > 0.0 ? cfg.sampling_rate_hz : rec.sampling_rate_hz;
      const auto& x = channel.empty() ? rec.samples.front() : rec.channel(channel);
      const auto estimate = welch_psd(x, fs, WelchParams{segment, overlap});
      auto file = open_output(output);
      write_psd_csv(file, estimate);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace eegswt
