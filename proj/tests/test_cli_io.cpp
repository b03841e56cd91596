#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <limits>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "eegswt/cli.hpp"
#include "eegswt/error.hpp"
#include "eegswt/recording.hpp"
#include "eegswt/run_config.hpp"
#include "test_support.hpp"

using namespace eegswt;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("eegswt_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("parse a well-formed recording") {
  std::istringstream in("# fs=250\nfz,cz\n1,2\n3,4\n5,6\n7,8\n");
  const auto rec = parse_recording(in);
  CHECK(rec.sampling_rate_hz == 250.0);
  CHECK(rec.channel_names == std::vector<std::string>{"fz", "cz"});
  CHECK(rec.n_channels() == 2);
  CHECK(rec.samples[0].size() == 4);
  CHECK(rec.samples[1].size() == 4);
  CHECK(rec.channel("cz") == std::vector<double>{2, 4, 6, 8});
  CHECK_THROWS(rec.channel("oz"));
}

TEST_CASE("recording errors carry a location") {
  auto error_of = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      parse_recording(in);
    } catch (const DataError& e) {
      return e.what();
    }
    return "";
  };
  const auto ragged = error_of("# fs=250\na,b\n1,2\n3\n");
  CHECK(ragged.find("line 4") != std::string::npos);
  const auto junk = error_of("# fs=250\na,b\n1,2\n3,x\n");
  CHECK(junk.find("line 4") != std::string::npos);
  CHECK(junk.find("column 2") != std::string::npos);
  CHECK_FALSE(error_of("a,b\n1,2\n").empty());
  CHECK_FALSE(error_of("# fs=250\n").empty());
  CHECK_FALSE(error_of("# fs=250\na,b\n").empty());
  std::istringstream fallback("a,b\n1,2\n");
  CHECK(parse_recording(fallback, 100.0).sampling_rate_hz == 100.0);
}

TEST_CASE("recordings round-trip bit for bit") {
  MultichannelRecording rec;
  rec.sampling_rate_hz = 2048.0;
  rec.channel_names = {"x", "y"};
  rec.samples = {oracle::random_signal(257, 1), oracle::random_signal(257, 2)};
  rec.samples[0][0] = 0.1;
  rec.samples[0][1] = 1e-300;
  rec.samples[0][2] = -std::numeric_limits<double>::max();
  rec.samples[1][0] = 5e-324;
  std::stringstream buffer;
  write_recording(buffer, rec);
  const auto back = parse_recording(buffer);
  CHECK(back.channel_names == rec.channel_names);
  CHECK(back.sampling_rate_hz == rec.sampling_rate_hz);
  CHECK(back.samples == rec.samples);
}

TEST_CASE("format_double") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("config files and validation") {
  TempDir tmp;
  const auto path = tmp.path / "run.cfg";
  std::ofstream(path) << "# comment\ntrials = 5\n\ncatalog = haar, db2\n";
  const auto kv = read_config_file(path);
  REQUIRE(kv.size() == 2);
  CHECK(kv[0] == std::pair<std::string, std::string>{"trials", "5"});
  CHECK(kv[1] == std::pair<std::string, std::string>{"catalog", "haar, db2"});
  std::ofstream(tmp.path / "bad.cfg") << "no equals sign here\n";
  CHECK_THROWS_AS(read_config_file(tmp.path / "bad.cfg"), UsageError);
  CHECK(split_list(" a, b ,,c ") == std::vector<std::string>{"a", "b", "c"});

  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.n_trials = 0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.n_trials = 1;
  cfg.wavelets = {"nope"};
  CHECK_THROWS_AS(cfg.validate(), UsageError);
}

TEST_CASE("dispatch usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"extract"}).code == 1);
  CHECK(run({"validate", "--wavelet", "zzz9"}).code == 1);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("bench") != std::string::npos);
  for (const char* sub : {"validate", "decompose", "extract", "gen", "bench", "psd"}) {
    CHECK(run({sub, "--help"}).code == 0);
  }
}

TEST_CASE("validate prints one JSON line per wavelet") {
  const auto one = run({"validate", "--wavelet", "haar"});
  CHECK(one.code == 0);
  const auto rows = lines(one.out);
  REQUIRE(rows.size() == 1);
  const auto doc = nlohmann::json::parse(rows[0]);
  CHECK(doc.at("wavelet") == "haar");
  for (const auto& check : doc.at("checks")) {
    CHECK(check.size() == 4);
    CHECK(check.at("name").is_string());
    CHECK(check.at("residual").is_number());
    CHECK(check.at("tolerance").is_number());
    CHECK(check.at("passed") == true);
  }
  const auto all = run({"validate", "--all"});
  CHECK(all.code == 0);
  CHECK(lines(all.out).size() == 56);
}

TEST_CASE("gen, extract, decompose and psd end to end") {
  TempDir tmp;
  const auto trial = tmp.path / "trial.csv";
  REQUIRE(run({"gen", "--band", "alpha", "--snr", "10", "--seed", "3", "--out", trial.string()}).code == 0);
  const auto rec = read_recording(trial);
  CHECK(rec.channel_names == std::vector<std::string>{"clean", "noise_scaled", "mixed"});
  CHECK(rec.n_samples() == 800);
  CHECK(rec.sampling_rate_hz == 1000.0);
  const auto text = lines(slurp(trial));
  CHECK(text[1] == "clean,noise_scaled,mixed");
  CHECK(slurp(trial).find('\r') == std::string::npos);

  const auto extracted = tmp.path / "alpha.csv";
  const auto ex = run({"extract", "--input", trial.string(), "--wavelet", "sym20", "--band", "alpha", "--channel", "mixed",
                       "--out", extracted.string()});
  CHECK(ex.code == 0);
  REQUIRE(fs::exists(extracted));
  CHECK(read_recording(extracted).n_samples() == 800);

  const auto manual = tmp.path / "manual.csv";
  CHECK(run({"extract", "--input", trial.string(), "--wavelet", "sym9", "--levels-override", "a6,a7,d7", "--channel",
             "mixed", "--out", manual.string()})
            .code == 0);
  CHECK(read_recording(manual).n_samples() == 800);

  const auto resampled = tmp.path / "resampled.csv";
  CHECK(run({"extract", "--input", trial.string(), "--wavelet", "sym20", "--band", "alpha", "--resample", "2048",
             "--channel", "mixed", "--levels", "9", "--out", resampled.string()})
            .code == 0);
  CHECK(read_recording(resampled).n_samples() == 800);

  const auto coeffs = tmp.path / "coeffs";
  CHECK(run({"decompose", "--input", trial.string(), "--wavelet", "db4", "--levels", "3", "--channel", "mixed", "--out",
             coeffs.string()})
            .code == 0);
  for (const char* name : {"approx_1.csv", "approx_3.csv", "detail_1.csv", "detail_3.csv"}) {
    CAPTURE(name);
    REQUIRE(fs::exists(coeffs / name));
    CHECK(lines(slurp(coeffs / name)).size() == 800);
  }

  const auto psd = tmp.path / "psd.csv";
  CHECK(run({"psd", "--input", trial.string(), "--channel", "clean", "--out", psd.string()}).code == 0);
  const auto psd_lines = lines(slurp(psd));
  CHECK(psd_lines[0] == "frequency_hz,power");
  CHECK(psd_lines.size() == 1 + 401);

  CHECK(run({"extract", "--input", (tmp.path / "missing.csv").string(), "--wavelet", "sym20", "--band", "alpha", "--out",
             extracted.string()})
            .code == 2);
  std::ofstream(tmp.path / "ragged.csv") << "# fs=100\na,b\n1\n";
  CHECK(run({"psd", "--input", (tmp.path / "ragged.csv").string(), "--out", psd.string()}).code == 2);
}

TEST_CASE("bench writes the report schemas and is repeatable") {
  TempDir tmp;
  const std::vector<std::string> common{"bench", "--catalog", "haar,sym4", "--bands", "alpha,gamma", "--snrs", "-5,15",
                                        "--trials", "3", "--seed", "7", "--out"};
  auto first = common;
  first.push_back((tmp.path / "a").string());
  auto second = common;
  second.push_back((tmp.path / "b").string());
  const auto a = run(first);
  REQUIRE(a.code == 0);
  CHECK(a.out.find("best: ") != std::string::npos);
  REQUIRE(run(second).code == 0);
  CHECK(slurp(tmp.path / "a" / "records.csv") == slurp(tmp.path / "b" / "records.csv"));
  CHECK(slurp(tmp.path / "a" / "ranking.json") == slurp(tmp.path / "b" / "ranking.json"));

  const auto rows = lines(slurp(tmp.path / "a" / "records.csv"));
  REQUIRE(rows.size() == 1 + 2 * 2 * 2);
  CHECK(rows[0] == "wavelet,band,snr_db,n_trials,mean_gof,std_gof");
  CHECK(rows[1].rfind("haar,alpha,-5,3,", 0) == 0);

  const auto doc = nlohmann::json::parse(slurp(tmp.path / "a" / "ranking.json"));
  CHECK(doc.size() == 2);
  CHECK(doc.at("ranking").size() == 2);
  CHECK(doc.at("grand_means").size() == 2);
  CHECK(doc.at("grand_means").at("haar").is_number());
}

TEST_CASE("config file feeds flags and the command line wins") {
  TempDir tmp;
  const auto cfg = tmp.path / "bench.cfg";
  std::ofstream(cfg) << "catalog = haar\nbands = alpha\nsnrs = 15\ntrials = 2\nseed = 1\n";
  const auto out = tmp.path / "out";
  REQUIRE(run({"--config", cfg.string(), "bench", "--trials", "4", "--out", out.string()}).code == 0);
  const auto rows = lines(slurp(out / "records.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rfind("haar,alpha,15,4,", 0) == 0);

  std::ofstream(tmp.path / "typo.cfg") << "trails = 2\n";
  CHECK(run({"--config", (tmp.path / "typo.cfg").string(), "bench", "--out", out.string()}).code == 1);
}

TEST_CASE("the installed tool reports usage errors through its exit status") {
  const char* tool = std::getenv("EEGSWT_TOOL");
  if (tool == nullptr) return;
  const std::string quiet = " > /dev/null 2>&1";
  const int no_args = std::system((std::string("\"") + tool + "\"" + quiet).c_str());
  CHECK(WEXITSTATUS(no_args) == 1);
  const int help = std::system((std::string("\"") + tool + "\" --help" + quiet).c_str());
  CHECK(WEXITSTATUS(help) == 0);
}
