// fourcycle: command-line experiment runner over the fourcycle C API.
//
//   fourcycle --gen er:n=200,p=0.02,seed=3 --algo 3pass-amp --trials 20 --format json
//   fourcycle --input graph.txt --algo exact
//   fourcycle --validate graph.txt
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fourcycle/fourcycle.h"

namespace {

int report_failure(fc_status status) {
  std::cerr << "fourcycle: " << fc_status_string(status) << ": " << fc_last_error() << '\n';
  return static_cast<int>(status);
}

int validate(const std::string& path) {
  fc_diagnostics diag{};
  char* text = nullptr;
  const fc_status status = fc_validate_file(path.c_str(), &diag, &text);
  if (status != FC_OK) return report_failure(status);
  std::cout << text;
  fc_string_free(text);
  return diag.valid ? 0 : static_cast<int>(FC_ERR_INPUT);
}

// The report's graph block records whether t_floor is large enough for the
// accuracy guarantee; tell the user when it is not.
void warn_small_t(const std::string& algo, const std::string& format, const char* report) {
  if (algo != "3pass" && algo != "3pass-amp") return;
  bool regime = true;
  if (format == "json") {
    regime = nlohmann::json::parse(report)["graph"]["large_t_regime"].get<bool>();
  } else {
    regime = std::string(report).find(",large_t_regime=false") == std::string::npos;
  }
  if (!regime) {
    std::cerr << "fourcycle: warning: 25 t_floor^(2/3) > (epsilon/12) t_floor; "
                 "t_floor is below the range where the accuracy guarantee applies\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming 4-cycle counting experiments"};

  std::string input;
  std::string gen;
  std::string algo = "3pass";
  double epsilon = 0.2;
  double delta = 0.1;
  std::string t_floor = "oracle";
  double c = 1.0;
  std::optional<double> p;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  bool permute = false;
  std::string format = "csv";
  std::string out;
  unsigned parallelism = 1;
  double band = 0.25;
  double amp_constant = 8.0;
  bool no_prune = false;
  std::string validate_path;

  auto* source = app.add_option_group("source");
  source->add_option("--input", input, "Edge-list file");
  source->add_option("--gen", gen, "Generator spec, e.g. er:n=200,p=0.02,seed=7");
  app.add_option("--algo", algo, "Algorithm")
      ->check(CLI::IsMember({"exact", "baseline", "3pass", "3pass-amp"}));
  app.add_option("--epsilon", epsilon, "Accuracy parameter in (0,1)");
  app.add_option("--delta", delta, "Failure probability for 3pass-amp, in (0,1)");
  app.add_option("--t-floor", t_floor, "Promised lower bound on T, or 'oracle' for the exact count");
  app.add_option("--c", c, "Constant in the sampling rate");
  app.add_option("--p", p, "Use this sampling rate instead of the formula");
  app.add_option("--trials", trials, "Number of seeded trials");
  app.add_option("--seed", seed, "Master seed");
  app.add_flag("--permute", permute, "Permute the stream order in every trial");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out, "Report path (stdout when omitted)");
  app.add_option("--parallelism", parallelism, "Concurrent trials");
  app.add_option("--band", band, "Success band: |T_hat - T| <= band * T");
  app.add_option("--amp-constant", amp_constant, "Copies = ceil(a ln(1/delta))");
  app.add_flag("--no-prune", no_prune, "Keep light pairs in the heavy index");
  app.add_option("--validate", validate_path, "Check an edge-list file and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(FC_ERR_USAGE);
  }

  if (!validate_path.empty()) return validate(validate_path);

  if (input.empty() == gen.empty()) {
    std::cerr << "fourcycle: exactly one of --input or --gen is required\n";
    return static_cast<int>(FC_ERR_USAGE);
  }

  nlohmann::ordered_json config;
  config["input"] = input;
  config["gen"] = gen;
  config["algo"] = algo;
  config["epsilon"] = epsilon;
  config["delta"] = delta;
  if (t_floor == "oracle") {
    config["t_floor"] = "oracle";
  } else {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(t_floor, &used);
      if (used != t_floor.size()) throw std::invalid_argument(t_floor);
      config["t_floor"] = value;
    } catch (const std::exception&) {
      std::cerr << "fourcycle: --t-floor must be a positive integer or 'oracle'\n";
      return static_cast<int>(FC_ERR_USAGE);
    }
  }
  config["c"] = c;
  config["p"] = p ? nlohmann::ordered_json(*p) : nlohmann::ordered_json(nullptr);
  config["trials"] = trials;
  config["seed"] = seed;
  config["permute"] = permute;
  config["format"] = format;
  config["out"] = out;
  config["parallelism"] = parallelism;
  config["band"] = band;
  config["amp_constant"] = amp_constant;
  config["prune"] = !no_prune;

  char* report = nullptr;
  const fc_status status = fc_run_experiment(config.dump().c_str(), &report);
  if (status != FC_OK) return report_failure(status);
  warn_small_t(algo, format, report);

  if (out.empty()) {
    std::cout << report;
  } else {
    std::ofstream file(out, std::ios::binary);
    file << report;
    if (!file) {
      fc_string_free(report);
      std::cerr << "fourcycle: cannot write '" << out << "'\n";
      return static_cast<int>(FC_ERR_INPUT);
    }
  }
  fc_string_free(report);
  return 0;
}
