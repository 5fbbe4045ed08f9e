#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourcycle/edge_list.hpp"

namespace fourcycle::harness {

inline constexpr const char* kReportSchema = "fourcycle-report/1";

enum class Algorithm { kExact, kBaseline, kThreePass, kThreePassAmplified };
enum class Format { kCsv, kJson };

const char* to_string(Algorithm algo);
Algorithm parse_algorithm(const std::string& text);

struct ExperimentConfig {
  std::string input;  // edge-list path, or empty
  std::string gen;    // GenSpec text, or empty
  Algorithm algo = Algorithm::kThreePass;
  double epsilon = 0.2;
  double delta = 0.1;
  std::optional<std::uint64_t> t_floor;  // nullopt: oracle-assisted (exact T)
  double c = 1.0;
  std::optional<double> p;  // overrides the formula rate
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  bool permute = false;
  Format format = Format::kCsv;
  std::string out;
  unsigned parallelism = 1;
  double band = 0.25;  // success band (1 +- band) T
  double amp_constant = 8.0;
  bool prune = true;

  // Throws Error(kParameter) on invalid combinations.
  void validate() const;

  std::string to_json() const;
  // Unknown keys are rejected. Throws Error(kParameter).
  static ExperimentConfig from_json(const std::string& text);
};

struct TrialRow {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  double t_hat = 0.0;
  double t_h_hat = 0.0;
  double t_l_hat = 0.0;
  std::uint64_t a0 = 0;
  std::uint64_t a1 = 0;
  double p = 0.0;
  std::uint64_t copies = 1;
  std::uint64_t s_edges = 0;
  std::uint64_t q_edges = 0;
  std::uint64_t z_edges = 0;
  std::uint64_t heavy_pairs = 0;
  std::uint64_t stored_pairs = 0;
  std::uint64_t classified_edges = 0;
  std::uint64_t oracle_exclusions = 0;
  std::uint64_t space_total = 0;
  std::optional<double> rel_error;  // (t_hat - T) / T when T > 0
};

struct TrialTiming {
  double pass1_ms = 0.0;
  double post1_ms = 0.0;
  double pass2_ms = 0.0;
  double pass3_ms = 0.0;
};

struct Summary {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double median = 0.0;  // lower median
  double stddev = 0.0;  // sample standard deviation, 0 for one trial
  double min = 0.0;
  double max = 0.0;
  // Nearest-rank quantiles of |rel_error|; present when exact T > 0.
  std::optional<double> abs_rel_error_q10;
  std::optional<double> abs_rel_error_q50;
  std::optional<double> abs_rel_error_q90;
  std::optional<double> success_rate;  // fraction with |rel_error| <= band
};

Summary summarize(const std::vector<TrialRow>& rows, double band);

struct Report {
  ExperimentConfig config;
  std::string source;  // GenSpec text or input path
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::optional<std::uint64_t> exact_t;
  std::uint64_t t_floor = 0;
  bool large_t_regime = false;
  std::vector<TrialRow> rows;
  Summary summary;
  // Everything below is excluded from the determinism contract.
  std::string generated_at;
  std::vector<TrialTiming> timings;
};

// Loads or generates the stream, runs all trials and summarises them.
// Throws Error(kIo / kMalformedStream) for input problems and
// Error(kParameter) for configuration problems.
Report run_experiment(const ExperimentConfig& config);

std::string render_csv(const Report& report);
std::string render_json(const Report& report);
std::string render(const Report& report);

// Drops the metadata part (CSV lines starting "#meta", JSON "metadata").
std::string strip_metadata(const std::string& rendered, Format format);

std::string format_diagnostics(const StreamDiagnostics& diag);

}  // namespace fourcycle::harness
