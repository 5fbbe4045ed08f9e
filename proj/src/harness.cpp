#include "fourcycle/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "fourcycle/error.hpp"
#include "fourcycle/estimator.hpp"
#include "fourcycle/exact.hpp"
#include "fourcycle/parallel.hpp"
#include "fourcycle/rng.hpp"
#include "fourcycle/stream_gen.hpp"

namespace fourcycle::harness {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_config(const std::string& what) { throw Error(ErrorKind::kParameter, what); }

std::string number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string number(std::uint64_t x) { return std::to_string(x); }

std::string optional_number(const std::optional<double>& x) { return x ? number(*x) : ""; }

Json optional_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double nearest_rank(std::vector<double> sorted, double q) {
  const auto n = sorted.size();
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n);
  return sorted[rank - 1];
}

struct TrialResult {
  TrialRow row;
  TrialTiming timing;
};

TrialRow row_from(const EstimateReport& r, std::uint64_t trial) {
  TrialRow row;
  row.trial = trial;
  row.seed = r.seed;
  row.t_hat = r.t_hat;
  row.t_h_hat = r.t_h_hat;
  row.t_l_hat = r.t_l_hat;
  row.a0 = r.a0;
  row.a1 = r.a1;
  row.p = r.params.p;
  row.copies = r.copy_estimates.empty() ? 1 : r.copy_estimates.size();
  row.s_edges = r.space.s_edges;
  row.q_edges = r.space.q_edges;
  row.z_edges = r.space.z_edges;
  row.heavy_pairs = r.space.heavy_pairs_retained;
  row.stored_pairs = r.space.stored_pairs;
  row.classified_edges = r.space.classified_edges;
  row.oracle_exclusions = r.space.oracle_exclusions;
  row.space_total = r.copy_estimates.empty() ? r.space.total() : r.copies_space_total;
  return row;
}

}  // namespace

const char* to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kExact: return "exact";
    case Algorithm::kBaseline: return "baseline";
    case Algorithm::kThreePass: return "3pass";
    case Algorithm::kThreePassAmplified: return "3pass-amp";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& text) {
  if (text == "exact") return Algorithm::kExact;
  if (text == "baseline") return Algorithm::kBaseline;
  if (text == "3pass") return Algorithm::kThreePass;
  if (text == "3pass-amp") return Algorithm::kThreePassAmplified;
  bad_config("unknown algorithm '" + text + "' (expected exact, baseline, 3pass, 3pass-amp)");
}

void ExperimentConfig::validate() const {
  if (input.empty() == gen.empty()) bad_config("exactly one of input file or generator spec is required");
  if (!gen.empty()) gen::GenSpec::parse(gen);
  if (!(epsilon > 0.0 && epsilon < 1.0)) bad_config("epsilon must lie in (0,1)");
  if (!(delta > 0.0 && delta < 1.0)) bad_config("delta must lie in (0,1)");
  if (t_floor && *t_floor < 1) bad_config("t_floor must be >= 1");
  if (!(c > 0.0)) bad_config("c must be positive");
  if (p && !(*p > 0.0 && *p <= 1.0)) bad_config("p must lie in (0,1]");
  if (trials < 1) bad_config("trials must be >= 1");
  if (parallelism < 1) bad_config("parallelism must be >= 1");
  if (!(band > 0.0)) bad_config("band must be positive");
  if (!(amp_constant > 0.0)) bad_config("amplification constant must be positive");
}

std::string ExperimentConfig::to_json() const {
  Json j;
  j["input"] = input;
  j["gen"] = gen;
  j["algo"] = harness::to_string(algo);
  j["epsilon"] = epsilon;
  j["delta"] = delta;
  j["t_floor"] = t_floor ? Json(*t_floor) : Json("oracle");
  j["c"] = c;
  j["p"] = optional_json(p);
  j["trials"] = trials;
  j["seed"] = seed;
  j["permute"] = permute;
  j["format"] = format == Format::kCsv ? "csv" : "json";
  j["out"] = out;
  j["parallelism"] = parallelism;
  j["band"] = band;
  j["amp_constant"] = amp_constant;
  j["prune"] = prune;
  return j.dump();
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    bad_config(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad_config("config must be a JSON object");
  ExperimentConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "input") {
        cfg.input = value.get<std::string>();
      } else if (key == "gen") {
        cfg.gen = value.get<std::string>();
      } else if (key == "algo") {
        cfg.algo = parse_algorithm(value.get<std::string>());
      } else if (key == "epsilon") {
        cfg.epsilon = value.get<double>();
      } else if (key == "delta") {
        cfg.delta = value.get<double>();
      } else if (key == "t_floor") {
        if (value.is_string()) {
          if (value.get<std::string>() != "oracle") bad_config("t_floor must be an integer or \"oracle\"");
          cfg.t_floor.reset();
        } else {
          cfg.t_floor = value.get<std::uint64_t>();
        }
      } else if (key == "c") {
        cfg.c = value.get<double>();
      } else if (key == "p") {
        if (!value.is_null()) cfg.p = value.get<double>();
      } else if (key == "trials") {
        cfg.trials = value.get<std::uint64_t>();
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "permute") {
        cfg.permute = value.get<bool>();
      } else if (key == "format") {
        const auto f = value.get<std::string>();
        if (f == "csv") {
          cfg.format = Format::kCsv;
        } else if (f == "json") {
          cfg.format = Format::kJson;
        } else {
          bad_config("format must be csv or json");
        }
      } else if (key == "out") {
        cfg.out = value.get<std::string>();
      } else if (key == "parallelism") {
        cfg.parallelism = value.get<unsigned>();
      } else if (key == "band") {
        cfg.band = value.get<double>();
      } else if (key == "amp_constant") {
        cfg.amp_constant = value.get<double>();
      } else if (key == "prune") {
        cfg.prune = value.get<bool>();
      } else {
        bad_config("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    bad_config(std::string("config value has the wrong type: ") + e.what());
  }
  return cfg;
}

Summary summarize(const std::vector<TrialRow>& rows, double band) {
  Summary s;
  s.trials = rows.size();
  if (rows.empty()) return s;
  std::vector<double> values;
  std::vector<double> errors;
  for (const TrialRow& row : rows) {
    values.push_back(row.t_hat);
    if (row.rel_error) errors.push_back(std::abs(*row.rel_error));
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = values.size() > 1 ? std::sqrt(sq / static_cast<double>(values.size() - 1)) : 0.0;
  std::sort(values.begin(), values.end());
  s.median = values[(values.size() - 1) / 2];
  s.min = values.front();
  s.max = values.back();
  if (errors.size() == rows.size()) {
    std::sort(errors.begin(), errors.end());
    s.abs_rel_error_q10 = nearest_rank(errors, 0.10);
    s.abs_rel_error_q50 = nearest_rank(errors, 0.50);
    s.abs_rel_error_q90 = nearest_rank(errors, 0.90);
    const auto ok = std::count_if(errors.begin(), errors.end(), [&](double e) { return e <= band; });
    s.success_rate = static_cast<double>(ok) / static_cast<double>(errors.size());
  }
  return s;
}

Report run_experiment(const ExperimentConfig& config) {
  config.validate();
  Report report;
  report.config = config;
  report.generated_at = utc_now();

  EdgeStream stream;
  if (!config.input.empty()) {
    stream = load_edge_list(config.input).stream;
    report.source = config.input;
  } else {
    const auto spec = gen::GenSpec::parse(config.gen);
    stream = gen::generate(spec);
    report.source = spec.to_string();
  }
  report.n = stream.n();
  report.m = stream.m();

  // Computed once per experiment, shared by every trial.
  const std::uint64_t exact_t = exact::count_4cycles(materialize(stream));
  report.exact_t = exact_t;
  report.t_floor = config.t_floor.value_or(std::max<std::uint64_t>(1, exact_t));
  report.large_t_regime = large_t_regime(config.epsilon, report.t_floor);

  const std::uint64_t trials = config.algo == Algorithm::kExact ? 1 : config.trials;
  std::vector<TrialResult> results(trials);

  RunOptions base;
  base.epsilon = config.epsilon;
  base.t_floor = report.t_floor;
  base.c = config.c;
  base.p_override = config.p;
  base.prune_light_pairs = config.prune;
  // Parameter errors surface before any worker starts.
  if (config.algo != Algorithm::kExact) {
    if (config.p) {
      SamplingParams::with_rate(*config.p, base.epsilon, base.t_floor, stream.n(), base.c);
    } else {
      compute_p(base.epsilon, base.t_floor, stream.n(), base.c);
    }
  }

  parallel_for(trials, config.parallelism, [&](std::size_t i) {
    const std::uint64_t trial_seed = derive_seed(config.seed, i);
    const EdgeStream trial_stream =
        config.permute ? gen::permute_stream(stream, derive_seed(trial_seed, 0x9E)) : stream;
    TrialResult& result = results[i];
    switch (config.algo) {
      case Algorithm::kExact: {
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t t = exact::count_4cycles(materialize(trial_stream));
        result.row.t_hat = static_cast<double>(t);
        result.row.p = 1.0;
        result.timing.pass1_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        break;
      }
      case Algorithm::kBaseline: {
        const double p = config.p.value_or(compute_p(base.epsilon, base.t_floor, stream.n(), base.c));
        const auto start = std::chrono::steady_clock::now();
        result.row.t_hat = baseline_estimate(trial_stream, p, trial_seed);
        result.row.t_l_hat = result.row.t_hat;
        result.row.p = p;
        result.timing.pass1_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        break;
      }
      case Algorithm::kThreePass:
      case Algorithm::kThreePassAmplified: {
        RunOptions options = base;
        options.seed = trial_seed;
        const EstimateReport r = config.algo == Algorithm::kThreePass
                                     ? run(trial_stream, options)
                                     : run_amplified(trial_stream, options, config.delta,
                                                     config.amp_constant);
        result.row = row_from(r, i);
        result.timing = {r.timing.pass1_ms, r.timing.post1_ms, r.timing.pass2_ms, r.timing.pass3_ms};
        break;
      }
    }
    result.row.trial = i;
    result.row.seed = trial_seed;
    if (exact_t > 0) {
      result.row.rel_error = (result.row.t_hat - static_cast<double>(exact_t)) / static_cast<double>(exact_t);
    }
  });

  for (TrialResult& r : results) {
    report.rows.push_back(r.row);
    report.timings.push_back(r.timing);
  }
  report.summary = summarize(report.rows, config.band);
  return report;
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  out << "#schema," << kReportSchema << '\n';
  out << "#config," << csv_quote(report.config.to_json()) << '\n';
  out << "#source," << csv_quote(report.source) << '\n';
  out << "#graph,n=" << report.n << ",m=" << report.m
      << ",exact_t=" << (report.exact_t ? number(*report.exact_t) : "") << ",t_floor=" << report.t_floor
      << ",large_t_regime=" << (report.large_t_regime ? "true" : "false") << '\n';
  out << "trial,seed,t_hat,t_h_hat,t_l_hat,a0,a1,p,copies,s_edges,q_edges,z_edges,heavy_pairs,"
         "stored_pairs,classified_edges,oracle_exclusions,space_total,rel_error\n";
  for (const TrialRow& r : report.rows) {
    out << r.trial << ',' << r.seed << ',' << number(r.t_hat) << ',' << number(r.t_h_hat) << ','
        << number(r.t_l_hat) << ',' << r.a0 << ',' << r.a1 << ',' << number(r.p) << ',' << r.copies
        << ',' << r.s_edges << ',' << r.q_edges << ',' << r.z_edges << ',' << r.heavy_pairs << ','
        << r.stored_pairs << ',' << r.classified_edges << ',' << r.oracle_exclusions << ','
        << r.space_total << ',' << optional_number(r.rel_error) << '\n';
  }
  const Summary& s = report.summary;
  out << '\n' << "summary,value\n";
  out << "trials," << s.trials << '\n';
  out << "mean," << number(s.mean) << '\n';
  out << "median," << number(s.median) << '\n';
  out << "stddev," << number(s.stddev) << '\n';
  out << "min," << number(s.min) << '\n';
  out << "max," << number(s.max) << '\n';
  out << "abs_rel_error_q10," << optional_number(s.abs_rel_error_q10) << '\n';
  out << "abs_rel_error_q50," << optional_number(s.abs_rel_error_q50) << '\n';
  out << "abs_rel_error_q90," << optional_number(s.abs_rel_error_q90) << '\n';
  out << "band," << number(report.config.band) << '\n';
  out << "success_rate," << optional_number(s.success_rate) << '\n';
  out << "#meta,generated_at," << report.generated_at << '\n';
  out << "#meta,timing,trial,pass1_ms,post1_ms,pass2_ms,pass3_ms\n";
  for (std::size_t i = 0; i < report.timings.size(); ++i) {
    const TrialTiming& t = report.timings[i];
    out << "#meta,timing," << i << ',' << number(t.pass1_ms) << ',' << number(t.post1_ms) << ','
        << number(t.pass2_ms) << ',' << number(t.pass3_ms) << '\n';
  }
  return out.str();
}

std::string render_json(const Report& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["config"] = Json::parse(report.config.to_json());
  j["source"] = report.source;
  j["graph"] = {{"n", report.n},
                {"m", report.m},
                {"exact_t", report.exact_t ? Json(*report.exact_t) : Json(nullptr)},
                {"t_floor", report.t_floor},
                {"large_t_regime", report.large_t_regime}};
  Json rows = Json::array();
  for (const TrialRow& r : report.rows) {
    rows.push_back({{"trial", r.trial},
                    {"seed", r.seed},
                    {"t_hat", r.t_hat},
                    {"t_h_hat", r.t_h_hat},
                    {"t_l_hat", r.t_l_hat},
                    {"a0", r.a0},
                    {"a1", r.a1},
                    {"p", r.p},
                    {"copies", r.copies},
                    {"s_edges", r.s_edges},
                    {"q_edges", r.q_edges},
                    {"z_edges", r.z_edges},
                    {"heavy_pairs", r.heavy_pairs},
                    {"stored_pairs", r.stored_pairs},
                    {"classified_edges", r.classified_edges},
                    {"oracle_exclusions", r.oracle_exclusions},
                    {"space_total", r.space_total},
                    {"rel_error", optional_json(r.rel_error)}});
  }
  j["trials"] = rows;
  const Summary& s = report.summary;
  j["summary"] = {{"trials", s.trials},
                  {"mean", s.mean},
                  {"median", s.median},
                  {"stddev", s.stddev},
                  {"min", s.min},
                  {"max", s.max},
                  {"abs_rel_error_q10", optional_json(s.abs_rel_error_q10)},
                  {"abs_rel_error_q50", optional_json(s.abs_rel_error_q50)},
                  {"abs_rel_error_q90", optional_json(s.abs_rel_error_q90)},
                  {"band", report.config.band},
                  {"success_rate", optional_json(s.success_rate)}};
  Json timing = Json::array();
  for (const TrialTiming& t : report.timings) {
    timing.push_back({{"pass1_ms", t.pass1_ms},
                      {"post1_ms", t.post1_ms},
                      {"pass2_ms", t.pass2_ms},
                      {"pass3_ms", t.pass3_ms}});
  }
  j["metadata"] = {{"generated_at", report.generated_at}, {"timing", timing}};
  return j.dump(2) + "\n";
}

std::string render(const Report& report) {
  return report.config.format == Format::kCsv ? render_csv(report) : render_json(report);
}

std::string strip_metadata(const std::string& rendered, Format format) {
  if (format == Format::kJson) {
    Json j = Json::parse(rendered);
    j.erase("metadata");
    return j.dump(2) + "\n";
  }
  std::istringstream in(rendered);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    if (line.rfind("#meta", 0) == 0) continue;
    out += line;
    out += '\n';
  }
  return out;
}

std::string format_diagnostics(const StreamDiagnostics& diag) {
  std::ostringstream out;
  auto lines = [&](const char* label, const std::vector<std::uint64_t>& list) {
    out << label << '=' << list.size();
    if (!list.empty()) {
      out << " (lines";
      for (std::size_t i = 0; i < list.size() && i < 20; ++i) out << ' ' << list[i];
      if (list.size() > 20) out << " ...";
      out << ')';
    }
    out << '\n';
  };
  out << "parsed=" << (diag.parsed ? "yes" : "no") << '\n';
  out << "n=" << diag.n << '\n';
  out << "m=" << diag.m << '\n';
  out << "comment_lines=" << diag.comment_lines << '\n';
  lines("malformed_lines", diag.malformed_lines);
  lines("self_loops", diag.self_loop_lines);
  lines("duplicate_edges", diag.duplicate_lines);
  out << "valid=" << (diag.valid ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace fourcycle::harness
