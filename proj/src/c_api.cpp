#include "fourcycle/fourcycle.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fourcycle/edge_list.hpp"
#include "fourcycle/error.hpp"
#include "fourcycle/estimator.hpp"
#include "fourcycle/exact.hpp"
#include "fourcycle/harness.hpp"
#include "fourcycle/stream_gen.hpp"

struct fc_stream {
  fourcycle::EdgeStream stream;
};

namespace {

thread_local std::string last_error;

fc_status status_for(fourcycle::ErrorKind kind) {
  using fourcycle::ErrorKind;
  switch (kind) {
    case ErrorKind::kParameter:
    case ErrorKind::kSizeGuard:
    case ErrorKind::kInvalidCycle:
    case ErrorKind::kMissingEdge:
      return FC_ERR_USAGE;
    case ErrorKind::kMalformedStream:
    case ErrorKind::kIo:
      return FC_ERR_INPUT;
    case ErrorKind::kInternal:
      return FC_ERR_INTERNAL;
  }
  return FC_ERR_INTERNAL;
}

fc_status fail(fc_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
fc_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return FC_OK;
  } catch (const fourcycle::Error& e) {
    return fail(status_for(e.kind()), std::string(fourcycle::to_string(e.kind())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(FC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fourcycle::RunOptions to_options(const fc_run_options& o) {
  fourcycle::RunOptions options;
  options.epsilon = o.epsilon;
  options.t_floor = o.t_floor;
  options.c = o.c;
  if (o.p_override > 0.0) options.p_override = o.p_override;
  options.seed = o.seed;
  options.prune_light_pairs = o.prune_light_pairs != 0;
  return options;
}

void fill(const fourcycle::EstimateReport& r, fc_estimate* out) {
  *out = fc_estimate{};
  out->t_hat = r.t_hat;
  out->t_h_hat = r.t_h_hat;
  out->t_l_hat = r.t_l_hat;
  out->a0 = r.a0;
  out->a1 = r.a1;
  out->p = r.params.p;
  out->s_edges = r.space.s_edges;
  out->q_edges = r.space.q_edges;
  out->z_edges = r.space.z_edges;
  out->heavy_pairs = r.space.heavy_pairs_retained;
  out->stored_pairs = r.space.stored_pairs;
  out->classified_edges = r.space.classified_edges;
  out->oracle_exclusions = r.space.oracle_exclusions;
  out->copies = r.copy_estimates.empty() ? 1u : static_cast<uint32_t>(r.copy_estimates.size());
  out->large_t_regime = r.large_t_regime ? 1 : 0;
}

#define FC_REQUIRE(cond, what) \
  if (!(cond)) return fail(FC_ERR_USAGE, what)

}  // namespace

extern "C" {

const char* fc_version(void) { return "1.0.0"; }

const char* fc_last_error(void) { return last_error.c_str(); }

const char* fc_status_string(fc_status status) {
  switch (status) {
    case FC_OK: return "ok";
    case FC_ERR_USAGE: return "usage error";
    case FC_ERR_INPUT: return "input error";
    case FC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void fc_run_options_init(fc_run_options* options) {
  if (options == nullptr) return;
  options->epsilon = 0.2;
  options->t_floor = 1;
  options->c = 1.0;
  options->p_override = 0.0;
  options->seed = 1;
  options->prune_light_pairs = 1;
}

fc_status fc_stream_from_edges(const uint32_t* endpoints, size_t edge_count, fc_stream** out) {
  FC_REQUIRE(out != nullptr, "null output handle");
  FC_REQUIRE(endpoints != nullptr || edge_count == 0, "null edge array");
  return guarded([&] {
    std::vector<fourcycle::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new fc_stream{fourcycle::EdgeStream(std::move(edges))};
  });
}

fc_status fc_stream_load(const char* path, fc_stream** out) {
  FC_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = new fc_stream{fourcycle::load_edge_list(path).stream}; });
}

fc_status fc_stream_generate(const char* spec, fc_stream** out) {
  FC_REQUIRE(spec != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new fc_stream{fourcycle::gen::generate(fourcycle::gen::GenSpec::parse(spec))};
  });
}

fc_status fc_stream_permute(const fc_stream* stream, uint64_t seed, fc_stream** out) {
  FC_REQUIRE(stream != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = new fc_stream{fourcycle::gen::permute_stream(stream->stream, seed)}; });
}

void fc_stream_free(fc_stream* stream) { delete stream; }

fc_status fc_stream_size(const fc_stream* stream, uint64_t* n, uint64_t* m) {
  FC_REQUIRE(stream != nullptr, "null stream");
  if (n != nullptr) *n = stream->stream.n();
  if (m != nullptr) *m = stream->stream.m();
  return FC_OK;
}

fc_status fc_stream_edge(const fc_stream* stream, size_t i, uint32_t* u, uint32_t* v) {
  FC_REQUIRE(stream != nullptr && u != nullptr && v != nullptr, "null argument");
  FC_REQUIRE(i < stream->stream.m(), "edge index out of range");
  const fourcycle::Edge e = stream->stream.edges()[i];
  *u = e.u;
  *v = e.v;
  return FC_OK;
}

uint64_t fc_stream_replays(const fc_stream* stream) {
  return stream == nullptr ? 0 : stream->stream.replay_count();
}

fc_status fc_exact_count(const fc_stream* stream, uint64_t* out) {
  FC_REQUIRE(stream != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = fourcycle::exact::count_4cycles(fourcycle::materialize(stream->stream)); });
}

fc_status fc_baseline_estimate(const fc_stream* stream, double p, uint64_t seed, double* out) {
  FC_REQUIRE(stream != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = fourcycle::baseline_estimate(stream->stream, p, seed); });
}

fc_status fc_run(const fc_stream* stream, const fc_run_options* options, fc_estimate* out) {
  FC_REQUIRE(stream != nullptr && options != nullptr && out != nullptr, "null argument");
  return guarded([&] { fill(fourcycle::run(stream->stream, to_options(*options)), out); });
}

fc_status fc_run_amplified(const fc_stream* stream, const fc_run_options* options, double delta,
                           fc_estimate* out) {
  FC_REQUIRE(stream != nullptr && options != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    fill(fourcycle::run_amplified(stream->stream, to_options(*options), delta), out);
  });
}

fc_status fc_validate_file(const char* path, fc_diagnostics* out, char** text) {
  FC_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const fourcycle::StreamDiagnostics diag = fourcycle::validate_edge_list(path);
    *out = fc_diagnostics{};
    out->parsed = diag.parsed ? 1 : 0;
    out->valid = diag.valid ? 1 : 0;
    out->n = diag.n;
    out->m = diag.m;
    out->comment_lines = diag.comment_lines;
    out->malformed_lines = diag.malformed_lines.size();
    out->self_loops = diag.self_loop_lines.size();
    out->duplicate_edges = diag.duplicate_lines.size();
    if (text != nullptr) *text = copy_string(fourcycle::harness::format_diagnostics(diag));
  });
}

fc_status fc_run_experiment(const char* config_json, char** report) {
  FC_REQUIRE(config_json != nullptr && report != nullptr, "null argument");
  return guarded([&] {
    const auto config = fourcycle::harness::ExperimentConfig::from_json(config_json);
    *report = copy_string(fourcycle::harness::render(fourcycle::harness::run_experiment(config)));
  });
}

void fc_string_free(char* s) { std::free(s); }

}  // extern "C"
