#include "fourcycle/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "fourcycle/error.hpp"
#include "fourcycle/parallel.hpp"

namespace fourcycle {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Enumerates paths u-a-b-v with all three edges in a sample graph and
// u, a, b, v distinct. Neighbours of v are stamped per query edge.
class PathCloser {
 public:
  explicit PathCloser(const AdjacencyGraph& sample) : sample_(sample), mark_(sample.n(), 0) {}

  template <typename Fn>
  void operator()(const Edge& e, Fn&& fn) {
    if (e.u >= sample_.n() || e.v >= sample_.n()) return;
    ++stamp_;
    for (VertexId b : sample_.neighbors(e.v)) mark_[b] = stamp_;
    for (VertexId a : sample_.neighbors(e.u)) {
      if (a == e.v) continue;
      for (VertexId b : sample_.neighbors(a)) {
        if (mark_[b] == stamp_ && b != e.u) fn(a, b);
      }
    }
  }

 private:
  const AdjacencyGraph& sample_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

}  // namespace

std::vector<CyclePair> pass2_collect(const EdgeStream& stream, const SampleSets& samples,
                                     const HeavyIndex& index) {
  const AdjacencyGraph sample(0, samples.s_edges);
  PathCloser close(sample);
  std::vector<CyclePair> pairs;
  for (const Edge& e : stream.replay()) {
    close(e, [&](VertexId a, VertexId b) {
      // Cycle u-a-b-v: its wedges have endpoint pairs {v,a}, {u,b} (twice each).
      if (index.is_heavy(e.v, a) || index.is_heavy(e.u, b)) return;
      pairs.push_back({e, canonical_cycle(e.u, a, b, e.v)});
    });
  }
  return pairs;
}

Pass3Score pass3_score(std::span<const CyclePair> pairs, const EdgeClassMap& classes) {
  auto heavy = [&](const Edge& e) {
    const auto it = classes.find(e);
    if (it == classes.end()) {
      throw Error(ErrorKind::kInternal, "no classification for edge (" + std::to_string(e.u) +
                                            "," + std::to_string(e.v) + ")");
    }
    return it->second.label == EdgeLabel::kHeavy;
  };
  Pass3Score score;
  for (const CyclePair& pair : pairs) {
    int heavy_others = 0;
    for (const Edge& e : pair.cycle.edges()) {
      if (e != pair.closing && heavy(e)) ++heavy_others;
    }
    if (heavy_others > 0) continue;
    if (heavy(pair.closing)) {
      ++score.a1;
    } else {
      ++score.a0;
    }
  }
  return score;
}

bool large_t_regime(double epsilon, std::uint64_t t_floor) {
  const double t = static_cast<double>(t_floor);
  return 25.0 * std::pow(t, 2.0 / 3.0) <= (epsilon / 12.0) * t;
}

EstimateReport run(const EdgeStream& stream, const RunOptions& options) {
  EstimateReport report;
  report.params = options.p_override
                      ? SamplingParams::with_rate(*options.p_override, options.epsilon,
                                                  options.t_floor, stream.n(), options.c)
                      : SamplingParams::from_formula(options.epsilon, options.t_floor,
                                                     stream.n(), options.c);
  report.seed = options.seed;
  report.seeds = SampleSeeds::derive(options.seed);
  report.large_t_regime = large_t_regime(options.epsilon, options.t_floor);
  const SamplingParams& params = report.params;

  auto start = Clock::now();
  const SampleSets samples = pass1(stream, params, report.seeds);
  report.timing.pass1_ms = elapsed_ms(start);

  start = Clock::now();
  const HeavyIndex index = build_heavy_index(samples, params, options.prune_light_pairs);
  report.timing.post1_ms = elapsed_ms(start);

  start = Clock::now();
  const std::vector<CyclePair> pairs = pass2_collect(stream, samples, index);
  report.timing.pass2_ms = elapsed_ms(start);

  start = Clock::now();
  std::vector<Edge> queries;
  queries.reserve(pairs.size() * 4);
  for (const CyclePair& pair : pairs) {
    for (const Edge& e : pair.cycle.edges()) queries.push_back(e);
  }
  ClassifierStats stats;
  const EdgeClassMap classes = classify_edges(queries, index, samples, params, stream, &stats);
  const Pass3Score score = pass3_score(pairs, classes);
  report.timing.pass3_ms = elapsed_ms(start);

  const double p3 = params.p * params.p * params.p;
  report.a0 = score.a0;
  report.a1 = score.a1;
  report.t_h_hat = index.t_h_hat();
  report.t_l_hat = static_cast<double>(score.a0) / (4.0 * p3) + static_cast<double>(score.a1) / p3;
  report.t_hat = report.t_h_hat + report.t_l_hat;

  SpaceCounters& space = report.space;
  space.s_edges = samples.s_edges.size();
  space.q_vertices = samples.q_vertices.size();
  space.q_edges = samples.q_edges.size();
  space.z_vertices = samples.z_vertices.size();
  space.z_edges = samples.z_edges.size();
  space.q_pairs_seen = index.pairs_seen();
  space.q_pairs_retained = index.pairs_retained();
  space.heavy_pairs_retained = index.heavy_pairs();
  space.stored_pairs = pairs.size();
  space.classified_edges = stats.instances;
  space.oracle_exclusions = stats.exclusions;
  return report;
}

std::size_t amplification_copies(double delta, double a) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::kParameter, "delta must lie in (0,1), got " + std::to_string(delta));
  }
  if (!(a > 0.0)) throw Error(ErrorKind::kParameter, "amplification constant must be positive");
  const double k = std::ceil(a * std::log(1.0 / delta));
  return std::max<std::size_t>(1, static_cast<std::size_t>(k));
}

EstimateReport run_amplified(const EdgeStream& stream, const RunOptions& options, double delta,
                             double a, unsigned threads) {
  const std::size_t k = amplification_copies(delta, a);
  std::vector<EstimateReport> copies(k);
  parallel_for(k, threads, [&](std::size_t i) {
    RunOptions copy = options;
    copy.seed = derive_seed(options.seed, 0xA000 + i);
    copies[i] = run(stream, copy);
  });

  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return copies[x].t_hat < copies[y].t_hat; });
  const std::size_t median = order[(k - 1) / 2];

  EstimateReport out = copies[median];
  out.seed = options.seed;
  out.copy_estimates.clear();
  out.copies_space_total = 0;
  out.copies_space_max = 0;
  out.timing = {};
  for (const EstimateReport& copy : copies) {
    out.copy_estimates.push_back(copy.t_hat);
    out.copies_space_total += copy.space.total();
    out.copies_space_max = std::max(out.copies_space_max, copy.space.total());
    out.timing.pass1_ms += copy.timing.pass1_ms;
    out.timing.post1_ms += copy.timing.post1_ms;
    out.timing.pass2_ms += copy.timing.pass2_ms;
    out.timing.pass3_ms += copy.timing.pass3_ms;
  }
  return out;
}

double baseline_estimate(const EdgeStream& stream, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kParameter, "sampling rate must lie in (0,1], got " + std::to_string(p));
  }
  const EdgeSampler take(SampleSeeds::derive(seed).edges, p);
  std::vector<Edge> sampled;
  for (const Edge& e : stream.replay()) {
    if (take(e)) sampled.push_back(e);
  }
  const AdjacencyGraph sample(0, sampled);
  PathCloser close(sample);
  std::uint64_t paths = 0;
  for (const Edge& e : stream.replay()) {
    close(e, [&](VertexId, VertexId) { ++paths; });
  }
  return static_cast<double>(paths) / (4.0 * p * p * p);
}

}  // namespace fourcycle
