#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fourcycle/graph.hpp"
#include "fourcycle/heavy.hpp"
#include "fourcycle/sampling.hpp"

namespace fourcycle {

// A stream edge together with the 4-cycle it closes from three S_E edges.
struct CyclePair {
  Edge closing;
  FourCycle cycle;

  friend bool operator==(const CyclePair&, const CyclePair&) = default;
};

// Pass 2: for every stream edge (u, v) and every path u-a-b-v in S_E with
// four distinct vertices, store the pair unless a wedge of the cycle is
// heavy. One replay.
std::vector<CyclePair> pass2_collect(const EdgeStream& stream, const SampleSets& samples,
                                     const HeavyIndex& index);

struct Pass3Score {
  std::uint64_t a0 = 0;  // all four edges light
  std::uint64_t a1 = 0;  // closing edge heavy, other three light
};

// Throws Error(kInternal) if an edge of a stored cycle has no class.
Pass3Score pass3_score(std::span<const CyclePair> pairs, const EdgeClassMap& classes);

struct RunOptions {
  double epsilon = 0.2;
  std::uint64_t t_floor = 1;
  double c = 1.0;
  std::optional<double> p_override;  // replaces the formula rate; thresholds unchanged
  std::uint64_t seed = 1;
  bool prune_light_pairs = true;
};

struct SpaceCounters {
  std::uint64_t s_edges = 0;
  std::uint64_t q_vertices = 0;
  std::uint64_t q_edges = 0;
  std::uint64_t z_vertices = 0;
  std::uint64_t z_edges = 0;
  std::uint64_t q_pairs_seen = 0;
  std::uint64_t heavy_pairs_retained = 0;
  std::uint64_t q_pairs_retained = 0;
  std::uint64_t stored_pairs = 0;
  std::uint64_t classified_edges = 0;
  std::uint64_t oracle_exclusions = 0;

  std::uint64_t total() const {
    return s_edges + q_edges + z_edges + q_pairs_retained + stored_pairs + classified_edges +
           oracle_exclusions;
  }
};

struct PassTimings {
  double pass1_ms = 0.0;
  double post1_ms = 0.0;
  double pass2_ms = 0.0;
  double pass3_ms = 0.0;
  double total_ms() const { return pass1_ms + post1_ms + pass2_ms + pass3_ms; }
};

struct EstimateReport {
  double t_hat = 0.0;
  double t_h_hat = 0.0;
  double t_l_hat = 0.0;
  std::uint64_t a0 = 0;
  std::uint64_t a1 = 0;

  SamplingParams params;
  std::uint64_t seed = 0;
  SampleSeeds seeds;
  SpaceCounters space;
  PassTimings timing;

  // False when 25 t_floor^(2/3) > (eps/12) t_floor, i.e. the heavy-diamond
  // double count is not negligible and accuracy is not expected.
  bool large_t_regime = false;

  // Amplified runs only: per-copy estimates in copy order, and space totals.
  std::vector<double> copy_estimates;
  std::uint64_t copies_space_total = 0;
  std::uint64_t copies_space_max = 0;
};

bool large_t_regime(double epsilon, std::uint64_t t_floor);

// Three replays: pass 1, pass 2, batched classification.
EstimateReport run(const EdgeStream& stream, const RunOptions& options);

// ceil(a ln(1/delta)) copies, at least 1. Throws unless 0 < delta < 1.
std::size_t amplification_copies(double delta, double a = 8.0);

// Median (lower median for an even count) of independent copies with seeds
// derived from options.seed. The reported components are those of the
// median copy.
EstimateReport run_amplified(const EdgeStream& stream, const RunOptions& options, double delta,
                             double a = 8.0, unsigned threads = 1);

// Sample S_E at rate p, then return sum_e s(e) / (4 p^3), where s(e) counts
// paths of three S_E edges that e closes into a 4-cycle. Two replays.
double baseline_estimate(const EdgeStream& stream, double p, std::uint64_t seed);

}  // namespace fourcycle
