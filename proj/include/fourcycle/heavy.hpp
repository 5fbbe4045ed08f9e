#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "fourcycle/graph.hpp"
#include "fourcycle/sampling.hpp"

namespace fourcycle {

// Post-pass-1 table of q(u,v): the number of wedges with endpoints u, v
// whose centre is in Q_V. A pair is heavy when q(u,v) >= p t_floor^(1/3).
// Pairs absent from the table are light.
class HeavyIndex {
 public:
  HeavyIndex() = default;
  HeavyIndex(double p, double wedge_threshold) : p_(p), threshold_(wedge_threshold) {}

  double p() const { return p_; }
  double wedge_threshold() const { return threshold_; }

  std::uint32_t q(VertexId a, VertexId b) const;
  bool is_heavy(VertexId a, VertexId b) const {
    const std::uint32_t count = q(a, b);
    return count > 0 && count >= threshold_;
  }

  // t_hat(w) = q/p - 1, clamped at zero.
  double wedge_estimate(VertexId a, VertexId b) const;
  // t_hat(d) = C(q/p, 2) on the real-valued q/p.
  double diamond_estimate(VertexId a, VertexId b) const;

  // Sum of t_hat(d) over heavy pairs.
  double t_h_hat() const { return t_h_hat_; }

  std::size_t pairs_seen() const { return pairs_seen_; }
  std::size_t pairs_retained() const { return q_.size(); }
  std::size_t heavy_pairs() const { return heavy_count_; }
  std::vector<Diamond> heavy_diamonds() const;

 private:
  friend HeavyIndex build_heavy_index(const SampleSets&, const SamplingParams&, bool);

  double p_ = 1.0;
  double threshold_ = 0.0;
  std::unordered_map<std::uint64_t, std::uint32_t> q_;
  double t_h_hat_ = 0.0;
  std::size_t pairs_seen_ = 0;
  std::size_t heavy_count_ = 0;
};

// With prune_light, only heavy pairs survive post-processing.
HeavyIndex build_heavy_index(const SampleSets& samples, const SamplingParams& params,
                             bool prune_light = true);

inline bool is_heavy_wedge(const HeavyIndex& index, VertexId endpoint_a, VertexId endpoint_b) {
  return index.is_heavy(endpoint_a, endpoint_b);
}

enum class EdgeLabel { kLight, kHeavy };

struct EdgeClass {
  EdgeLabel label = EdgeLabel::kLight;
  double t_hat_heavy = 0.0;  // from heavy wedges through e
  double t_hat_light = 0.0;  // lambda counts over light wedges, scaled by 1/p

  double estimate() const { return t_hat_heavy + t_hat_light; }
};

using EdgeClassMap = std::unordered_map<Edge, EdgeClass, EdgeHash>;

struct ClassifierStats {
  std::uint64_t instances = 0;
  std::uint64_t exclusions = 0;  // Z-edges excluded, summed over instances
};

// Edge classification oracle, run for every query edge in one shared
// replay of the stream.
//
// For e = (u, v) every stream edge e* sharing a vertex with e forms a wedge
// (e, e*). Heavy wedges contribute t_hat(w) to t_hat_heavy. Light wedges
// anchored at the larger endpoint v, e* = (v, a), contribute
// lambda(e, e*) / p, where lambda counts b in Z_V \ {u, v, a} with (a, b)
// and (b, u) in Z_E. Z-edges that form a heavy wedge with e are excluded
// for this instance only. Anchoring makes every light cycle through e
// counted by exactly one of its two wedges containing e.
EdgeClassMap classify_edges(std::span<const Edge> queries, const HeavyIndex& index,
                            const SampleSets& samples, const SamplingParams& params,
                            const EdgeStream& stream, ClassifierStats* stats = nullptr);

EdgeClass classify_edge(const Edge& e, const HeavyIndex& index, const SampleSets& samples,
                        const SamplingParams& params, const EdgeStream& stream);

}  // namespace fourcycle
