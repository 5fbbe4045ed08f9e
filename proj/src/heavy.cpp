#include "fourcycle/heavy.hpp"

#include <algorithm>
#include <unordered_set>

#include "fourcycle/error.hpp"

namespace fourcycle {

std::uint32_t HeavyIndex::q(VertexId a, VertexId b) const {
  if (q_.empty()) return 0;
  const auto it = q_.find(pair_key(a, b));
  return it == q_.end() ? 0 : it->second;
}

double HeavyIndex::wedge_estimate(VertexId a, VertexId b) const {
  return std::max(0.0, q(a, b) / p_ - 1.0);
}

double HeavyIndex::diamond_estimate(VertexId a, VertexId b) const {
  const double x = q(a, b) / p_;
  return x * (x - 1.0) / 2.0;
}

std::vector<Diamond> HeavyIndex::heavy_diamonds() const {
  std::vector<Diamond> out;
  for (const auto& [key, count] : q_) {
    if (count >= threshold_) {
      const auto [a, b] = unpack_pair(key);
      out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HeavyIndex build_heavy_index(const SampleSets& samples, const SamplingParams& params,
                             bool prune_light) {
  HeavyIndex index(params.p, params.wedge_threshold());
  const AdjacencyGraph q_graph(0, samples.q_edges);
  // Every edge at a Q_V centre is in Q_E, so its Q_E neighbourhood is its
  // full neighbourhood.
  for (VertexId center : samples.q_vertices) {
    const auto nbrs = q_graph.neighbors(center);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) ++index.q_[pair_key(nbrs[i], nbrs[j])];
    }
  }
  index.pairs_seen_ = index.q_.size();
  for (auto it = index.q_.begin(); it != index.q_.end();) {
    if (it->second >= index.threshold_) {
      ++index.heavy_count_;
      const double x = it->second / index.p_;
      index.t_h_hat_ += x * (x - 1.0) / 2.0;
      ++it;
    } else if (prune_light) {
      it = index.q_.erase(it);
    } else {
      ++it;
    }
  }
  return index;
}

namespace {

struct OracleInstance {
  Edge edge;
  std::vector<VertexId> closers;  // b in Z_V adjacent to u via a non-excluded Z-edge
  double heavy = 0.0;
  double light_count = 0.0;       // sum of lambda
};

}  // namespace

EdgeClassMap classify_edges(std::span<const Edge> queries, const HeavyIndex& index,
                            const SampleSets& samples, const SamplingParams& params,
                            const EdgeStream& stream, ClassifierStats* stats) {
  std::vector<std::uint64_t> keys;
  keys.reserve(queries.size());
  for (const Edge& e : queries) keys.push_back(e.key());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  const AdjacencyGraph z_graph(0, samples.z_edges);
  const std::unordered_set<VertexId> z_vertices(samples.z_vertices.begin(), samples.z_vertices.end());

  std::vector<OracleInstance> instances;
  instances.reserve(keys.size());
  std::vector<std::vector<std::uint32_t>> by_vertex(stream.n());
  std::uint64_t exclusions = 0;

  for (const std::uint64_t key : keys) {
    const auto [a, b] = unpack_pair(key);
    const Edge e(a, b);
    OracleInstance inst{e, {}, 0.0, 0.0};
    // Exclusion: Z-edges (x, y) with x an endpoint of e whose wedge with e is
    // heavy. Only those at u can close a cycle, so only those are dropped
    // from the closer list; the rest are counted for space accounting.
    for (VertexId x : {e.u, e.v}) {
      const VertexId other = e.other(x);
      for (VertexId y : z_graph.neighbors(x)) {
        if (y == other) continue;
        const bool excluded = index.is_heavy(other, y);
        if (excluded) ++exclusions;
        if (x == e.u && !excluded && z_vertices.count(y)) inst.closers.push_back(y);
      }
    }
    const auto id = static_cast<std::uint32_t>(instances.size());
    by_vertex[e.u].push_back(id);
    by_vertex[e.v].push_back(id);
    instances.push_back(std::move(inst));
  }

  auto visit = [&](OracleInstance& inst, const Edge& star, VertexId shared) {
    if (star == inst.edge) return;
    const VertexId a = star.other(shared);
    const VertexId opposite = inst.edge.other(shared);
    if (index.is_heavy(opposite, a)) {
      inst.heavy += index.wedge_estimate(opposite, a);
      return;
    }
    if (shared != inst.edge.v) return;  // light wedges are anchored at the larger endpoint
    // Closers and Z-neighbours are both sorted; neither contains a.
    const auto z_a = z_graph.neighbors(a);
    std::uint32_t lambda = 0;
    auto c = inst.closers.begin();
    auto z = z_a.begin();
    while (c != inst.closers.end() && z != z_a.end()) {
      if (*c < *z) {
        ++c;
      } else if (*z < *c) {
        ++z;
      } else {
        ++lambda;
        ++c;
        ++z;
      }
    }
    inst.light_count += lambda;
  };

  // The pass is replayed even with no queries so that a run always uses
  // exactly three passes.
  for (const Edge& star : stream.replay()) {
    if (instances.empty()) break;
    for (VertexId shared : {star.u, star.v}) {
      for (std::uint32_t id : by_vertex[shared]) visit(instances[id], star, shared);
    }
  }

  const double threshold = params.edge_threshold();
  EdgeClassMap out;
  out.reserve(instances.size());
  for (const OracleInstance& inst : instances) {
    EdgeClass cls;
    cls.t_hat_heavy = inst.heavy;
    cls.t_hat_light = inst.light_count / params.p;
    cls.label = cls.estimate() >= threshold ? EdgeLabel::kHeavy : EdgeLabel::kLight;
    out.emplace(inst.edge, cls);
  }
  if (stats != nullptr) {
    stats->instances += instances.size();
    stats->exclusions += exclusions;
  }
  return out;
}

EdgeClass classify_edge(const Edge& e, const HeavyIndex& index, const SampleSets& samples,
                        const SamplingParams& params, const EdgeStream& stream) {
  const Edge queries[] = {e};
  const auto result = classify_edges(queries, index, samples, params, stream);
  return result.at(e);
}

}  // namespace fourcycle
