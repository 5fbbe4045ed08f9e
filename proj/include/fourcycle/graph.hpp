#pragma once

#include <array>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace fourcycle {

using VertexId = std::uint32_t;

// Key for an unordered vertex pair, smaller id in the high word.
constexpr std::uint64_t pair_key(VertexId a, VertexId b) noexcept {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

constexpr std::pair<VertexId, VertexId> unpack_pair(std::uint64_t key) noexcept {
  return {static_cast<VertexId>(key >> 32), static_cast<VertexId>(key & 0xFFFFFFFFu)};
}

// Undirected edge, always stored with u <= v. A self-loop can be represented
// so that stream validation can report it, but EdgeStream rejects it.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr Edge() = default;
  constexpr Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr std::uint64_t key() const noexcept { return pair_key(u, v); }
  constexpr bool is_loop() const noexcept { return u == v; }
  constexpr bool touches(VertexId x) const noexcept { return u == x || v == x; }
  // Endpoint opposite to x; x must be an endpoint.
  constexpr VertexId other(VertexId x) const noexcept { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.key());
  }
};

// Path of length 2: endpoint_a - center - endpoint_b.
struct Wedge {
  VertexId endpoint_a = 0;
  VertexId endpoint_b = 0;
  VertexId center = 0;

  // Throws Error(kInvalidCycle) when the vertices are not distinct.
  static Wedge make(VertexId end1, VertexId center, VertexId end2);

  friend constexpr auto operator<=>(const Wedge&, const Wedge&) = default;
};

// Identified by its endpoint pair; the wedges are the common neighbours.
struct Diamond {
  VertexId endpoint_a = 0;
  VertexId endpoint_b = 0;

  constexpr Diamond() = default;
  constexpr Diamond(VertexId a, VertexId b)
      : endpoint_a(a < b ? a : b), endpoint_b(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Diamond&, const Diamond&) = default;
};

// Cycle vertices in cyclic order, normalised to the lexicographically least
// of the 8 rotations/reflections. Build through canonical_cycle().
struct FourCycle {
  std::array<VertexId, 4> vertices{};

  std::array<Edge, 4> edges() const {
    return {Edge(vertices[0], vertices[1]), Edge(vertices[1], vertices[2]),
            Edge(vertices[2], vertices[3]), Edge(vertices[3], vertices[0])};
  }
  bool contains(const Edge& e) const;

  friend constexpr auto operator<=>(const FourCycle&, const FourCycle&) = default;
};

FourCycle canonical_cycle(VertexId u, VertexId a, VertexId v, VertexId b);

// Ordered, replayable insertion-only stream of a simple undirected graph.
// Copies share the edge storage and the replay counter.
class EdgeStream {
 public:
  EdgeStream();
  // Throws Error(kMalformedStream) on a self-loop or duplicate edge. The
  // vertex count is max(n, largest id + 1).
  explicit EdgeStream(std::vector<Edge> edges, std::size_t n = 0);

  static EdgeStream from_pairs(std::span<const std::pair<VertexId, VertexId>> pairs,
                               std::size_t n = 0);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_->size(); }

  // One pass over the stream. Every call is counted.
  std::span<const Edge> replay() const;

  // Uncounted view for generators, reporting and tests.
  std::span<const Edge> edges() const noexcept { return *edges_; }

  std::uint64_t replay_count() const noexcept { return replays_->load(); }

  // Same edges, fresh replay counter.
  EdgeStream instrumented() const;

 private:
  std::shared_ptr<const std::vector<Edge>> edges_;
  std::size_t n_ = 0;
  std::shared_ptr<std::atomic<std::uint64_t>> replays_;
};

class AdjacencyGraph {
 public:
  AdjacencyGraph() = default;
  // Edges are trusted to be simple; used for sample sets as well as streams.
  AdjacencyGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return adjacency_.size(); }
  std::size_t m() const noexcept { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    if (v >= adjacency_.size()) return {};
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // All edges in (u, v) lexicographic order.
  std::vector<Edge> edge_list() const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t m_ = 0;
};

// Consumes exactly one replay of the stream.
AdjacencyGraph materialize(const EdgeStream& stream);

}  // namespace fourcycle
