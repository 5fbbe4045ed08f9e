#pragma once

#include <cstdint>
#include <unordered_map>

#include "fourcycle/graph.hpp"

namespace fourcycle::exact {

// Exact counts for a materialized graph.
struct ExactCounts {
  std::uint64_t total = 0;                                       // T
  std::unordered_map<Edge, std::uint64_t, EdgeHash> per_edge;    // t(e)
  std::unordered_map<std::uint64_t, std::uint32_t> codegree;     // pair_key -> |N(u) & N(v)|, nonzero only
};

// Sum over unordered pairs of C(codeg, 2), halved. O(sum deg^2).
std::uint64_t count_4cycles(const AdjacencyGraph& g);

// Enumerates all 4-subsets and checks the three possible cycles of each.
// Throws Error(kSizeGuard) when n > 64.
std::uint64_t brute_force_count(const AdjacencyGraph& g);

std::unordered_map<std::uint64_t, std::uint32_t> codegrees(const AdjacencyGraph& g);
std::uint32_t codegree(const AdjacencyGraph& g, VertexId a, VertexId b);

// t(e) by direct enumeration of (a, b) with a in N(v)\{u}, b in N(u)\{v},
// a != b, (a,b) an edge. Throws Error(kMissingEdge) if e is absent.
std::uint64_t edge_cycle_count(const AdjacencyGraph& g, const Edge& e);

// t(w) = codeg(endpoints) - 1. Throws Error(kMissingEdge) if either wedge
// edge is absent.
std::uint64_t wedge_cycle_count(const AdjacencyGraph& g, const Wedge& w);

struct DiamondSize {
  std::uint64_t wedges = 0;  // w(d)
  std::uint64_t cycles = 0;  // t(d)
  friend bool operator==(const DiamondSize&, const DiamondSize&) = default;
};
DiamondSize diamond_size(const AdjacencyGraph& g, const Diamond& d);

// T, every t(e) and the codegree table in one sweep.
ExactCounts exact_counts(const AdjacencyGraph& g);

constexpr std::uint64_t choose2(std::uint64_t k) { return k * (k - (k > 0 ? 1 : 0)) / 2; }

}  // namespace fourcycle::exact
