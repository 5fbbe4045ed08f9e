#pragma once

// Test-only reference computations. They work from an adjacency matrix and
// explicit enumeration, sharing no code with the exact or streaming paths.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fourcycle/graph.hpp"

namespace oracle {

using Cycle = std::array<fourcycle::VertexId, 4>;  // cyclic order

struct Matrix {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;

  explicit Matrix(const fourcycle::EdgeStream& s) : n(s.n()), adj(s.n(), std::vector<bool>(s.n())) {
    for (const auto& e : s.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  }
  bool operator()(std::size_t a, std::size_t b) const { return adj[a][b]; }
};

// Every 4-cycle exactly once: all 4-subsets, the three cyclic orders of each.
inline std::vector<Cycle> all_cycles(const Matrix& g) {
  std::vector<Cycle> out;
  const auto n = static_cast<fourcycle::VertexId>(g.n);
  for (fourcycle::VertexId a = 0; a < n; ++a)
    for (fourcycle::VertexId b = a + 1; b < n; ++b)
      for (fourcycle::VertexId c = b + 1; c < n; ++c)
        for (fourcycle::VertexId d = c + 1; d < n; ++d)
          for (const Cycle& cyc : {Cycle{a, b, c, d}, Cycle{a, b, d, c}, Cycle{a, c, b, d}}) {
            if (g(cyc[0], cyc[1]) && g(cyc[1], cyc[2]) && g(cyc[2], cyc[3]) && g(cyc[3], cyc[0])) {
              out.push_back(cyc);
            }
          }
  return out;
}

inline bool cycle_has_edge(const Cycle& c, fourcycle::VertexId x, fourcycle::VertexId y) {
  for (int i = 0; i < 4; ++i) {
    const auto p = c[i];
    const auto q = c[(i + 1) % 4];
    if ((p == x && q == y) || (p == y && q == x)) return true;
  }
  return false;
}

// t(e) for every edge by scanning the cycle list.
inline std::map<std::pair<fourcycle::VertexId, fourcycle::VertexId>, std::uint64_t> edge_counts(
    const fourcycle::EdgeStream& s) {
  const Matrix g(s);
  const auto cycles = all_cycles(g);
  std::map<std::pair<fourcycle::VertexId, fourcycle::VertexId>, std::uint64_t> out;
  for (const auto& e : s.edges()) {
    std::uint64_t t = 0;
    for (const auto& c : cycles) t += cycle_has_edge(c, e.u, e.v);
    out[{e.u, e.v}] = t;
  }
  return out;
}

// Cycles through the wedge end1 - center - end2.
inline std::uint64_t wedge_count(const fourcycle::EdgeStream& s, fourcycle::VertexId end1,
                                 fourcycle::VertexId center, fourcycle::VertexId end2) {
  const Matrix g(s);
  std::uint64_t t = 0;
  for (const auto& c : all_cycles(g)) t += cycle_has_edge(c, end1, center) && cycle_has_edge(c, center, end2);
  return t;
}

// Cycles where {x, y} is a diagonal (opposite vertices).
inline std::uint64_t diagonal_count(const std::vector<Cycle>& cycles, fourcycle::VertexId x,
                                    fourcycle::VertexId y) {
  std::uint64_t t = 0;
  for (const auto& c : cycles) {
    if ((c[0] == x && c[2] == y) || (c[0] == y && c[2] == x) || (c[1] == x && c[3] == y) ||
        (c[1] == y && c[3] == x)) {
      ++t;
    }
  }
  return t;
}

}  // namespace oracle
