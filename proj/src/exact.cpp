#include "fourcycle/exact.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "fourcycle/error.hpp"

namespace fourcycle::exact {

std::unordered_map<std::uint64_t, std::uint32_t> codegrees(const AdjacencyGraph& g) {
  std::unordered_map<std::uint64_t, std::uint32_t> table;
  for (VertexId center = 0; center < g.n(); ++center) {
    const auto nbrs = g.neighbors(center);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) ++table[pair_key(nbrs[i], nbrs[j])];
    }
  }
  return table;
}

std::uint32_t codegree(const AdjacencyGraph& g, VertexId a, VertexId b) {
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  std::uint32_t common = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

std::uint64_t count_4cycles(const AdjacencyGraph& g) {
  std::uint64_t twice = 0;
  for (const auto& [key, codeg] : codegrees(g)) twice += choose2(codeg);
  return twice / 2;
}

std::uint64_t brute_force_count(const AdjacencyGraph& g) {
  const std::size_t n = g.n();
  if (n > 64) {
    throw Error(ErrorKind::kSizeGuard,
                "brute-force enumeration limited to n <= 64, got n = " + std::to_string(n));
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
  }
  auto edge = [&](std::size_t x, std::size_t y) { return ((adj[x] >> y) & 1u) != 0; };
  auto is_cycle = [&](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return edge(p, q) && edge(q, r) && edge(r, s) && edge(s, p);
  };
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          // The three distinct Hamiltonian cycles on {a,b,c,d}.
          count += is_cycle(a, b, c, d);
          count += is_cycle(a, b, d, c);
          count += is_cycle(a, c, b, d);
        }
      }
    }
  }
  return count;
}

std::uint64_t edge_cycle_count(const AdjacencyGraph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorKind::kMissingEdge,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
  }
  std::uint64_t count = 0;
  for (VertexId a : g.neighbors(e.v)) {
    if (a == e.u) continue;
    for (VertexId b : g.neighbors(e.u)) {
      if (b == e.v || b == a) continue;
      if (g.has_edge(a, b)) ++count;
    }
  }
  return count;
}

std::uint64_t wedge_cycle_count(const AdjacencyGraph& g, const Wedge& w) {
  if (!g.has_edge(w.endpoint_a, w.center) || !g.has_edge(w.center, w.endpoint_b)) {
    throw Error(ErrorKind::kMissingEdge, "wedge edges not in graph");
  }
  return codegree(g, w.endpoint_a, w.endpoint_b) - 1;
}

DiamondSize diamond_size(const AdjacencyGraph& g, const Diamond& d) {
  if (d.endpoint_a == d.endpoint_b) return {};
  const std::uint64_t w = codegree(g, d.endpoint_a, d.endpoint_b);
  return {w, choose2(w)};
}

ExactCounts exact_counts(const AdjacencyGraph& g) {
  ExactCounts out;
  out.codegree = codegrees(g);
  std::uint64_t twice = 0;
  for (const auto& [key, codeg] : out.codegree) twice += choose2(codeg);
  out.total = twice / 2;
  // t(u,v) = sum over a in N(v)\{u} of (codeg(u,a) - 1): every common
  // neighbour of u and a other than v closes u-v-a-b.
  auto codeg_of = [&](VertexId x, VertexId y) -> std::uint64_t {
    const auto it = out.codegree.find(pair_key(x, y));
    return it == out.codegree.end() ? 0 : it->second;
  };
  for (const Edge& e : g.edge_list()) {
    std::uint64_t t = 0;
    for (VertexId a : g.neighbors(e.v)) {
      if (a != e.u) t += codeg_of(e.u, a) - 1;
    }
    out.per_edge.emplace(e, t);
  }
  return out;
}

}  // namespace fourcycle::exact
