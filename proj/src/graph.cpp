#include "fourcycle/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "fourcycle/error.hpp"

namespace fourcycle {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameter: return "parameter error";
    case ErrorKind::kMalformedStream: return "malformed stream";
    case ErrorKind::kInvalidCycle: return "invalid cycle";
    case ErrorKind::kMissingEdge: return "missing edge";
    case ErrorKind::kSizeGuard: return "size guard";
    case ErrorKind::kIo: return "i/o error";
    case ErrorKind::kInternal: return "internal error";
  }
  return "unknown error";
}

Wedge Wedge::make(VertexId end1, VertexId center, VertexId end2) {
  if (end1 == end2 || end1 == center || end2 == center) {
    throw Error(ErrorKind::kInvalidCycle, "wedge vertices must be distinct");
  }
  return Wedge{std::min(end1, end2), std::max(end1, end2), center};
}

bool FourCycle::contains(const Edge& e) const {
  for (const Edge& own : edges()) {
    if (own == e) return true;
  }
  return false;
}

FourCycle canonical_cycle(VertexId u, VertexId a, VertexId v, VertexId b) {
  const std::array<VertexId, 4> seq{u, a, v, b};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (seq[i] == seq[j]) {
        throw Error(ErrorKind::kInvalidCycle,
                    "4-cycle has repeated vertex " + std::to_string(seq[i]));
      }
    }
  }
  const auto start = static_cast<int>(std::min_element(seq.begin(), seq.end()) - seq.begin());
  const VertexId next = seq[(start + 1) % 4];
  const VertexId prev = seq[(start + 3) % 4];
  const int step = next < prev ? 1 : 3;
  FourCycle out;
  for (int k = 0; k < 4; ++k) out.vertices[k] = seq[(start + k * step) % 4];
  return out;
}

EdgeStream::EdgeStream()
    : edges_(std::make_shared<const std::vector<Edge>>()),
      replays_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

EdgeStream::EdgeStream(std::vector<Edge> edges, std::size_t n)
    : replays_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::size_t max_id_plus_one = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.is_loop()) {
      throw Error(ErrorKind::kMalformedStream,
                  "self-loop (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") at stream position " + std::to_string(i));
    }
    if (!seen.insert(e.key()).second) {
      throw Error(ErrorKind::kMalformedStream,
                  "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") at stream position " + std::to_string(i));
    }
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::size_t{e.v} + 1);
  }
  n_ = std::max(n, max_id_plus_one);
  edges_ = std::make_shared<const std::vector<Edge>>(std::move(edges));
}

EdgeStream EdgeStream::from_pairs(std::span<const std::pair<VertexId, VertexId>> pairs,
                                  std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.emplace_back(a, b);
  return EdgeStream(std::move(edges), n);
}

std::span<const Edge> EdgeStream::replay() const {
  replays_->fetch_add(1);
  return *edges_;
}

EdgeStream EdgeStream::instrumented() const {
  EdgeStream copy = *this;
  copy.replays_ = std::make_shared<std::atomic<std::uint64_t>>(0);
  return copy;
}

AdjacencyGraph::AdjacencyGraph(std::size_t n, std::span<const Edge> edges)
    : adjacency_(n), m_(edges.size()) {
  for (const Edge& e : edges) {
    const std::size_t need = std::size_t{e.v} + 1;
    if (need > adjacency_.size()) adjacency_.resize(need);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool AdjacencyGraph::has_edge(VertexId a, VertexId b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& shorter = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const VertexId target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  return std::binary_search(shorter.begin(), shorter.end(), target);
}

std::vector<Edge> AdjacencyGraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

AdjacencyGraph materialize(const EdgeStream& stream) {
  return AdjacencyGraph(stream.n(), stream.replay());
}

}  // namespace fourcycle
