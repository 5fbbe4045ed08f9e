#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "fourcycle/error.hpp"
#include "fourcycle/graph.hpp"
#include "fourcycle/stream_gen.hpp"
#include "oracles.hpp"

using namespace fourcycle;

TEST_CASE("edges are canonical unordered pairs") {
  CHECK(Edge(5, 2) == Edge(2, 5));
  CHECK(Edge(5, 2).u == 2);
  CHECK(Edge(5, 2).key() == pair_key(2, 5));
  CHECK(unpack_pair(pair_key(9, 4)) == std::pair<VertexId, VertexId>{4, 9});
}

TEST_CASE("materialize builds the adjacency of the stream") {
  const std::pair<VertexId, VertexId> c4[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const auto stream = EdgeStream::from_pairs(c4);
  const AdjacencyGraph g = materialize(stream);
  CHECK(g.m() == 4);
  CHECK(std::vector<VertexId>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<VertexId>{1, 3});
  CHECK(std::vector<VertexId>(g.neighbors(2).begin(), g.neighbors(2).end()) == std::vector<VertexId>{1, 3});
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(0, 2));

  SUBCASE("empty stream") {
    const AdjacencyGraph empty = materialize(EdgeStream({}, 5));
    CHECK(empty.m() == 0);
    for (VertexId v = 0; v < 5; ++v) CHECK(empty.degree(v) == 0);
  }
}

TEST_CASE("streams reject self-loops and duplicates") {
  const std::pair<VertexId, VertexId> loop[] = {{0, 1}, {2, 2}};
  const std::pair<VertexId, VertexId> dup[] = {{0, 1}, {1, 2}, {1, 0}};
  try {
    materialize(EdgeStream::from_pairs(loop));
    FAIL("self-loop accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMalformedStream);
  }
  try {
    EdgeStream::from_pairs(dup);
    FAIL("duplicate accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMalformedStream);
  }
}

TEST_CASE("materialize then re-serialize reproduces the edge set") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto stream = gen::erdos_renyi(30, 0.2, seed);
    std::vector<Edge> from_stream(stream.edges().begin(), stream.edges().end());
    std::sort(from_stream.begin(), from_stream.end());
    CHECK(materialize(stream).edge_list() == from_stream);
  }
}

TEST_CASE("adjacency is symmetric and degrees sum to 2m") {
  const auto stream = gen::erdos_renyi(40, 0.3, 5);
  const auto g = materialize(stream);
  std::size_t degree_sum = 0;
  for (VertexId a = 0; a < g.n(); ++a) {
    degree_sum += g.degree(a);
    for (VertexId b : g.neighbors(a)) CHECK(g.has_edge(b, a));
  }
  CHECK(degree_sum == 2 * g.m());
}

TEST_CASE("replays are counted and independent across instrumented copies") {
  const auto base = gen::cycle(5);
  const auto probe = base.instrumented();
  CHECK(probe.replay_count() == 0);
  (void)probe.replay();
  (void)probe.replay();
  CHECK(probe.replay_count() == 2);
  CHECK(base.replay_count() == 0);
  // Identical sequence on every replay.
  const auto first = probe.replay();
  const auto second = probe.replay();
  CHECK(std::equal(first.begin(), first.end(), second.begin(), second.end()));
}

TEST_CASE("canonical_cycle is invariant under rotation and reflection") {
  CHECK(canonical_cycle(0, 1, 2, 3) == canonical_cycle(2, 3, 0, 1));
  CHECK(canonical_cycle(0, 1, 2, 3) == canonical_cycle(0, 3, 2, 1));
  CHECK(canonical_cycle(7, 3, 9, 1).vertices == std::array<VertexId, 4>{1, 7, 3, 9});

  const std::array<VertexId, 4> seq{4, 8, 2, 6};
  const FourCycle expected = canonical_cycle(seq[0], seq[1], seq[2], seq[3]);
  for (int start = 0; start < 4; ++start) {
    for (int step : {1, 3}) {
      std::array<VertexId, 4> r{};
      for (int k = 0; k < 4; ++k) r[k] = seq[(start + k * step) % 4];
      CHECK(canonical_cycle(r[0], r[1], r[2], r[3]) == expected);
    }
  }
}

TEST_CASE("canonical_cycle rejects repeated vertices") {
  CHECK_THROWS_AS(canonical_cycle(0, 1, 2, 1), Error);
  CHECK_THROWS_AS(Wedge::make(1, 1, 2), Error);
}

TEST_CASE("canonical_cycle separates distinct cycles on every 4-subset") {
  // K_6 holds every possible cycle on 6 vertices: 15 subsets x 3 cycles.
  const auto k6 = gen::complete(6);
  const auto cycles = oracle::all_cycles(oracle::Matrix(k6));
  REQUIRE(cycles.size() == 45);
  std::set<FourCycle> canon;
  for (const auto& c : cycles) {
    const FourCycle f = canonical_cycle(c[0], c[1], c[2], c[3]);
    canon.insert(f);
    // The canonical edges are exactly the cycle's edges.
    for (const Edge& e : f.edges()) CHECK(oracle::cycle_has_edge(c, e.u, e.v));
  }
  CHECK(canon.size() == 45);
}
