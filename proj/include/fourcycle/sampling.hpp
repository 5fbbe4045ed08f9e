#pragma once

#include <cstdint>
#include <vector>

#include "fourcycle/graph.hpp"
#include "fourcycle/rng.hpp"

namespace fourcycle {

// p = min(1, c ln(n) / (eps^2 t_floor^(1/3))). Throws Error(kParameter)
// unless 0 < eps < 1, t_floor >= 1, n >= 2 and c > 0.
double compute_p(double epsilon, std::uint64_t t_floor, std::size_t n, double c);

struct SamplingParams {
  double p = 1.0;
  double epsilon = 0.2;
  std::uint64_t t_floor = 1;  // promised lower bound on T
  double c = 1.0;
  std::size_t n = 0;

  static SamplingParams from_formula(double epsilon, std::uint64_t t_floor, std::size_t n,
                                     double c);
  // Explicit rate; thresholds still follow t_floor. Throws unless p in (0, 1].
  static SamplingParams with_rate(double p, double epsilon, std::uint64_t t_floor,
                                  std::size_t n, double c);

  // q(u,v) >= p t_floor^(1/3) marks a heavy diamond.
  double wedge_threshold() const;
  // t_hat(e) >= t_floor^(2/3) marks a heavy edge.
  double edge_threshold() const;
};

// Consistent Bernoulli(p) membership via a keyed hash of the id.
class VertexSampler {
 public:
  VertexSampler(std::uint64_t seed, double p) : seed_(seed), p_(p) {}
  bool operator()(VertexId v) const { return unit_interval(keyed_hash(seed_, v)) < p_; }

 private:
  std::uint64_t seed_;
  double p_;
};

class EdgeSampler {
 public:
  EdgeSampler(std::uint64_t seed, double p) : seed_(seed), p_(p) {}
  bool operator()(const Edge& e) const { return unit_interval(keyed_hash(seed_, e.key())) < p_; }

 private:
  std::uint64_t seed_;
  double p_;
};

struct SampleSeeds {
  std::uint64_t edges = 0;
  std::uint64_t q = 0;
  std::uint64_t z = 0;

  static SampleSeeds derive(std::uint64_t master) {
    return {derive_seed(master, 0xE), derive_seed(master, 0x51), derive_seed(master, 0x2A)};
  }
};

// Output of the first pass. Edge lists are in stream order, vertex lists
// sorted. An edge with both endpoints sampled is stored once.
struct SampleSets {
  std::vector<Edge> s_edges;
  std::vector<VertexId> q_vertices;
  std::vector<Edge> q_edges;
  std::vector<VertexId> z_vertices;
  std::vector<Edge> z_edges;
};

// One replay of the stream.
SampleSets pass1(const EdgeStream& stream, const SamplingParams& params, const SampleSeeds& seeds);

}  // namespace fourcycle
