#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fourcycle/graph.hpp"

namespace fourcycle::gen {

// K_{a,b}: left side 0..a-1, right side a..a+b-1, row-major edge order.
EdgeStream biclique(std::uint32_t a, std::uint32_t b);

// Each of the C(n,2) pairs independently with probability edge_prob.
EdgeStream erdos_renyi(std::uint32_t n, double edge_prob, std::uint64_t seed);

// Cycle C_n, K_n. Fixtures mostly.
EdgeStream cycle(std::uint32_t n);
EdgeStream complete(std::uint32_t n);

struct BicliqueSize {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  friend bool operator==(const BicliqueSize&, const BicliqueSize&) = default;
};

// Generator name plus parameters, written as `name:key=value,key=value`.
// Recognised generators:
//   biclique:a=,b=
//   er:n=,p=,seed=
//   cycle:n=
//   complete:n=
//   planted:n=,p=,k=AxB+AxB...,seed=   (ER noise plus planted bicliques)
struct GenSpec {
  std::string name;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;

  // Throws Error(kParameter) on unknown generators or bad values.
  static GenSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

// Noise graph, then each planted biclique on fresh vertex ids, all edges
// shuffled into one order by `seed`.
EdgeStream planted(const GenSpec& noise, const std::vector<BicliqueSize>& bicliques,
                   std::uint64_t seed);

std::vector<BicliqueSize> parse_bicliques(const std::string& text);

// Uniform permutation of the stream order (Fisher-Yates).
EdgeStream permute_stream(const EdgeStream& stream, std::uint64_t seed);

EdgeStream generate(const GenSpec& spec);

}  // namespace fourcycle::gen
