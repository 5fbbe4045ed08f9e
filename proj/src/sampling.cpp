#include "fourcycle/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "fourcycle/error.hpp"

namespace fourcycle {
namespace {

void check_common(double epsilon, std::uint64_t t_floor, double c) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorKind::kParameter, "epsilon must lie in (0,1), got " + std::to_string(epsilon));
  }
  if (t_floor < 1) throw Error(ErrorKind::kParameter, "t_floor must be >= 1");
  if (!(c > 0.0)) throw Error(ErrorKind::kParameter, "c must be positive, got " + std::to_string(c));
}

}  // namespace

double compute_p(double epsilon, std::uint64_t t_floor, std::size_t n, double c) {
  check_common(epsilon, t_floor, c);
  if (n < 2) throw Error(ErrorKind::kParameter, "n must be >= 2, got " + std::to_string(n));
  const double raw = c * std::log(static_cast<double>(n)) /
                     (epsilon * epsilon * std::cbrt(static_cast<double>(t_floor)));
  return std::min(1.0, raw);
}

SamplingParams SamplingParams::from_formula(double epsilon, std::uint64_t t_floor, std::size_t n,
                                            double c) {
  return {compute_p(epsilon, t_floor, n, c), epsilon, t_floor, c, n};
}

SamplingParams SamplingParams::with_rate(double p, double epsilon, std::uint64_t t_floor,
                                         std::size_t n, double c) {
  check_common(epsilon, t_floor, c);
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kParameter, "sampling rate must lie in (0,1], got " + std::to_string(p));
  }
  return {p, epsilon, t_floor, c, n};
}

double SamplingParams::wedge_threshold() const {
  return p * std::cbrt(static_cast<double>(t_floor));
}

double SamplingParams::edge_threshold() const {
  return std::pow(static_cast<double>(t_floor), 2.0 / 3.0);
}

SampleSets pass1(const EdgeStream& stream, const SamplingParams& params, const SampleSeeds& seeds) {
  const EdgeSampler take_edge(seeds.edges, params.p);
  const VertexSampler in_q(seeds.q, params.p);
  const VertexSampler in_z(seeds.z, params.p);

  SampleSets out;
  std::unordered_set<VertexId> q_seen;
  std::unordered_set<VertexId> z_seen;
  for (const Edge& e : stream.replay()) {
    if (take_edge(e)) out.s_edges.push_back(e);

    const bool qu = in_q(e.u);
    const bool qv = in_q(e.v);
    if (qu) q_seen.insert(e.u);
    if (qv) q_seen.insert(e.v);
    if (qu || qv) out.q_edges.push_back(e);

    const bool zu = in_z(e.u);
    const bool zv = in_z(e.v);
    if (zu) z_seen.insert(e.u);
    if (zv) z_seen.insert(e.v);
    if (zu || zv) out.z_edges.push_back(e);
  }
  out.q_vertices.assign(q_seen.begin(), q_seen.end());
  std::sort(out.q_vertices.begin(), out.q_vertices.end());
  out.z_vertices.assign(z_seen.begin(), z_seen.end());
  std::sort(out.z_vertices.begin(), out.z_vertices.end());
  return out;
}

}  // namespace fourcycle
