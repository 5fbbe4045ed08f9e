#include <doctest.h>

#include <cmath>

#include "fourcycle/error.hpp"
#include "fourcycle/estimator.hpp"
#include "fourcycle/exact.hpp"
#include "fourcycle/stream_gen.hpp"
#include "oracles.hpp"

using namespace fourcycle;

namespace {

RunOptions options_for(std::uint64_t t_floor, std::optional<double> p = std::nullopt) {
  RunOptions o;
  o.epsilon = 0.2;
  o.t_floor = t_floor;
  o.p_override = p;
  o.seed = 5;
  return o;
}

struct Frozen {
  SamplingParams params;
  SampleSets samples;
  HeavyIndex index;
};

Frozen frozen_full_rate(const EdgeStream& s, std::uint64_t t_floor) {
  Frozen f;
  f.params = SamplingParams::with_rate(1.0, 0.2, t_floor, s.n(), 1.0);
  f.samples = pass1(s, f.params, SampleSeeds::derive(1));
  f.index = build_heavy_index(f.samples, f.params);
  return f;
}

// Edge (0,1) with k pages 0-a-b-1, plus ER noise on separate vertices.
EdgeStream book_with_noise(std::uint32_t pages) {
  std::vector<Edge> edges{Edge(0, 1)};
  VertexId next = 2;
  for (std::uint32_t i = 0; i < pages; ++i) {
    const VertexId a = next++;
    const VertexId b = next++;
    edges.emplace_back(0, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, 1);
  }
  const auto noise = gen::erdos_renyi(40, 0.15, 17);
  for (const Edge& e : noise.edges()) edges.emplace_back(e.u + next, e.v + next);
  return gen::permute_stream(EdgeStream(std::move(edges)), 3);
}

}  // namespace

TEST_CASE("pass2 on C4 at p = 1 stores one pair per edge") {
  const auto s = gen::cycle(4);
  const auto f = frozen_full_rate(s, 1000000);
  const auto pairs = pass2_collect(s, f.samples, f.index);
  CHECK(pairs.size() == 4);
  for (const CyclePair& pair : pairs) {
    CHECK(pair.cycle == canonical_cycle(0, 1, 2, 3));
    CHECK(pair.cycle.contains(pair.closing));
  }
  EdgeClassMap light;
  for (const Edge& e : s.edges()) light[e] = EdgeClass{};
  const auto score = pass3_score(pairs, light);
  CHECK(score.a0 == 4);
  CHECK(score.a1 == 0);
}

TEST_CASE("pass2 with an empty edge sample stores nothing") {
  const auto s = gen::biclique(3, 3);
  auto f = frozen_full_rate(s, 1000000);
  f.samples.s_edges.clear();
  CHECK(pass2_collect(s, f.samples, f.index).empty());
}

TEST_CASE("pass2 drops cycles with a heavy wedge") {
  const auto s = gen::biclique(2, 50);
  const auto f = frozen_full_rate(s, 1225);
  CHECK(pass2_collect(s, f.samples, f.index).empty());
  const auto r = run(s, options_for(1225, 1.0));
  CHECK(r.t_hat == doctest::Approx(1225));
  CHECK(r.t_hat == r.t_h_hat);
  CHECK(r.space.stored_pairs == 0);
}

TEST_CASE("pass3 scoring rules") {
  const FourCycle cycle = canonical_cycle(0, 1, 2, 3);
  const auto edges = cycle.edges();
  std::vector<CyclePair> pairs;
  for (const Edge& e : edges) pairs.push_back({e, cycle});
  EdgeClassMap classes;
  for (const Edge& e : edges) classes[e] = EdgeClass{};

  CHECK(pass3_score(pairs, classes).a0 == 4);

  classes[edges[0]].label = EdgeLabel::kHeavy;
  auto score = pass3_score(pairs, classes);
  CHECK(score.a0 == 0);
  CHECK(score.a1 == 1);

  classes[edges[2]].label = EdgeLabel::kHeavy;
  score = pass3_score(pairs, classes);
  CHECK(score.a0 == 0);
  CHECK(score.a1 == 0);

  classes.erase(edges[1]);
  try {
    pass3_score(pairs, classes);
    FAIL("missing class accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInternal);
  }
}

TEST_CASE("run regression fixtures in the small-T regime") {
  SUBCASE("C4 with t_floor 1") {
    const auto r = run(gen::cycle(4), options_for(1));
    CHECK(r.params.p == 1.0);
    CHECK(r.t_h_hat == doctest::Approx(2.0));
    CHECK(r.a0 == 0);
    CHECK(r.a1 == 0);
    CHECK(r.t_hat == doctest::Approx(2.0));
    CHECK_FALSE(r.large_t_regime);
  }
  SUBCASE("K_{3,3} with t_floor 9") {
    const auto r = run(gen::biclique(3, 3), options_for(9));
    CHECK(r.params.p == 1.0);
    CHECK(r.space.heavy_pairs_retained == 6);
    CHECK(r.t_h_hat == doctest::Approx(18.0));
    CHECK(r.t_l_hat == 0.0);
    CHECK(r.t_hat == doctest::Approx(18.0));
  }
}

TEST_CASE("report invariants hold") {
  const auto s = gen::planted(gen::GenSpec::parse("er:n=80,p=0.12,seed=4"), {{2, 25}}, 6);
  const auto t = exact::count_4cycles(materialize(s));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RunOptions o = options_for(t, 0.5);
    o.seed = seed;
    const auto r = run(s, o);
    const double p3 = r.params.p * r.params.p * r.params.p;
    CHECK(r.t_hat == doctest::Approx(r.t_h_hat + r.t_l_hat));
    CHECK(r.t_l_hat == doctest::Approx(r.a0 / (4 * p3) + r.a1 / p3));
    CHECK(r.a0 + r.a1 <= r.space.stored_pairs);
  }
}

TEST_CASE("run is deterministic for a fixed seed") {
  const auto s = gen::erdos_renyi(60, 0.2, 8);
  const auto a = run(s, options_for(500, 0.4));
  const auto b = run(s, options_for(500, 0.4));
  CHECK(a.t_hat == b.t_hat);
  CHECK(a.a0 == b.a0);
  CHECK(a.space.total() == b.space.total());
}

TEST_CASE("pass budget") {
  const auto s = gen::erdos_renyi(40, 0.2, 1);
  const auto r = s.instrumented();
  run(r, options_for(100, 0.5));
  CHECK(r.replay_count() == 3);
  const auto b = s.instrumented();
  baseline_estimate(b, 0.5, 1);
  CHECK(b.replay_count() == 2);
  const auto e = s.instrumented();
  materialize(e);
  CHECK(e.replay_count() == 1);
  // A run with nothing to classify still takes its third pass.
  const auto single = EdgeStream({Edge(0, 1), Edge(1, 2)}).instrumented();
  run(single, options_for(1));
  CHECK(single.replay_count() == 3);
}

TEST_CASE("amplification copy count and median") {
  CHECK(amplification_copies(0.5) == 6);
  CHECK(amplification_copies(0.1) == 19);
  CHECK(amplification_copies(0.5, 1.0) == 1);
  CHECK_THROWS_AS(amplification_copies(0.0), Error);
  CHECK_THROWS_AS(amplification_copies(1.0), Error);

  const auto s = gen::erdos_renyi(30, 0.3, 2);
  const auto t = exact::count_4cycles(materialize(s));
  const auto single = run(s, options_for(1000000, 1.0));
  const auto amp = run_amplified(s, options_for(1000000, 1.0), 0.5);
  CHECK(amp.copy_estimates.size() == 6);
  CHECK(amp.t_hat == single.t_hat);
  CHECK(amp.t_hat == doctest::Approx(static_cast<double>(t)));

  // Lower median of the copies.
  const auto noisy = run_amplified(s, options_for(1000000, 0.4), 0.5);
  auto sorted = noisy.copy_estimates;
  std::sort(sorted.begin(), sorted.end());
  CHECK(noisy.t_hat == sorted[2]);
  CHECK(noisy.copies_space_max <= noisy.copies_space_total);
  // Threads do not change the answer.
  const auto threaded = run_amplified(s, options_for(1000000, 0.4), 0.5, 8.0, 3);
  CHECK(threaded.copy_estimates == noisy.copy_estimates);
}

TEST_CASE("baseline is exact at p = 1") {
  CHECK(baseline_estimate(EdgeStream({}, 5), 1.0, 1) == 0.0);
  for (const auto& s : {gen::cycle(4), gen::complete(6), gen::biclique(3, 4), gen::erdos_renyi(25, 0.3, 4)}) {
    CHECK(baseline_estimate(s, 1.0, 9) == doctest::Approx(exact::count_4cycles(materialize(s))));
  }
  CHECK_THROWS_AS(baseline_estimate(gen::cycle(4), 0.0, 1), Error);
}

TEST_CASE("baseline is unbiased on a third graph") {
  const auto s = gen::complete(7);  // T = 3 * C(7,4) = 105
  const double truth = static_cast<double>(exact::count_4cycles(materialize(s)));
  REQUIRE(truth == 105);
  const int trials = 4000;
  double sum = 0, sq = 0;
  for (int t = 0; t < trials; ++t) {
    const double x = baseline_estimate(s, 0.5, t);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sq / trials - mean * mean) / trials);
  CHECK(std::abs(mean - truth) <= 3 * se);
}

TEST_CASE("A0 and A1 are unbiased under a frozen classification") {
  // Classification and heavy index frozen from a p = 1 pass 1; only S_E is
  // re-sampled at rate p.
  const auto s = book_with_noise(20);
  const auto f = frozen_full_rate(s, 27);  // wedge threshold 3, edge threshold 9
  const auto classes = classify_edges(s.edges(), f.index, f.samples, f.params, s);
  REQUIRE(classes.at(Edge(0, 1)).label == EdgeLabel::kHeavy);

  // Oracle side: classify cycles by heavy wedges / heavy edges.
  std::uint64_t t0 = 0, t1 = 0;
  for (const auto& c : oracle::all_cycles(oracle::Matrix(s))) {
    if (f.index.is_heavy(c[0], c[2]) || f.index.is_heavy(c[1], c[3])) continue;
    int heavy = 0;
    for (int i = 0; i < 4; ++i) heavy += classes.at(Edge(c[i], c[(i + 1) % 4])).label == EdgeLabel::kHeavy;
    t0 += heavy == 0;
    t1 += heavy == 1;
  }
  REQUIRE(t1 >= 20);
  REQUIRE(t0 > 0);

  const double p = 0.5;
  const int trials = 3000;
  double s0 = 0, q0 = 0, s1 = 0, q1 = 0;
  for (int t = 0; t < trials; ++t) {
    SampleSets samples = f.samples;
    samples.s_edges.clear();
    const EdgeSampler take(SampleSeeds::derive(t).edges, p);
    for (const Edge& e : s.edges()) {
      if (take(e)) samples.s_edges.push_back(e);
    }
    const auto score = pass3_score(pass2_collect(s, samples, f.index), classes);
    s0 += score.a0;
    q0 += double(score.a0) * score.a0;
    s1 += score.a1;
    q1 += double(score.a1) * score.a1;
  }
  const double m0 = s0 / trials, m1 = s1 / trials;
  const double se0 = std::sqrt((q0 / trials - m0 * m0) / trials);
  const double se1 = std::sqrt((q1 / trials - m1 * m1) / trials);
  CHECK(std::abs(m0 - 4 * p * p * p * t0) <= 3 * se0);
  CHECK(std::abs(m1 - p * p * p * t1) <= 3 * se1);
}

TEST_CASE("space stays within its analytic envelope") {
  // |S_E| ~ mp and |Q_E|, |Z_E| ~ m(2p - p^2) each; stored pairs <= 4 T p^3.
  const auto s = gen::erdos_renyi(120, 0.1, 21);
  const double m = static_cast<double>(s.m());
  const double T = static_cast<double>(exact::count_4cycles(materialize(s)));
  const double p = 0.3;
  const int trials = 300;
  double samples = 0, stored = 0;
  for (int i = 0; i < trials; ++i) {
    RunOptions o = options_for(100000, p);
    o.seed = 7000 + i;
    const auto r = run(s, o);
    samples += r.space.s_edges + r.space.q_edges + r.space.z_edges;
    stored += r.space.stored_pairs;
  }
  const double expected = m * p + 2 * m * (2 * p - p * p);
  CHECK(samples / trials == doctest::Approx(expected).epsilon(0.03));
  CHECK(samples / trials <= 5 * m * p);
  CHECK(stored / trials <= 2 * 4 * T * p * p * p);
}
