#include <doctest.h>

#include <cstring>
#include <string>

#include "fourcycle/fourcycle.h"

TEST_CASE("stream handles") {
  const uint32_t c4[] = {0, 1, 1, 2, 2, 3, 3, 0};
  fc_stream* s = nullptr;
  REQUIRE(fc_stream_from_edges(c4, 4, &s) == FC_OK);
  uint64_t n = 0, m = 0;
  CHECK(fc_stream_size(s, &n, &m) == FC_OK);
  CHECK(n == 4);
  CHECK(m == 4);
  uint32_t u = 0, v = 0;
  CHECK(fc_stream_edge(s, 3, &u, &v) == FC_OK);
  CHECK(u == 0);
  CHECK(v == 3);
  CHECK(fc_stream_edge(s, 4, &u, &v) == FC_ERR_USAGE);

  uint64_t t = 0;
  CHECK(fc_exact_count(s, &t) == FC_OK);
  CHECK(t == 1);
  CHECK(fc_stream_replays(s) == 1);

  double b = 0;
  CHECK(fc_baseline_estimate(s, 1.0, 3, &b) == FC_OK);
  CHECK(b == doctest::Approx(1.0));
  CHECK(fc_stream_replays(s) == 3);
  fc_stream_free(s);
}

TEST_CASE("malformed streams and bad parameters map to status codes") {
  const uint32_t loop[] = {2, 2};
  fc_stream* s = nullptr;
  CHECK(fc_stream_from_edges(loop, 1, &s) == FC_ERR_INPUT);
  CHECK(std::string(fc_last_error()).find("self-loop") != std::string::npos);
  CHECK(fc_stream_load("/nonexistent/x.txt", &s) == FC_ERR_INPUT);
  CHECK(fc_stream_generate("er:n=10", &s) == FC_ERR_USAGE);
  CHECK(fc_stream_generate(nullptr, &s) == FC_ERR_USAGE);

  REQUIRE(fc_stream_generate("biclique:a=3,b=3", &s) == FC_OK);
  fc_run_options options;
  fc_run_options_init(&options);
  options.epsilon = 1.5;
  fc_estimate est;
  CHECK(fc_run(s, &options, &est) == FC_ERR_USAGE);
  fc_run_options_init(&options);
  CHECK(fc_run_amplified(s, &options, 0.0, &est) == FC_ERR_USAGE);
  fc_stream_free(s);
}

TEST_CASE("three-pass run through the C API") {
  fc_stream* s = nullptr;
  REQUIRE(fc_stream_generate("biclique:a=3,b=3", &s) == FC_OK);
  fc_run_options options;
  fc_run_options_init(&options);
  options.t_floor = 9;
  fc_estimate est;
  REQUIRE(fc_run(s, &options, &est) == FC_OK);
  CHECK(est.p == 1.0);
  CHECK(est.t_hat == doctest::Approx(18.0));
  CHECK(est.heavy_pairs == 6);
  CHECK(fc_stream_replays(s) == 3);

  options.t_floor = 1000000;
  options.p_override = 1.0;
  REQUIRE(fc_run_amplified(s, &options, 0.5, &est) == FC_OK);
  CHECK(est.copies == 6);
  CHECK(est.t_hat == doctest::Approx(9.0));
  CHECK(est.a0 == 36);

  fc_stream* permuted = nullptr;
  REQUIRE(fc_stream_permute(s, 4, &permuted) == FC_OK);
  uint64_t t = 0;
  CHECK(fc_exact_count(permuted, &t) == FC_OK);
  CHECK(t == 9);
  fc_stream_free(permuted);
  fc_stream_free(s);
}

TEST_CASE("experiments and validation") {
  char* report = nullptr;
  REQUIRE(fc_run_experiment(R"({"gen":"biclique:a=3,b=3","algo":"exact","format":"json"})", &report) == FC_OK);
  CHECK(std::string(report).find("\"exact_t\": 9") != std::string::npos);
  fc_string_free(report);
  CHECK(fc_run_experiment(R"({"gen":"biclique:a=3,b=3","algo":"magic"})", &report) == FC_ERR_USAGE);
  CHECK(fc_run_experiment(R"({"input":"/nonexistent"})", &report) == FC_ERR_INPUT);

  fc_diagnostics diag;
  char* text = nullptr;
  CHECK(fc_validate_file("/nonexistent", &diag, &text) == FC_ERR_INPUT);
  CHECK(std::strlen(fc_version()) > 0);
  CHECK(std::string(fc_status_string(FC_ERR_INTERNAL)) == "internal error");
}
