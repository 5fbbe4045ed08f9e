/*
 * C interface to the fourcycle library: 4-cycle counting over
 * arbitrary-order edge streams.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an fc_status; on
 * failure fc_last_error() describes the most recent error on the calling
 * thread. Status values double as CLI exit codes.
 */
#ifndef FOURCYCLE_H
#define FOURCYCLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FOURCYCLE_BUILDING)
#    define FC_API __declspec(dllexport)
#  else
#    define FC_API __declspec(dllimport)
#  endif
#else
#  define FC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_ERR_USAGE = 1,    /* bad parameter or configuration */
  FC_ERR_INPUT = 2,    /* unreadable or malformed input */
  FC_ERR_INTERNAL = 3  /* internal invariant violated */
} fc_status;

typedef struct fc_stream fc_stream;

typedef struct fc_run_options {
  double epsilon;
  uint64_t t_floor;   /* promised lower bound on the 4-cycle count */
  double c;           /* multiplier in the sampling rate */
  double p_override;  /* used instead of the formula rate when > 0 */
  uint64_t seed;
  int prune_light_pairs;
} fc_run_options;

typedef struct fc_estimate {
  double t_hat;
  double t_h_hat;
  double t_l_hat;
  uint64_t a0;
  uint64_t a1;
  double p;
  uint64_t s_edges;
  uint64_t q_edges;
  uint64_t z_edges;
  uint64_t heavy_pairs;
  uint64_t stored_pairs;
  uint64_t classified_edges;
  uint64_t oracle_exclusions;
  uint32_t copies;
  int large_t_regime;
} fc_estimate;

typedef struct fc_diagnostics {
  int parsed;
  int valid;
  uint64_t n;
  uint64_t m;
  uint64_t comment_lines;
  uint64_t malformed_lines;
  uint64_t self_loops;
  uint64_t duplicate_edges;
} fc_diagnostics;

FC_API const char* fc_version(void);
FC_API const char* fc_last_error(void);
FC_API const char* fc_status_string(fc_status status);

/* epsilon 0.2, t_floor 1, c 1, no override, seed 1, pruning on. */
FC_API void fc_run_options_init(fc_run_options* options);

/* endpoints holds 2 * edge_count vertex ids, one edge per consecutive pair. */
FC_API fc_status fc_stream_from_edges(const uint32_t* endpoints, size_t edge_count, fc_stream** out);
FC_API fc_status fc_stream_load(const char* path, fc_stream** out);
/* Generator spec such as "er:n=200,p=0.02,seed=7" or "biclique:a=3,b=3". */
FC_API fc_status fc_stream_generate(const char* spec, fc_stream** out);
FC_API fc_status fc_stream_permute(const fc_stream* stream, uint64_t seed, fc_stream** out);
FC_API void fc_stream_free(fc_stream* stream);

FC_API fc_status fc_stream_size(const fc_stream* stream, uint64_t* n, uint64_t* m);
/* Copies edge i (stream order) into *u, *v. */
FC_API fc_status fc_stream_edge(const fc_stream* stream, size_t i, uint32_t* u, uint32_t* v);
/* Number of passes taken over this handle so far. */
FC_API uint64_t fc_stream_replays(const fc_stream* stream);

FC_API fc_status fc_exact_count(const fc_stream* stream, uint64_t* out);
FC_API fc_status fc_baseline_estimate(const fc_stream* stream, double p, uint64_t seed, double* out);
FC_API fc_status fc_run(const fc_stream* stream, const fc_run_options* options, fc_estimate* out);
FC_API fc_status fc_run_amplified(const fc_stream* stream, const fc_run_options* options, double delta,
                                  fc_estimate* out);

/* Diagnostics for an edge-list file. Content problems are reported through
 * *out (valid == 0); only I/O failures return an error. When text is not
 * NULL it receives a printable summary to release with fc_string_free. */
FC_API fc_status fc_validate_file(const char* path, fc_diagnostics* out, char** text);

/* Runs an experiment described by a JSON config and returns the rendered
 * report (CSV or JSON per the config) in *report. */
FC_API fc_status fc_run_experiment(const char* config_json, char** report);

FC_API void fc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FOURCYCLE_H */
