/* C interface to the transversal game library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a tg_status; on failure tg_last_error() gives
 * a message that stays valid on the calling thread until its next call.
 * Strings returned through char** are heap copies owned by the caller and
 * released with tg_string_free().
 */
#ifndef TGAME_TGAME_H
#define TGAME_TGAME_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TG_API __declspec(dllexport)
#else
#define TG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tg_hypergraph tg_hypergraph;
typedef struct tg_game tg_game;
typedef struct tg_strategy tg_strategy;
typedef struct tg_corpus tg_corpus;

typedef enum tg_status {
  TG_OK = 0,
  TG_ERR_INVALID_ARGUMENT,
  TG_ERR_PARSE,
  TG_ERR_INDEX_OUT_OF_RANGE,
  TG_ERR_EMPTY_EDGE,
  TG_ERR_ILLEGAL_MOVE,
  TG_ERR_LIMIT_EXCEEDED,
  TG_ERR_NOT_UNIFORM,
  TG_ERR_UNREACHABLE_CELL,
  TG_ERR_UNKNOWN_NAME,
  TG_ERR_ISOLATED_VERTEX,
  TG_ERR_HYPOTHESIS_VIOLATED,
  TG_ERR_UNSATISFIABLE,
  TG_ERR_NO_ATTACHED_EDGE,
  TG_ERR_IO,
  TG_ERR_INTERNAL
} tg_status;

typedef enum tg_role { TG_EDGE_HITTER = 0, TG_STALLER = 1 } tg_role;

typedef struct tg_limits {
  int max_edges;           /* largest edge count for exact game solves */
  uint64_t max_nodes;      /* 0: unlimited */
  uint64_t time_budget_ms; /* 0: unlimited */
  int threads;             /* solver and sweep workers */
  int prune_dominated;     /* nonzero: skip dominated moves */
} tg_limits;

typedef struct tg_solve_result {
  int tau;
  int tau_g;
  int tau_g_prime;
  uint64_t memo_entries;
} tg_solve_result;

TG_API void tg_limits_default(tg_limits* out);

TG_API const char* tg_last_error(void);
/* Line of the last parse error, 0 when the last error was not a parse error. */
TG_API int tg_last_error_line(void);
TG_API const char* tg_status_name(tg_status status);
TG_API void tg_string_free(char* s);

/* Hypergraphs. Edge e lists edge_sizes[e] ids from `vertices`, in order. */
TG_API tg_status tg_hypergraph_create(int n, const int32_t* vertices, const int32_t* edge_sizes, int m,
                                      tg_hypergraph** out);
/* `warnings` may be NULL; otherwise receives newline-separated warnings. */
TG_API tg_status tg_hypergraph_parse(const char* text, tg_hypergraph** out, char** warnings);
TG_API tg_status tg_hypergraph_load(const char* path, tg_hypergraph** out, char** warnings);
TG_API tg_status tg_hypergraph_emit(const tg_hypergraph* h, char** out);
TG_API tg_status tg_hypergraph_clone(const tg_hypergraph* h, tg_hypergraph** out);
TG_API void tg_hypergraph_free(tg_hypergraph* h);
TG_API int tg_hypergraph_order(const tg_hypergraph* h);
TG_API int tg_hypergraph_size(const tg_hypergraph* h);
/* Copies edge e into buf (capacity cap); *len receives its size. */
TG_API tg_status tg_hypergraph_edge(const tg_hypergraph* h, int e, int32_t* buf, int cap, int* len);
/* Degrees, uniformity, linearity, components, duplicates removed. */
TG_API tg_status tg_hypergraph_summary_json(const tg_hypergraph* h, char** out);

/* Named constructions: C4, figure2, complete(n,k), isolated_edges(t,k),
 * cycle(n), Hk(k), corona(k,pendant) on `base`. `params` is "key=value"
 * pairs separated by commas, or NULL. */
TG_API tg_status tg_construct(const char* name, const char* params, const tg_hypergraph* base,
                              tg_hypergraph** out);
/* Simple graph to its open (closed = 0) or closed (closed != 0)
 * neighborhood hypergraph. */
TG_API tg_status tg_neighborhood_hypergraph(const tg_hypergraph* g, int closed, tg_hypergraph** out);

/* Generators. max_degree < 0 means no cap. */
TG_API tg_status tg_generate_random(int n, int m, int k, int linear, int max_degree, uint64_t seed,
                                    tg_hypergraph** out);
TG_API tg_status tg_corpus_random(int k, int count, int n_max, int m_max, uint64_t base_seed,
                                  tg_corpus** out);
TG_API tg_status tg_corpus_enumerate(int n_max, int m_max, int k, tg_corpus** out);
TG_API tg_status tg_corpus_create(tg_corpus** out);
/* Instances written back to back in the text format, tagged `family`. */
TG_API tg_status tg_corpus_parse(const char* text, const char* family, tg_corpus** out);
TG_API tg_status tg_corpus_append(tg_corpus* c, const tg_hypergraph* h, const char* family);
TG_API tg_status tg_corpus_extend(tg_corpus* c, const tg_corpus* other);
TG_API size_t tg_corpus_size(const tg_corpus* c);
TG_API tg_status tg_corpus_get(const tg_corpus* c, size_t index, tg_hypergraph** out);
/* All instances back to back in the text file format. */
TG_API tg_status tg_corpus_emit(const tg_corpus* c, char** out);
TG_API void tg_corpus_free(tg_corpus* c);

/* Exact values. `limits` may be NULL for defaults. */
TG_API tg_status tg_solve(const tg_hypergraph* h, const tg_limits* limits, tg_solve_result* out);
TG_API tg_status tg_transversal_number(const tg_hypergraph* h, const tg_limits* limits, int* out);

/* Weights of a position: covered is a bit mask of covered edges. */
TG_API tg_status tg_weight3(const tg_hypergraph* h, uint64_t covered, int64_t* out);
TG_API tg_status tg_weight4(const tg_hypergraph* h, uint64_t covered, int delta_star, int64_t* out);
TG_API tg_status tg_bound_rhs_3a(const tg_hypergraph* h, int64_t* out);

/* Games. */
TG_API tg_status tg_game_create(const tg_hypergraph* h, tg_role first, uint64_t precovered, tg_game** out);
TG_API void tg_game_free(tg_game* g);
TG_API tg_status tg_game_apply(tg_game* g, int vertex);
TG_API int tg_game_is_legal(const tg_game* g, int vertex);
TG_API int tg_game_is_terminal(const tg_game* g);
TG_API int tg_game_length(const tg_game* g);
TG_API tg_role tg_game_to_move(const tg_game* g);
TG_API uint64_t tg_game_uncovered(const tg_game* g);
TG_API tg_status tg_game_legal_moves(const tg_game* g, int32_t* buf, int cap, int* len);
TG_API tg_status tg_game_value(const tg_game* g, const tg_limits* limits, int* out);
TG_API tg_status tg_game_best_move(const tg_game* g, const tg_limits* limits, int* out);
TG_API tg_status tg_game_transcript(const tg_game* g, char** jsonl);

/* Strategies: exact, greedy, random:SEED, eh3, eh4, corona. The corona
 * policy reads its labels from `labeled`, a hypergraph built by
 * tg_construct("corona", ...); pass NULL otherwise. */
TG_API tg_status tg_strategy_create(const char* spec, const tg_hypergraph* labeled,
                                    const tg_limits* limits, tg_strategy** out);
TG_API void tg_strategy_free(tg_strategy* s);
/* `rule` may be NULL. */
TG_API tg_status tg_strategy_choose(tg_strategy* s, const tg_game* g, int* vertex, char** rule);

/* scheme: 0 for none, 3 or 4 to record weight decreases. */
TG_API tg_status tg_play_match(const tg_hypergraph* h, const tg_strategy* edge_hitter,
                               const tg_strategy* staller, tg_role first, int scheme, int* length,
                               char** transcript_jsonl);
/* `fixed` plays for fixed_role; the other side searches exhaustively. */
TG_API tg_status tg_evaluate_strategy(const tg_game* start, const tg_strategy* fixed, tg_role fixed_role,
                                      const tg_limits* limits, int* length, char** witness_jsonl);
TG_API tg_status tg_worst_case(const tg_hypergraph* h, const tg_strategy* edge_hitter, tg_role first,
                               const tg_limits* limits, int* length, char** witness_jsonl);

/* Verification. Reports are JSON; *ok is 1 when nothing was violated. */
TG_API tg_status tg_check_bounds(const tg_hypergraph* h, const tg_limits* limits, char** json, int* ok);
TG_API tg_status tg_check_continuation(const tg_hypergraph* h, int trials, uint64_t seed,
                                       const tg_limits* limits, char** json, int* ok);
TG_API tg_status tg_check_corona(const tg_hypergraph* base, int k, int pendant_size,
                                 const tg_limits* limits, char** json, int* ok);
/* checks: comma-separated check names, or NULL for all. */
TG_API tg_status tg_sweep(const tg_corpus* c, const char* descriptor, const char* checks,
                          const tg_limits* limits, char** csv, char** report_json, int* ok);

/* Interactive play. read returns the next line without its newline, or NULL
 * at end of input; the pointer must stay valid until the next call. */
typedef const char* (*tg_read_fn)(void* user);
typedef void (*tg_write_fn)(void* user, const char* text, size_t len);
TG_API tg_status tg_play_session(const tg_hypergraph* h, tg_role human, tg_role first, const char* engine,
                                 const tg_limits* limits, tg_read_fn read, tg_write_fn write, void* user,
                                 int* aborted, char** transcript_jsonl);

#ifdef __cplusplus
}
#endif

#endif
