/*
 * C interface to the romancrit engine.
 *
 * Graphs are opaque handles. Every fallible call returns an rc_status; on
 * failure a message for the calling thread is available from
 * rc_last_error_message() until the next call on that thread. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with rc_string_free().
 *
 * Vertices are 0-indexed.
 */
#ifndef ROMANCRIT_H
#define ROMANCRIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define RC_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define RC_API __attribute__((visibility("default")))
#else
#  define RC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
  RC_OK = 0,
  RC_ERR_INDEX_OUT_OF_RANGE = 1,
  RC_ERR_SELF_LOOP = 2,
  RC_ERR_NO_SUCH_EDGE = 3,
  RC_ERR_EDGE_EXISTS = 4,
  RC_ERR_MALFORMED = 5,
  RC_ERR_TOO_LARGE = 6,
  RC_ERR_INVALID_ORDER = 7,
  RC_ERR_LENGTH_MISMATCH = 8,
  RC_ERR_NOT_V_CRITICAL = 9,
  RC_ERR_PRECONDITION = 10,
  RC_ERR_UNKNOWN_CLAIM = 11,
  RC_ERR_INVALID_ARGUMENT = 12,
  RC_ERR_IO = 13,
  RC_ERR_INTERNAL = 14
} rc_status;

typedef struct rc_graph rc_graph;

RC_API const char* rc_status_name(rc_status status);
RC_API const char* rc_last_error_message(void);
RC_API void rc_string_free(char* s);

/* ---- graphs ---- */

/* `edges` holds 2*edge_count vertex indices (u0, v0, u1, v1, ...). */
RC_API rc_status rc_graph_new(uint32_t order, const uint32_t* edges, size_t edge_count, rc_graph** out);
RC_API rc_status rc_graph_from_graph6(const char* line, rc_graph** out);
/* family: Empty, Complete, Path, Cycle, Xn, Dn, Elem1, Elem2, Elem3 (case-insensitive). */
RC_API rc_status rc_graph_family(const char* family, uint32_t order, rc_graph** out);
RC_API void rc_graph_free(rc_graph* g);

RC_API uint32_t rc_graph_order(const rc_graph* g);
RC_API size_t rc_graph_edge_count(const rc_graph* g);
RC_API rc_status rc_graph_degree(const rc_graph* g, uint32_t v, uint32_t* out);
RC_API rc_status rc_graph_to_graph6(const rc_graph* g, char** out);
RC_API rc_status rc_graph_delete_vertex(const rc_graph* g, uint32_t v, rc_graph** out);
RC_API rc_status rc_graph_delete_edge(const rc_graph* g, uint32_t u, uint32_t v, rc_graph** out);
RC_API rc_status rc_graph_add_edge(const rc_graph* g, uint32_t u, uint32_t v, rc_graph** out);
RC_API rc_status rc_graph_is_isomorphic(const rc_graph* g, const rc_graph* h, int* out);

/* ---- Roman domination ---- */

/* `labels`, when non-null, receives order() labels in {0,1,2} of the witness. */
RC_API rc_status rc_roman_number(const rc_graph* g, uint32_t* gamma, uint8_t* labels);
/* 3^n enumeration, orders up to 12. */
RC_API rc_status rc_roman_number_oracle(const rc_graph* g, uint32_t* gamma);
RC_API rc_status rc_is_roman(const rc_graph* g, const uint8_t* labels, size_t length, int* out);
/* Number of minimum-weight partitions; orders up to 24. */
RC_API rc_status rc_minimal_partition_count(const rc_graph* g, size_t* out);

/* ---- criticality ---- */

typedef struct rc_criticality {
  uint32_t gamma;
  int nonelementary;
  int v_critical;
  int e_critical;
  int saturated;
} rc_criticality;

RC_API rc_status rc_assess_criticality(const rc_graph* g, rc_criticality* out);
/* Full report as JSON (see README for the schema). */
RC_API rc_status rc_report_json(const rc_graph* g, char** out);
/* "IsC5", "IsDn(8)", "ElementaryG1".."ElementaryG3", "NotCritical",
 * "CriticalButUnclassified". */
RC_API rc_status rc_classify(const rc_graph* g, char** out);

/* ---- verification harness ---- */

typedef enum rc_report_format { RC_FORMAT_JSON = 0, RC_FORMAT_CSV = 1 } rc_report_format;

typedef struct rc_verify_options {
  uint32_t workers;       /* 0: ROMANCRIT_WORKERS or hardware concurrency */
  int allow_large;        /* lift the order-7 enumeration guard */
  int include_timing;     /* add wall_time_ms to JSON output */
  rc_report_format format;
} rc_verify_options;

RC_API size_t rc_claim_count(void);
/* Claim id at `index`, or NULL past the end. Static storage. */
RC_API const char* rc_claim_name(size_t index);
RC_API const char* rc_claim_statement(size_t index);

/* Each verify call writes the rendered report to *report and the number of
 * counterexamples to *counterexamples. */
RC_API rc_status rc_verify_enumerate(const char* claim, uint32_t order, const rc_verify_options* options,
                                     char** report, size_t* counterexamples);
/* `text` holds graph6 lines; `source` labels the report. */
RC_API rc_status rc_verify_graph6(const char* claim, const char* source, const char* text,
                                  const rc_verify_options* options, char** report, size_t* counterexamples);
/* `families` like "Dn:6,Dn:8". */
RC_API rc_status rc_verify_families(const char* claim, const char* families, const rc_verify_options* options,
                                    char** report, size_t* counterexamples);

#ifdef __cplusplus
}
#endif

#endif /* ROMANCRIT_H */
