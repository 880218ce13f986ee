#ifndef SUBCODE_H
#define SUBCODE_H

/* C interface to the subcode library. Every call returning sc_status leaves
 * a message for sc_last_error() (per thread) when it fails. Strings handed
 * out through char** belong to the caller and are released with
 * sc_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SC_API __declspec(dllexport)
#else
#define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_VERIFY_FAILED = 1,
  SC_USAGE = 2,
  SC_BUDGET = 3,
  SC_IO = 4,
  SC_PARSE = 5,
  SC_INTERNAL = 6
} sc_status;

typedef struct sc_code sc_code;

typedef struct sc_analyze_options {
  int aut;         /* nonzero: automorphism order and self-duality */
  int threads;     /* worker threads for distance sweeps */
  uint64_t budget; /* search node budget, 0 for the default */
} sc_analyze_options;

SC_API const char* sc_version(void);
SC_API const char* sc_last_error(void);
SC_API void sc_string_free(char* s);

/* kind: lmrd, construction-a-core, construction-a, core-plus-s, plane-spread */
SC_API sc_status sc_code_construct(const char* kind, int q, sc_code** out);
SC_API sc_status sc_code_parse(const char* text, sc_code** out);
SC_API sc_status sc_code_load(const char* path, sc_code** out);
SC_API sc_status sc_code_save(const sc_code* c, const char* path);
SC_API sc_status sc_code_text(const sc_code* c, char** out);
SC_API sc_status sc_code_dual(const sc_code* c, sc_code** out);
SC_API void sc_code_free(sc_code* c);

SC_API size_t sc_code_size(const sc_code* c);
SC_API int sc_code_ambient(const sc_code* c);
SC_API int sc_code_field(const sc_code* c);
SC_API int sc_code_dim(const sc_code* c); /* -1 when mixed */

SC_API sc_status sc_min_distance(const sc_code* c, int threads, int* distance);
/* Checks a code file (duplicates allowed) against a required minimum
 * distance. Returns SC_VERIFY_FAILED, with the offending pair in the
 * report, when the distance is smaller. */
SC_API sc_status sc_verify_text(const char* code_text, int min_distance, int threads, char** report);
SC_API sc_status sc_is_maximal(const sc_code* c, int d, int* maximal, uint64_t* checked, uint64_t* addable);

/* report: key = value lines; summary: human-readable. Either may be NULL. */
SC_API sc_status sc_analyze(const sc_code* c, const sc_analyze_options* opt, char** report, char** summary);

/* known is set to 0 when the bound cannot be evaluated. */
SC_API sc_status sc_bound(int v, int d, int k, int q, uint64_t* value, int* known, char** trace);
SC_API sc_status sc_partial_spread_max(int v, int q, uint64_t* value);

SC_API sc_status sc_spreads_classify(int orbits, uint64_t budget, char** report);
/* type: X, E, IDelta, IDelta' */
SC_API sc_status sc_spreads_show(const char* type, char** report);

#ifdef __cplusplus
}
#endif

#endif
