#ifndef AINF_AINF_H
#define AINF_AINF_H

/* C interface to the certification engine. Handles are opaque; every call
   returns an ainf_status and ainf_last_error() describes the most recent
   non-OK status on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(AINF_BUILDING_LIBRARY)
#define AINF_API __attribute__((visibility("default")))
#else
#define AINF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ainf_status {
  AINF_OK = 0,
  AINF_FAIL = 1,      /* the computation ran and a check failed */
  AINF_EINVAL = 2,    /* bad argument: not an odd prime, n out of range, ... */
  AINF_ERANGE = 3,    /* arithmetic or table limit exceeded */
  AINF_EINTERNAL = 4
} ainf_status;

typedef struct ainf_structure ainf_structure;
typedef struct ainf_report ainf_report;

typedef enum ainf_target { AINF_DELTA2 = 0, AINF_DELTA_P = 1 } ainf_target;

/* Structure on E(v,2m+1) (x) Gamma(w,2mp+2) over Z_p. */
AINF_API ainf_status ainf_structure_create(uint32_t p, uint32_t m, ainf_structure** out);
AINF_API void ainf_structure_destroy(ainf_structure* s);

/* Shifts the coefficient of `word` in target(v^in_i gamma_in_j) by `shift`.
   `word` holds 2*word_len integers (i, j pairs). */
AINF_API ainf_status ainf_structure_corrupt(ainf_structure* s, ainf_target target, uint32_t in_i,
                                            uint32_t in_j, const uint32_t* word, size_t word_len,
                                            uint32_t shift);

/* max_j = 0 selects the default bound for p; threads = 0 uses every core. */
AINF_API ainf_status ainf_certify(const ainf_structure* s, uint32_t max_j, uint32_t threads,
                                  ainf_report** out);

/* polytope is "perm" or "assoc"; 1 <= n <= 7. */
AINF_API ainf_status ainf_diagonal(const char* polytope, int n, ainf_report** out);

/* Lists m = p^i for i < count; certifies each when `certify` is nonzero. */
AINF_API ainf_status ainf_factors(uint32_t p, uint32_t count, int certify, uint32_t max_j,
                                  uint32_t threads, ainf_report** out);

AINF_API ainf_status ainf_lemma(uint32_t p, uint64_t trials, uint64_t seed, ainf_report** out);

/* Report accessors. Returned strings are owned by the report. */
AINF_API int ainf_report_passed(const ainf_report* r);
AINF_API const char* ainf_report_json(const ainf_report* r);
AINF_API const char* ainf_report_text(const ainf_report* r);
AINF_API void ainf_report_destroy(ainf_report* r);

AINF_API const char* ainf_last_error(void);
AINF_API const char* ainf_version(void);

#ifdef __cplusplus
}
#endif

#endif
