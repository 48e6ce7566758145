#ifndef CONFMOD_H
#define CONFMOD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CONFMOD_API __declspec(dllexport)
#else
#define CONFMOD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum confmod_status {
  CONFMOD_OK = 0,
  CONFMOD_ERR_INVALID_ARGUMENT = 1,
  CONFMOD_ERR_PARSE = 2,
  CONFMOD_ERR_UNKNOWN_SYMBOL = 3,
  CONFMOD_ERR_MALFORMED_WORD = 4,
  CONFMOD_ERR_ZERO_ELEMENT = 5,
  CONFMOD_ERR_NON_MONIC = 6,
  CONFMOD_ERR_NOT_D_FREE = 7,
  CONFMOD_ERR_INVALID_DELTA = 8,
  CONFMOD_ERR_NON_UNIFORM_LOCALITY = 9,
  CONFMOD_ERR_IO = 10,
  CONFMOD_ERR_INTERNAL = 11
} confmod_status;

typedef enum confmod_format { CONFMOD_FORMAT_TEXT = 0, CONFMOD_FORMAT_JSON = 1 } confmod_format;

typedef enum confmod_verdict {
  CONFMOD_VERDICT_PASS = 0,
  CONFMOD_VERDICT_FAIL = 1,
  CONFMOD_VERDICT_PASS_WITHIN_WINDOW = 2
} confmod_verdict;

/* A presentation together with its action engine. */
typedef struct confmod_session confmod_session;
/* A normalized module element bound to the session that produced it. */
typedef struct confmod_element confmod_element;

CONFMOD_API const char* confmod_version(void);

/* Message of the last failed call on this thread; empty after success. */
CONFMOD_API const char* confmod_last_error(void);
/* For parse errors, the byte offset into the offending text, else -1. */
CONFMOD_API long confmod_last_error_offset(void);

/* preset: "virasoro", "vircur" or "remark". delta and alpha take a rational
   literal or the parameter names "delta" / "alpha"; NULL means "0" for delta
   and "alpha" for alpha. lie_json (vircur only) may be NULL for the 1-dim
   abelian algebra acting by 1 on one generator. */
CONFMOD_API confmod_status confmod_session_create_preset(const char* preset, const char* delta,
                                                         const char* alpha, const char* lie_json,
                                                         confmod_session** out);
/* Presentation from a JSON document; alpha (nullable) specializes a
   parameter named "alpha". */
CONFMOD_API confmod_status confmod_session_create_json(const char* presentation_json, const char* alpha,
                                                       confmod_session** out);
CONFMOD_API void confmod_session_destroy(confmod_session* session);

CONFMOD_API confmod_status confmod_session_describe(const confmod_session* session, confmod_format format,
                                                    char** out);

/* All *out strings are allocated by the library; release with
   confmod_string_free. */
CONFMOD_API void confmod_string_free(char* text);

CONFMOD_API confmod_status confmod_normalize(const confmod_session* session, const char* expr,
                                             confmod_format format, char** out);
/* acting is an algebra expression, target a module expression. */
CONFMOD_API confmod_status confmod_act(const confmod_session* session, const char* acting, uint32_t n,
                                       const char* target, confmod_format format, char** out);
/* Reduction modulo the module relations; seed selects the randomized
   strategy when randomized is nonzero. */
CONFMOD_API confmod_status confmod_reduce(const confmod_session* session, const char* expr, int with_trace,
                                          int randomized, uint64_t seed, confmod_format format, char** out);
/* Reduction modulo the module relations and, for D-free algebra relations,
   an R1 slice sized to the input. */
CONFMOD_API confmod_status confmod_quotient_normal_form(const confmod_session* session, const char* expr,
                                                        confmod_format format, char** out);
/* window < 0 selects the default window. */
CONFMOD_API confmod_status confmod_check_gsb(const confmod_session* session, int window, confmod_format format,
                                             confmod_verdict* verdict, char** out);
CONFMOD_API confmod_status confmod_irr(const confmod_session* session, uint32_t max_len, uint32_t max_d,
                                       confmod_format format, size_t* count, char** out);
CONFMOD_API confmod_status confmod_verify_axioms(const confmod_session* session, uint32_t samples, uint64_t seed,
                                                 confmod_format format, int* all_passed, char** out);
/* Free-module analysis over the algebra relations; for D-free relations it
   also checks the R1 slice against the closed-form basis. */
CONFMOD_API confmod_status confmod_freemod(const confmod_session* session, uint32_t max_len, uint32_t max_d,
                                           confmod_format format, int* consistent, char** out);

CONFMOD_API confmod_status confmod_element_parse(const confmod_session* session, const char* expr,
                                                 confmod_element** out);
CONFMOD_API confmod_status confmod_element_act(const confmod_session* session, const char* acting, uint32_t n,
                                               const confmod_element* target, confmod_element** out);
CONFMOD_API confmod_status confmod_element_apply_d(const confmod_element* element, uint32_t j,
                                                   confmod_element** out);
CONFMOD_API confmod_status confmod_element_reduce(const confmod_element* element, confmod_element** out);
CONFMOD_API confmod_status confmod_element_render(const confmod_element* element, char** out);
CONFMOD_API size_t confmod_element_term_count(const confmod_element* element);
CONFMOD_API int confmod_element_is_zero(const confmod_element* element);
/* 1 when equal, 0 when not, -1 when from different sessions. */
CONFMOD_API int confmod_element_equal(const confmod_element* a, const confmod_element* b);
CONFMOD_API void confmod_element_destroy(confmod_element* element);

#ifdef __cplusplus
}
#endif

#endif
