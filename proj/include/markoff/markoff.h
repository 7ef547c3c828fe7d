#ifndef MARKOFF_MARKOFF_H
#define MARKOFF_MARKOFF_H

#include <stddef.h>

#if defined(_WIN32)
#define MK_API __declspec(dllexport)
#else
#define MK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mk_status {
  MK_OK = 0,
  MK_ERR_DOMAIN = 2,
  MK_ERR_USAGE = 64,
  MK_ERR_PARSE = 65,
  MK_ERR_INTERNAL = 70
} mk_status;

typedef struct mk_context mk_context;
typedef struct mk_result mk_result;
typedef struct mk_equation mk_equation;

MK_API const char* mk_version(void);

/* Precision defaults to 64 decimal digits, threads to 1. */
MK_API mk_context* mk_context_new(void);
MK_API void mk_context_free(mk_context* ctx);
/* digits >= 16 */
MK_API mk_status mk_context_set_precision(mk_context* ctx, long digits);
MK_API long mk_context_precision(const mk_context* ctx);
/* threads >= 1 */
MK_API mk_status mk_context_set_threads(mk_context* ctx, unsigned threads);
/* Message of the last failed call on ctx; empty after success. */
MK_API const char* mk_last_error(const mk_context* ctx);

/* Runs a named command with a JSON object of arguments; on MK_OK *out holds a
 * JSON document owned by the caller. Commands: solve, descend, forest, scan-s,
 * constant, spectrum, decompose-seq, reconstruct, construct, gl2z-decompose,
 * fricke, dedekind, torus-reduce, torus-params, audit-hyperbolic, section-cubic. */
MK_API mk_status mk_run(mk_context* ctx, const char* command, const char* args_json, mk_result** out);
MK_API const char* mk_result_json(const mk_result* result);
MK_API void mk_result_free(mk_result* result);

/* Equation literal "s1s2,a,dK,u", e.g. "++,2,0,-2". */
MK_API mk_status mk_equation_parse(mk_context* ctx, const char* text, mk_equation** out);
MK_API void mk_equation_free(mk_equation* eq);
/* Decimal integers; *is_solution is set to 0 or 1. */
MK_API mk_status mk_equation_is_solution(mk_context* ctx, const mk_equation* eq, const char* m, const char* m1,
                                         const char* m2, int* is_solution);
/* Writes the canonical literal into buf (NUL-terminated); *needed receives the full length + 1. */
MK_API mk_status mk_equation_format(const mk_equation* eq, char* buf, size_t size, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif
