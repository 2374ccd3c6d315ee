/* C interface to the pure sextic field library. Requests and results are JSON text. */
#ifndef SEXTIC_H
#define SEXTIC_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SX_API __attribute__((visibility("default")))
#else
#define SX_API
#endif

typedef enum sx_status {
  SX_OK = 0,
  SX_INVALID_ARGUMENT = 1,
  SX_RADICAND_MISMATCH = 2,
  SX_NOT_SIXTH_POWER_FREE = 3,
  SX_REDUCIBLE = 4,
  SX_UNCLASSIFIABLE = 5,
  SX_CASE_MISMATCH = 6,
  SX_AUX_UNDEFINED = 7,
  SX_ASSUMPTION_VIOLATED = 8,
  SX_NOT_CANONICAL = 9,
  SX_INVALID_PAIR = 10,
  SX_PARSE_ERROR = 11,
  SX_IO_ERROR = 12,
  SX_INTERNAL_ERROR = 13
} sx_status;

typedef struct sx_context sx_context;
typedef struct sx_result sx_result;

/* config_json may be NULL. Keys: cache_dir, digits, workers, seed, prime_bound. */
SX_API sx_status sx_context_create(const char* config_json, sx_context** out);
SX_API void sx_context_destroy(sx_context* ctx);

/* Runs one operation: classify, basis, general-basis, gram, shape, geometry, density, euler,
   measure, enumerate, equidist, verify, partition. *out is set whenever out is non-NULL, also on
   failure, and must be released with sx_result_free. */
SX_API sx_status sx_call(sx_context* ctx, const char* op, const char* request_json, sx_result** out);

SX_API sx_status sx_result_status(const sx_result* r);
/* Result document on success, {"error": ..., "message": ...} on failure. */
SX_API const char* sx_result_json(const sx_result* r);
/* Error message, empty on success. */
SX_API const char* sx_result_error(const sx_result* r);
SX_API void sx_result_free(sx_result* r);

SX_API const char* sx_status_string(sx_status status);
SX_API const char* sx_version(void);

#ifdef __cplusplus
}
#endif

#endif
