/*
 * C interface to the generalized Fermat curve Jacobian decomposition library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a fermat_status; on
 * failure fermat_last_error() describes the problem (thread-local, valid
 * until the next call on the same thread). Strings returned through char**
 * out-parameters are released with fermat_string_free.
 */
#ifndef FERMAT_FERMAT_H
#define FERMAT_FERMAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(FERMAT_BUILDING_LIBRARY)
#define FERMAT_API __attribute__((visibility("default")))
#else
#define FERMAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fermat_status {
  FERMAT_OK = 0,
  FERMAT_ERR_INVALID_ARGUMENT = 1,
  FERMAT_ERR_NOT_PRIME = 2,
  FERMAT_ERR_BUDGET_EXCEEDED = 3,
  FERMAT_ERR_DIMENSION_MISMATCH = 4,
  FERMAT_ERR_PARSE = 5,
  FERMAT_ERR_INTERNAL = 6,
  FERMAT_ERR_NULL_POINTER = 7,
  FERMAT_ERR_OUT_OF_RANGE = 8
} fermat_status;

typedef enum fermat_format {
  FERMAT_FORMAT_JSON = 0,
  FERMAT_FORMAT_CSV = 1,
  FERMAT_FORMAT_MARKDOWN = 2
} fermat_format;

typedef enum fermat_prym_status {
  FERMAT_PRYM_NOT_PRYM_TYURIN = 0,
  FERMAT_PRYM_INCONCLUSIVE = 1,
  FERMAT_PRYM_TYURIN_KNOWN = 2
} fermat_prym_status;

/* A decomposition, Prym, character or Humbert-Edge report. */
typedef struct fermat_document fermat_document;
/* Result of an identity sweep over (n, p). */
typedef struct fermat_verification fermat_verification;

typedef struct fermat_factor_info {
  uint64_t removed_mask; /* bit i set iff sigma_i is in T */
  uint64_t dimension;
  uint64_t kernel_order;
  fermat_prym_status prym_status;
  uint64_t prym_exponent; /* 0 when the verdict carries no exponent */
} fermat_factor_info;

FERMAT_API const char* fermat_version(void);
FERMAT_API const char* fermat_status_name(fermat_status status);
FERMAT_API const char* fermat_last_error(void);
FERMAT_API void fermat_string_free(char* str);

/* Genus of X_(n,p) as a decimal string (unbounded). */
FERMAT_API fermat_status fermat_genus(uint32_t n, uint32_t p, char** out);

FERMAT_API fermat_status fermat_decompose(uint32_t n, uint32_t p, int force,
                                          fermat_document** out);
FERMAT_API fermat_status fermat_prym(uint32_t n, uint32_t p, int force,
                                     fermat_document** out);
FERMAT_API fermat_status fermat_characters(uint32_t n, uint32_t p, int force,
                                           fermat_document** out);
FERMAT_API fermat_status fermat_humbert_edge(uint32_t n, int force,
                                             fermat_document** out);
FERMAT_API fermat_status fermat_document_from_json(const char* json,
                                                   fermat_document** out);
FERMAT_API void fermat_document_free(fermat_document* doc);

FERMAT_API fermat_status fermat_document_render(const fermat_document* doc,
                                                fermat_format format,
                                                char** out);
FERMAT_API size_t fermat_document_factor_count(const fermat_document* doc);
FERMAT_API fermat_status fermat_document_factor(const fermat_document* doc,
                                                size_t index,
                                                fermat_factor_info* out);
FERMAT_API uint64_t fermat_document_genus(const fermat_document* doc);
FERMAT_API uint64_t fermat_document_total_dimension(const fermat_document* doc);
/* 1 if every identity recorded in the document holds, else 0. */
FERMAT_API int fermat_document_identities_pass(const fermat_document* doc);
/* 1 if the documents are equal field by field, else 0. */
FERMAT_API int fermat_document_equal(const fermat_document* a,
                                     const fermat_document* b);

FERMAT_API fermat_status fermat_verify(uint32_t n_lo, uint32_t n_hi,
                                       const uint32_t* primes,
                                       size_t prime_count, int force,
                                       fermat_verification** out);
FERMAT_API int fermat_verification_passed(const fermat_verification* v);
FERMAT_API size_t fermat_verification_check_count(const fermat_verification* v);
FERMAT_API fermat_status fermat_verification_render(
    const fermat_verification* v, fermat_format format, char** out);
FERMAT_API void fermat_verification_free(fermat_verification* v);

#ifdef __cplusplus
}
#endif

#endif /* FERMAT_FERMAT_H */
