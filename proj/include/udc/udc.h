/* C interface to the udc forward-error-correction library.
 *
 * Handles are opaque and owned by the caller. Functions return a udc_status;
 * on failure udc_last_error() describes the most recent error on the calling
 * thread. Strings returned through char** are allocated by the library and
 * released with udc_string_free. */
#ifndef UDC_UDC_H
#define UDC_UDC_H

#include <stddef.h>
#include <stdint.h>

#if defined(UDC_BUILDING_LIBRARY)
#define UDC_API __attribute__((visibility("default")))
#else
#define UDC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum udc_status {
  UDC_OK = 0,
  UDC_ERR_INVALID_ARGUMENT = 1,
  UDC_ERR_PARSE = 2,
  UDC_ERR_NOT_DECODABLE = 3,
  UDC_ERR_IO = 4,
  UDC_ERR_FORMAT = 5,
  UDC_ERR_UNCORRECTABLE = 6,
  UDC_ERR_TOO_LARGE = 7,
  UDC_ERR_INTERNAL = 8
} udc_status;

typedef enum udc_kind { UDC_KIND_FOURIER = 0, UDC_KIND_VANDERMONDE = 1 } udc_kind;

typedef enum udc_decode_status {
  UDC_DECODE_NO_ERROR = 0,
  UDC_DECODE_CORRECTED = 1,
  UDC_DECODE_FAILURE = 2
} udc_decode_status;

typedef enum udc_format { UDC_FORMAT_TEXT = 0, UDC_FORMAT_JSON = 1 } udc_format;

typedef struct udc_field udc_field;
typedef struct udc_code udc_code;

typedef struct udc_code_info {
  size_t n;
  size_t r;
  size_t t;
  size_t start;
  size_t step;
  udc_kind kind;
  int mds;
  int decodable;
  uint64_t field_order;
} udc_code_info;

UDC_API const char* udc_last_error(void);
UDC_API const char* udc_version(void);
UDC_API void udc_string_free(char* s);

/* Fields: "p" or "p^s/c_s,...,c_0". */
UDC_API udc_status udc_field_parse(const char* spec, udc_field** out);
UDC_API void udc_field_free(udc_field* field);
UDC_API udc_status udc_field_to_string(const udc_field* field, char** out);
UDC_API uint64_t udc_field_order(const udc_field* field);
UDC_API udc_status udc_field_mul(const udc_field* field, uint64_t a, uint64_t b, uint64_t* out);
UDC_API udc_status udc_field_inv(const udc_field* field, uint64_t a, uint64_t* out);
UDC_API udc_status udc_field_element_order(const udc_field* field, uint64_t a, uint64_t* out);
UDC_API udc_status udc_field_find_element_of_order(const udc_field* field, uint64_t n, uint64_t* out);

/* Codes. */
UDC_API udc_status udc_code_create(const udc_field* field, size_t n, size_t r, size_t start, size_t step,
                                   udc_kind kind, udc_code** out);
UDC_API udc_status udc_code_parse(const char* descriptor, udc_code** out);
UDC_API void udc_code_free(udc_code* code);
UDC_API udc_status udc_code_descriptor(const udc_code* code, char** out);
UDC_API udc_status udc_code_info_get(const udc_code* code, udc_code_info* out);

/* message: r symbols; codeword: n symbols. */
UDC_API udc_status udc_code_encode(const udc_code* code, const uint64_t* message, size_t message_len,
                                   uint64_t* codeword, size_t codeword_len);
/* Decoding failure is reported through *status, not the return value.
 * corrected and error_out hold n symbols, message_out r; the last two may be NULL. */
UDC_API udc_status udc_code_decode(const udc_code* code, const uint64_t* received, size_t received_len,
                                   uint64_t* corrected, uint64_t* error_out, uint64_t* message_out,
                                   udc_decode_status* status, size_t* error_count);

/* Exact minimum distance by brute force (desk-scale codes only). */
UDC_API udc_status udc_code_min_distance(const udc_code* code, size_t* distance);

/* Containers. */
UDC_API udc_status udc_encode_file(const char* descriptor, const char* in_path, const char* out_path);
UDC_API udc_status udc_decode_file(const char* in_path, const char* out_path, int best_effort,
                                   size_t* corrected_blocks, size_t* failed_blocks);

/* Reports. */
UDC_API udc_status udc_simulate(const udc_code* code, double p, uint64_t trials, uint64_t seed, udc_format format,
                                char** out);
/* rate "a/b" or decimal. */
UDC_API udc_status udc_design(const char* rate, size_t t, int prime_field_only, udc_format format, char** out);
/* Returns UDC_OK when every check passes; *report lists them (may be NULL). */
UDC_API udc_status udc_selftest(char** report);

#ifdef __cplusplus
}
#endif

#endif
