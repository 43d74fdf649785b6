/*
 * C interface to the threshold-graph Colin de Verdiere library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with cdv_string_free. Every fallible call returns a cdv_status;
 * on failure cdv_last_error() describes the problem (per thread).
 */
#ifndef CDV_H
#define CDV_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CDV_BUILDING_LIBRARY)
#    define CDV_API __declspec(dllexport)
#  else
#    define CDV_API __declspec(dllimport)
#  endif
#else
#  define CDV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cdv_status {
  CDV_OK = 0,
  CDV_E_PARSE = 1,
  CDV_E_INVALID_ARGUMENT = 2,
  CDV_E_NOT_CONNECTED = 3,
  CDV_E_DIMENSION = 4,
  CDV_E_NOT_SYMMETRIC = 5,
  CDV_E_NON_CONVERGENCE = 6,
  CDV_E_ALPHA_TOO_SMALL = 7,
  CDV_E_NUMERIC = 8,
  CDV_E_NULL_ARGUMENT = 9,
  CDV_E_INTERNAL = 10
} cdv_status;

typedef enum cdv_format { CDV_FORMAT_JSON = 0, CDV_FORMAT_CSV = 1, CDV_FORMAT_PRETTY = 2 } cdv_format;
typedef enum cdv_order { CDV_ORDER_CONSTRUCTION = 0, CDV_ORDER_DEGREE = 1 } cdv_order;
typedef enum cdv_verify_mode { CDV_VERIFY_AUTO = 0, CDV_VERIFY_EXACT = 1, CDV_VERIFY_FLOAT = 2 } cdv_verify_mode;
typedef enum cdv_weight_flavor { CDV_WEIGHTS_EDGE = 0, CDV_WEIGHTS_INDEPENDENCE = 1 } cdv_weight_flavor;

typedef struct cdv_sequence cdv_sequence;
typedef struct cdv_matrix cdv_matrix;
typedef struct cdv_certificate cdv_certificate;

CDV_API const char* cdv_last_error(void);
CDV_API const char* cdv_status_name(cdv_status status);
CDV_API void cdv_string_free(char* s);

/* ---- building sequences ------------------------------------------------ */

/* Accepts "c i c c i c c", "ciccicc", "cone, isolate, ..." or a block list
 * such as "1,1,2,1,2". */
CDV_API cdv_status cdv_sequence_parse(const char* text, cdv_sequence** out);
CDV_API void cdv_sequence_free(cdv_sequence* seq);
CDV_API cdv_status cdv_sequence_text(const cdv_sequence* seq, char** out);
CDV_API cdv_status cdv_sequence_counts(const cdv_sequence* seq, size_t* n, size_t* cones, size_t* isolates,
                                       size_t* isolate_blocks);
CDV_API int cdv_sequence_connected(const cdv_sequence* seq);
/* case_label is 1, 2 or 3; either out-pointer may be NULL. */
CDV_API cdv_status cdv_sequence_mu(const cdv_sequence* seq, int* mu, int* case_label);
CDV_API cdv_status cdv_sequence_info_json(const cdv_sequence* seq, char** out);

/* ---- graphs -------------------------------------------------------------- */

CDV_API cdv_status cdv_laplacian(const cdv_sequence* seq, cdv_format format, char** out);

/* Edge list text: "n" then "u v" pairs. *is_threshold is set to 1 or 0;
 * summary is the step word or a witness such as "C4: 0 1 2 3". json may be
 * NULL. */
CDV_API cdv_status cdv_recognize_edge_list(const char* text, int* is_threshold, char** summary, char** json);

CDV_API cdv_status cdv_weights_json(const cdv_sequence* seq, cdv_weight_flavor flavor, char** out);

/* ---- matrices ------------------------------------------------------------ */

/* alpha1 is "P/Q", an integer string, or NULL for the default. *non_optimal
 * (may be NULL) is set when the sequence falls in case 3. */
CDV_API cdv_status cdv_construct_parametric(const cdv_sequence* seq, const char* alpha1, cdv_matrix** out,
                                            int* non_optimal);
CDV_API cdv_status cdv_construct_recursive(const cdv_sequence* seq, cdv_order order, cdv_matrix** out);
/* Parametric matrix with entries written as affine expressions in "a". */
CDV_API cdv_status cdv_parametric_symbolic_json(const cdv_sequence* seq, char** out);

CDV_API cdv_status cdv_matrix_from_json(const char* text, cdv_matrix** out);
CDV_API cdv_status cdv_matrix_to_json(const cdv_matrix* m, char** out);
CDV_API size_t cdv_matrix_size(const cdv_matrix* m);
CDV_API int cdv_matrix_is_exact(const cdv_matrix* m);
CDV_API cdv_status cdv_matrix_entry(const cdv_matrix* m, size_t row, size_t col, double* out);
/* Copy of m with rows and columns in the given vertex order of seq's graph. */
CDV_API cdv_status cdv_matrix_reorder(const cdv_matrix* m, const cdv_sequence* seq, cdv_order order,
                                      cdv_matrix** out);
CDV_API void cdv_matrix_free(cdv_matrix* m);

/* ---- verification -------------------------------------------------------- */

/* Checks the matrix against the threshold graph of `graph`. Construction-order
 * matrices are permuted to degree order first. With with_bounds set the matrix
 * must be rational and `graph` connected; alpha1 (may be NULL) overrides the
 * value recorded in the matrix. */
CDV_API cdv_status cdv_verify(const cdv_matrix* m, const cdv_sequence* graph, cdv_verify_mode mode, int with_bounds,
                              const char* alpha1, cdv_certificate** out);
CDV_API int cdv_certificate_ok(const cdv_certificate* cert);
CDV_API size_t cdv_certificate_corank(const cdv_certificate* cert);
CDV_API cdv_status cdv_certificate_inertia(const cdv_certificate* cert, size_t* neg, size_t* zero, size_t* pos);
CDV_API cdv_status cdv_certificate_to_json(const cdv_certificate* cert, char** out);
CDV_API void cdv_certificate_free(cdv_certificate* cert);

/* Builds the parametric matrix and reports its eigenvalue bounds. */
CDV_API cdv_status cdv_bounds_json(const cdv_sequence* seq, const char* alpha1, int* ok, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CDV_H */
