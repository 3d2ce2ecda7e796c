/* C interface to the Schur bilinear-identity library.
 *
 * All functions return a schurid_status; results are passed back through
 * out-parameters.  Objects are opaque handles released with the matching
 * _free function; strings returned by the library are released with
 * schurid_string_free.  On failure schurid_last_error() describes the
 * most recent error of the calling thread.
 */
#ifndef SCHURID_H
#define SCHURID_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct schurid_identity schurid_identity;

typedef enum schurid_status {
    SCHURID_OK = 0,
    SCHURID_ERR_NOT_WEAKLY_DECREASING,
    SCHURID_ERR_NOT_STRICTLY_DECREASING,
    SCHURID_ERR_NEGATIVE_PART,
    SCHURID_ERR_N_TOO_SMALL,
    SCHURID_ERR_ROW_OUT_OF_RANGE,
    SCHURID_ERR_INVALID_START_BOX,
    SCHURID_ERR_INVALID_STRIP_SPEC,
    SCHURID_ERR_SHIFT_UNDEFINED,
    SCHURID_ERR_EMPTY_PARTITION,
    SCHURID_ERR_REPEATED_COORDINATES,
    SCHURID_ERR_HEIGHT_EXCEEDS_VARIABLES,
    SCHURID_ERR_SIZE_TOO_SMALL,
    SCHURID_ERR_TOO_LARGE,
    SCHURID_ERR_VARIABLE_COUNT_TOO_SMALL,
    SCHURID_ERR_SIZE_MISMATCH,
    SCHURID_ERR_HEIGHT_TOO_SMALL,
    SCHURID_ERR_INVALID_RANGE,
    SCHURID_ERR_PARSE,
    SCHURID_ERR_INTERNAL
} schurid_status;

typedef enum schurid_axis {
    SCHURID_AXIS_ROW = 0,
    SCHURID_AXIS_COLUMN = 1
} schurid_axis;

typedef enum schurid_format {
    SCHURID_FORMAT_JSON = 0,
    SCHURID_FORMAT_LATEX = 1
} schurid_format;

/* One border-strip addition: t boxes in end row r, spanning m rows. */
typedef struct schurid_strip_spec {
    int r;
    int m;
    int t;
} schurid_strip_spec;

const char* schurid_status_name(schurid_status status);

/* Message of the calling thread's most recent error; empty string if none. */
const char* schurid_last_error(void);

/* --- identity construction ------------------------------------------- */

schurid_status schurid_identity_main(const int* lambda, size_t lambda_len,
                                     const schurid_strip_spec* specs, size_t nspecs,
                                     schurid_identity** out);

schurid_status schurid_identity_barred(const int* lambda, size_t lambda_len,
                                       const schurid_strip_spec* specs, size_t nspecs,
                                       schurid_axis axis, schurid_identity** out);

schurid_status schurid_identity_square(const int* lambda, size_t lambda_len,
                                       schurid_identity** out);

schurid_status schurid_identity_square_via_nu(const int* lambda, size_t lambda_len,
                                              schurid_identity** out);

schurid_status schurid_identity_fulmek_kleber(const int* lambda, size_t lambda_len,
                                              schurid_identity** out);

schurid_status schurid_identity_gps(int a, int b, int m, int n, schurid_identity** out);

/* Determinant-level re-derivation through the Plücker relation;
 * big_n = 0 selects the default height(lambda) + 1. */
schurid_status schurid_identity_derive_plucker(const int* lambda, size_t lambda_len,
                                               const schurid_strip_spec* specs, size_t nspecs,
                                               int big_n, schurid_identity** out);

schurid_status schurid_identity_conjugate(const schurid_identity* id, schurid_identity** out);

schurid_status schurid_identity_parse_json(const char* text, schurid_identity** out);

/* --- identity inspection --------------------------------------------- */

schurid_status schurid_identity_render(const schurid_identity* id, schurid_format format,
                                       char** out);

schurid_status schurid_identity_equal(const schurid_identity* x, const schurid_identity* y,
                                      int* out);

/* vars = 0 selects the default 1 + max height in the identity.
 * report_json receives { "verified": ..., "points_checked": ...,
 * "counterexample": ... }; verified receives 0/1. */
schurid_status schurid_identity_verify(const schurid_identity* id, int vars, int trials,
                                       uint64_t seed, char** report_json, int* verified);

void schurid_identity_free(schurid_identity* id);
void schurid_string_free(char* s);

/* --- auxiliary entry points ------------------------------------------ */

/* JSON array of spec lists, each spec as [r, m, t]. */
schurid_status schurid_enumerate_specs(const int* lambda, size_t lambda_len, int max_k,
                                       char** json_out);

/* Seeded random-matrix self-test of the row-exchange relation.
 * failures receives the failure count (0 on a healthy build). */
schurid_status schurid_plucker_selftest(int max_size, int trials, uint64_t seed,
                                        int* trials_run, int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SCHURID_H */
