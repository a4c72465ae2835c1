/*
 * gdet - integer group determinants for SmallGroup(16,13) and friends.
 *
 * Exact-arithmetic C API. All determinant-like quantities cross this boundary
 * as decimal strings so values never lose precision; strings returned through
 * char** out parameters are heap-allocated and must be released with
 * gdet_string_free(). Structured results are JSON objects (one per call)
 * with big integers rendered as decimal strings.
 *
 * Every function is thread-safe; group handles are immutable and may be
 * shared across threads. On failure the return status is nonzero and
 * gdet_last_error() describes the problem for the calling thread.
 */
#ifndef GDET_GDET_H
#define GDET_GDET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gdet_status {
    GDET_OK = 0,
    GDET_ERROR_INVALID_ARGUMENT = 1,
    GDET_ERROR_UNSUPPORTED_RANGE = 2,
    GDET_ERROR_INTERNAL = 3 /* a proven invariant failed; indicates a bug */
} gdet_status;

/* Opaque handle to an immutable group (Cayley tables, validated on creation). */
typedef struct gdet_group gdet_group;

const char* gdet_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
const char* gdet_last_error(void);

/* spec_id: "sg16_13", "z2xd8" or "z2cubed". */
gdet_status gdet_group_create(const char* spec_id, gdet_group** out_group);
void gdet_group_destroy(gdet_group* group);

int gdet_group_order(const gdet_group* group);
int gdet_group_identity(const gdet_group* group);
/* Element indices; return -1 on out-of-range input. */
int gdet_group_multiply(const gdet_group* group, int g, int h);
int gdet_group_inverse(const gdet_group* group, int g);
/* NULL on out-of-range input; the pointer stays valid for the group lifetime. */
const char* gdet_group_label(const gdet_group* group, int g);

/*
 * Exact group determinant det(a_{g h^-1}). count must equal the group order;
 * coefficients are base-10 strings. For sg16_13 they are read in the
 * documented tuple order a0..a3,b0..b3,c0..c3,d0..d3 (so witness output can
 * be fed straight back in); for z2xd8 and z2cubed they are indexed by group
 * element in the canonical label order. The result is a base-10 string in
 * *out_value.
 */
gdet_status gdet_determinant(const gdet_group* group, const char* const* coeffs, size_t count,
                             char** out_value);
/* Same, for native-width coefficients. */
gdet_status gdet_determinant_i64(const gdet_group* group, const int64_t* coeffs, size_t count,
                                 char** out_value);

/*
 * Factored evaluation over sg16_13: D = M * A^2, A = U^2 + V^2. Takes the 16
 * coefficients in the order a0..a3,b0..b3,c0..c3,d0..d3 (the blocks of
 * F(X,Y,Z) = f(Z) + g(Z)X + h(Z)Y + t(Z)XY). The JSON result carries M, U, V,
 * A, value plus the Cayley-matrix oracle value and an "oracle_match" flag.
 */
gdet_status gdet_factored(const char* const* coeffs, size_t count, char** out_json);

/* Achievability of n per the classification (JSON verdict + reason + evidence). */
gdet_status gdet_check(const char* n_decimal, char** out_json);

/*
 * Verified witness for n when achievable: JSON with family, m (and k), target
 * and the 16 coefficients; verdict/reason fields as in gdet_check otherwise.
 */
gdet_status gdet_witness(const char* n_decimal, char** out_json);

/*
 * Explicit family constructor. family: even_2_18, even_2_17, even_2_16_plus,
 * even_2_16_minus, odd_1mod16, odd_5family, odd_3family. k_decimal must be
 * non-NULL exactly for odd_5family / odd_3family.
 */
gdet_status gdet_witness_family(const char* family, const char* m_decimal, const char* k_decimal,
                                char** out_json);

/*
 * Box scan: every coefficient ranges over [box_lo, box_hi]. Exhaustive when
 * the box holds at most `budget` tuples, else `budget` seeded samples.
 * workers = 0 picks the hardware concurrency; value_bound = 0 the default
 * (2^24). The JSON report includes counts, residue/valuation statistics and
 * all is_achievable violations (empty on a correct build).
 */
gdet_status gdet_scan(const char* group_id, int64_t box_lo, int64_t box_hi, uint64_t budget,
                      uint64_t seed, int workers, int64_t value_bound, char** out_json);

/* Property run of the nine proof identities on random tuples in [-bound, bound]. */
gdet_status gdet_identities(uint64_t trials, int64_t bound, uint64_t seed, char** out_json);

/* Frozen example battery across all modules; JSON with per-check pass flags. */
gdet_status gdet_selftest(char** out_json);

void gdet_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GDET_GDET_H */
