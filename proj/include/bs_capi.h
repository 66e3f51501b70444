#ifndef BS_CAPI_H
#define BS_CAPI_H

/* C interface to the Baumslag-Solitar tiling library. All functions return
 * a status code; on anything but BS_OK the thread-local message from
 * bs_last_error() describes the problem. Output strings are heap copies
 * owned by the caller, released with bs_string_free. Rationals cross this
 * boundary as "NUM/DEN" (or plain "NUM") strings; larger results are JSON
 * documents in the same convention. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bs_status {
  BS_OK = 0,
  BS_ERROR = 1,        /* internal or unexpected failure */
  BS_VIOLATIONS = 2,   /* verification ran and found violations */
  BS_INCONCLUSIVE = 3, /* a configured cap was hit before an answer */
  BS_USAGE = 4         /* bad arguments or malformed input */
} bs_status;

const char* bs_last_error(void);
void bs_string_free(char* s);

typedef struct bs_tileset bs_tileset;
typedef struct bs_patch bs_patch;

void bs_tileset_free(bs_tileset* ts);
void bs_patch_free(bs_patch* p);

/* Normal form of a word in BS(m,n). */
bs_status bs_group_nf(long long m, long long n, const char* word, char** out);

/* Enumerated multiplier tileset for q over [lo, hi] on BS(m,n).
 * Nonpositive caps select the defaults (radius 8, denominator 128,
 * 1000000 nodes). */
bs_status bs_tileset_ak(long long m, long long n, const char* q, const char* lo, const char* hi,
                        int max_radius, long long max_denominator, long long max_nodes,
                        bs_tileset** out);
bs_status bs_tileset_to_json(const bs_tileset* ts, char** out);
bs_status bs_tileset_from_json(const char* text, bs_tileset** out);
long long bs_tileset_tile_count(const bs_tileset* ts);
/* *result becomes 1 when every tile satisfies the exact multiplier
 * equation for q, else 0. */
bs_status bs_tileset_multiplies(const bs_tileset* ts, const char* q, int* result);

/* Orbit configuration of the standard system through x0 on BS(2,3). */
bs_status bs_patch_orbit(const char* x0, int radius, long long max_nodes, bs_patch** out);
/* Explicit substitution tiling on BS(1,n). */
bs_status bs_patch_subst(long long n, int radius, long long max_nodes, bs_patch** out);
bs_status bs_patch_from_json(const char* text, bs_patch** out);
bs_status bs_patch_to_json(const bs_patch* p, char** out);
long long bs_patch_cell_count(const bs_patch* p);
/* Adjacency check. *report always receives the JSON report; the status is
 * BS_VIOLATIONS when any adjacency fails. */
bs_status bs_patch_verify(const bs_patch* p, char** report);
bs_status bs_patch_render_svg(const bs_patch* p, char** out);

/* Whether left multiplication by the word fixes the orbit configuration
 * through x0 on the radius ball of BS(m,n). JSON: periodic, trivial_period,
 * alpha. */
bs_status bs_period_check(long long m, long long n, const char* word, const char* x0, int radius,
                          long long max_nodes, char** out_json);

/* Two-sided fixpoint windows of sigma_{n,r} grown to half_len per side.
 * For n = 2, r = 1 the squared substitution's two windows are reported. */
bs_status bs_subst_fixpoint(long long n, long long r, long long half_len, char** out_json);
/* Stabilized factor-complexity counts of the fixpoint language. */
bs_status bs_subst_complexity(long long n, long long r, int max_len, char** out_json);

/* Iterated image sets of the standard system, steps may be negative. */
bs_status bs_dyn_orbit(const char* x0, long long steps, char** out_json);
/* Exhaustive periodic-point search up to the denominator bound. */
bs_status bs_dyn_periodic_search(long long denom_bound, long long period_bound, char** out_json);

/* Coset and subgroup decomposition of a word in BS(n,n). */
bs_status bs_bsnn_coset(long long n, const char* word, char** out_json);
/* Image in BS(n,n) of the pair (z, free word over g0..g(n-1)). */
bs_status bs_bsnn_phi(long long n, long long z, const char* free_word, char** out_json);

/* Acceptance criteria; BS_OK only when every criterion passes. */
bs_status bs_accept(unsigned long long seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* BS_CAPI_H */
