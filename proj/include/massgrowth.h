/*
 * massgrowth — C API for the quiver stability toolkit.
 *
 * Opaque handles wrap the C++ core; every function returns an mg_status and
 * reports failure details through mg_last_error() (thread-local). Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with mg_string_free().
 *
 * Conventions:
 *   - vertices are 0-based in this API (the word grammar stays 1-based),
 *   - rational numbers travel as (num, den) int64 pairs,
 *   - matrices are row-major,
 *   - arrow matrices are concatenated in quiver arrow order: (i, j) pairs
 *     row-major, parallel arrows consecutive; each block is d_dst x d_src.
 */

#ifndef MASSGROWTH_H
#define MASSGROWTH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MG_API __declspec(dllexport)
#else
#define MG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mg_quiver mg_quiver;
typedef struct mg_charge mg_charge; /* stability condition on the standard heart */
typedef struct mg_rep mg_rep;       /* quiver representation over a prime field */

typedef enum mg_status {
    MG_OK = 0,
    MG_ERR_INVALID_ARGUMENT = 1,
    MG_ERR_DOMAIN = 2,
    MG_ERR_CAP_EXCEEDED = 3,
    MG_ERR_PARSE = 4,
    MG_ERR_OVERFLOW = 5,
    MG_ERR_INTERNAL = 6
} mg_status;

MG_API const char* mg_version(void);
MG_API const char* mg_last_error(void);
MG_API void mg_string_free(char* s);

/* ---- quivers ---------------------------------------------------------- */

/* adjacency: n*n arrow counts, row-major; must be acyclic with zero diagonal */
MG_API mg_status mg_quiver_create(int32_t n, const int64_t* adjacency, mg_quiver** out);
MG_API void mg_quiver_free(mg_quiver* q);
MG_API int32_t mg_quiver_vertex_count(const mg_quiver* q);

/* chi[i][j] = sum_m (-1)^m dim Hom(S_i, S_j[m]) for the CY-N category; out
 * receives n*n entries */
MG_API mg_status mg_quiver_euler_matrix(const mg_quiver* q, int32_t cy_n, int64_t* out);

/* ---- stability conditions --------------------------------------------- */

/* component arrays of length n; each charge re/im as exact rationals, value
 * must lie in the semi-closed upper half-plane */
MG_API mg_status mg_charge_create(const mg_quiver* q, const int64_t* re_num, const int64_t* re_den,
                                  const int64_t* im_num, const int64_t* im_den, mg_charge** out);
/* z_i = i for every vertex */
MG_API mg_status mg_charge_sigma0(const mg_quiver* q, mg_charge** out);
MG_API void mg_charge_free(mg_charge* c);

/* ---- representations --------------------------------------------------- */

MG_API mg_status mg_rep_create(const mg_quiver* q, int32_t p, const int32_t* dims,
                               const uint8_t* maps, size_t maps_len, mg_rep** out);
MG_API mg_status mg_rep_random(const mg_quiver* q, int32_t p, const int32_t* dims, uint64_t seed,
                               int32_t cap, mg_rep** out);
MG_API mg_status mg_rep_universal_extension(const mg_quiver* q, int32_t p, int32_t i, int32_t j,
                                            mg_rep** out);
MG_API void mg_rep_free(mg_rep* r);
MG_API mg_status mg_rep_dims(const mg_rep* r, int32_t* out);
MG_API mg_status mg_rep_subrep_count(const mg_rep* r, int32_t cap, int64_t* out);

/* serializes dims, field and arrow matrices in the configuration schema, so
 * the output can be fed back through mg_rep_create */
MG_API mg_status mg_rep_json(const mg_rep* r, char** json_out);

/* ---- Harder-Narasimhan engine ------------------------------------------ */

MG_API mg_status mg_is_semistable(const mg_charge* c, const mg_rep* r, int32_t cap, int32_t* out);
MG_API mg_status mg_mass(const mg_charge* c, const mg_rep* r, double t, int32_t cap, double* out);

/* steps, factor dimension vectors, exact factor charges, phases, and masses
 * at each requested t, as a JSON document */
MG_API mg_status mg_hn_json(const mg_charge* c, const mg_rep* r, const double* ts, size_t n_ts,
                            int32_t cap, char** json_out);

/* brute-force hull versus filtration; agreement is 1 when the extremal points
 * coincide exactly */
MG_API mg_status mg_polygon_oracle(const mg_charge* c, const mg_rep* r, int32_t cap,
                                   int32_t* agreement, char** json_out);
MG_API mg_status mg_polygon_svg(const mg_charge* c, const mg_rep* r, int32_t cap, char** svg_out);

/* ---- twist calculus ----------------------------------------------------- */

/* word grammar: whitespace-separated `T<k>`, `T<k>'`, `S[<m>]`, vertices
 * 1-based */
MG_API mg_status mg_twist_k_matrix(const mg_quiver* q, int32_t cy_n, const char* word, int64_t* out);
MG_API mg_status mg_twist_power_profile_json(const mg_quiver* q, int32_t cy_n, int32_t i, int32_t k,
                                             int32_t j, char** json_out);
MG_API mg_status mg_word_upper_profile_json(const mg_quiver* q, int32_t cy_n, const char* word,
                                            char** json_out);

/* ---- growth analysis ----------------------------------------------------- */

MG_API mg_status mg_char_poly(int32_t n, const int64_t* matrix, int64_t* coeffs_ascending);
MG_API mg_status mg_spectral_radius(int32_t n, const int64_t* matrix, double* value,
                                    int32_t* exact);

/* m_{sigma,t}(Phi_i^n G) for n = 0..n_max; out receives n_max+1 values */
MG_API mg_status mg_twist_mass_series(const mg_charge* c, int32_t cy_n, int32_t i, double t,
                                      int32_t n_max, double* out);

/* Poincare values of the no-cancellation profile of word^n G at t */
MG_API mg_status mg_upper_profile_series(const mg_quiver* q, int32_t cy_n, const char* word,
                                         double t, int32_t n_max, double* out);

MG_API mg_status mg_estimate_growth(const double* values, size_t count, double* slope_regression,
                                    double* slope_increment, double* residual_variance);

MG_API mg_status mg_entropy_twist_power(const mg_quiver* q, int32_t cy_n, double t, double* out);

/* lower log-rho, upper no-cancellation slope and (when available) the closed
 * form, as a JSON document */
MG_API mg_status mg_spectral_bound_report_json(const mg_quiver* q, int32_t cy_n, const char* word,
                                               const mg_charge* c, int32_t n_max, char** json_out);

MG_API mg_status mg_delta_bounds(const mg_charge* c, const mg_rep* r, double t, int32_t cap,
                                 double* lower, double* upper);

/* pairwise mass-growth slope gaps for one twist generator across several
 * stability conditions */
MG_API mg_status mg_deformation_check_json(int32_t cy_n, int32_t i, double t,
                                           const mg_charge* const* charges, size_t n_charges,
                                           int32_t n_max, double tolerance, char** json_out);

/* ---- invariant suites ----------------------------------------------------- */

/* suite: geometry | hn | polygon | mass-triangle | twist | growth | all */
MG_API mg_status mg_check_suite(const char* suite, uint64_t seed, int32_t* passed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* MASSGROWTH_H */
