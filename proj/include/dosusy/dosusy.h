/*
 * dosusy C API.
 *
 * Every entry point returns a dosusy_status; values come back through out
 * parameters. On failure dosusy_last_error() holds a message for the calling
 * thread until the next failing call on that thread. Handles are opaque and
 * must be released with the matching *_destroy function. Handles are
 * immutable after creation and may be shared across threads.
 */
#ifndef DOSUSY_H
#define DOSUSY_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DOSUSY_BUILDING_LIBRARY)
#    define DOSUSY_API __declspec(dllexport)
#  else
#    define DOSUSY_API __declspec(dllimport)
#  endif
#else
#  define DOSUSY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dosusy_status {
    DOSUSY_OK = 0,
    DOSUSY_ERR_DOMAIN = 1,      /* argument outside the evaluator's domain */
    DOSUSY_ERR_CONVERGENCE = 2, /* oracle missed its tolerance / empty bracket */
    DOSUSY_ERR_OVERFLOW = 3,    /* Numerov march diverged / integer overflow */
    DOSUSY_ERR_GRID = 4,        /* bad sampling grid */
    DOSUSY_ERR_NULL = 5,        /* required pointer was NULL */
    DOSUSY_ERR_BUFFER = 6,      /* caller buffer too small */
    DOSUSY_ERR_INTERNAL = 99
} dosusy_status;

DOSUSY_API const char* dosusy_status_string(dosusy_status status);
DOSUSY_API const char* dosusy_last_error(void);
DOSUSY_API const char* dosusy_version(void);

/* ---- Special functions ------------------------------------------------ */

DOSUSY_API dosusy_status dosusy_gegenbauer(int degree, double order, double xi, double* out);
DOSUSY_API dosusy_status dosusy_binomial(int n, int k, unsigned long long* out);

/* ---- Half-line model (rho = r/R, E0 = 1) ------------------------------- */

DOSUSY_API dosusy_status dosusy_coupling_w(int N, double kappa, double* out);
DOSUSY_API dosusy_status dosusy_potential_v(double rho, double kappa, double w, double* out);
DOSUSY_API dosusy_status dosusy_xi_of_rho(double rho, double kappa, double* out);
DOSUSY_API dosusy_status dosusy_radial_wavefunction(double rho, double kappa, int l, int N, double* out);
DOSUSY_API dosusy_status dosusy_degeneracy(int N, long long* out);

/* ---- Isospectral family ------------------------------------------------ */

typedef struct dosusy_family dosusy_family;

/* Quantities sampled by dosusy_family_eval. */
typedef enum dosusy_quantity {
    DOSUSY_Q_POTENTIAL_V = 0,    /* V_kappa with the nodeless coupling */
    DOSUSY_Q_RADIAL_FACTOR,      /* f */
    DOSUSY_Q_SUPERPOTENTIAL,     /* W */
    DOSUSY_Q_U_MINUS,            /* U- */
    DOSUSY_Q_U_PLUS,             /* U+ = W' + W^2 */
    DOSUSY_Q_I0,                 /* int_0^rho f^2 */
    DOSUSY_Q_V_GENERAL,          /* f^-2 (lambda + I0) */
    DOSUSY_Q_SUPERPOTENTIAL_GENERAL,
    DOSUSY_Q_U_BOSONIC,
    DOSUSY_Q_RADIAL_FACTOR_BOSONIC
} dosusy_quantity;

/* Nodeless-sector family for (kappa, l, lambda). */
DOSUSY_API dosusy_status dosusy_family_create(double kappa, int l, double lambda, dosusy_family** out);
DOSUSY_API void dosusy_family_destroy(dosusy_family* family);
/* Evaluates `quantity` at rho[0..n) into out[0..n). */
DOSUSY_API dosusy_status dosusy_family_eval(const dosusy_family* family, dosusy_quantity quantity,
                                            const double* rho, size_t n, double* out);
/* 0 = closed form kappa 1/2, 1 = closed form kappa 1, 2 = quadrature. */
DOSUSY_API dosusy_status dosusy_family_i0_route(const dosusy_family* family, int* out);

DOSUSY_API dosusy_status dosusy_beta_of_rho(double rho, double kappa, double* out);
DOSUSY_API dosusy_status dosusy_i0_closed_half(double beta, int l, double* out);
DOSUSY_API dosusy_status dosusy_i0_closed_one(double beta, int l, double* out);
DOSUSY_API dosusy_status dosusy_i0_quadrature(double rho, int l, double kappa, double tol, double* out);

/* ---- Fish-eye index family (kappa = 1) --------------------------------- */

typedef enum dosusy_index_mode {
    DOSUSY_INDEX_FIRST_ORDER = 0,
    DOSUSY_INDEX_EXACT = 1
} dosusy_index_mode;

typedef struct dosusy_table dosusy_table;

DOSUSY_API dosusy_status dosusy_index_maxwell(double rho, int l, double* out);
DOSUSY_API dosusy_status dosusy_index_iso(double rho, int l, double lambda, dosusy_index_mode mode, double* out);
DOSUSY_API dosusy_status dosusy_relative_ratio(double rho, int l, double lambda, double* out);
DOSUSY_API dosusy_status dosusy_v_family_fisheye(double rho, int l, double lambda, double* out);

/* Writes the inflection radius to *out and 1 to *found, or 0 to *found. */
DOSUSY_API dosusy_status dosusy_find_inflection(int l, double lambda, const double* grid, size_t n,
                                                dosusy_index_mode mode, int* found, double* out);

/* Figure table on grid[0..n). Column order: rho, n_maxwell, n_iso,
 * ratio_minus_1, f_bos_sq. */
DOSUSY_API dosusy_status dosusy_table_create(int l, double lambda, const double* grid, size_t n,
                                             dosusy_index_mode mode, dosusy_table** out);
DOSUSY_API void dosusy_table_destroy(dosusy_table* table);
DOSUSY_API size_t dosusy_table_rows(const dosusy_table* table);
/* Copies row `row` (5 values) into out[0..5). */
DOSUSY_API dosusy_status dosusy_table_row(const dosusy_table* table, size_t row, double* out);

/* ---- Full line --------------------------------------------------------- */

DOSUSY_API dosusy_status dosusy_langer_x(double rho, double* out);
DOSUSY_API dosusy_status dosusy_rm_potential(double x, int n_b, double* out);
DOSUSY_API dosusy_status dosusy_rm_partner_potential(double x, int n_b, double* out);
DOSUSY_API dosusy_status dosusy_rm_superpotential(double x, int n_b, double* out);
DOSUSY_API dosusy_status dosusy_rm_family_single(double x, double lambda0, double* out);
DOSUSY_API int dosusy_is_strict_branch(double lambda0);
DOSUSY_API dosusy_status dosusy_rescale_radius(double R, double lambda0, double* out);
DOSUSY_API dosusy_status dosusy_rescale_coordinate(double rho_inf, double lambda0, double* out);
DOSUSY_API dosusy_status dosusy_halfline_superpartner(double rho, int l, double* out);
DOSUSY_API dosusy_status dosusy_aufbau_rm_potential(double x, int N, double* out);

/* Rosen-Morse spectra. `variant` 0 = fish-eye image with n_b_int = n (a finite
 * lambda0 selects the translated single well, n must be 1; pass INFINITY for
 * none), 1 = aufbau with N = 2 n + 1 where n is the orbital number.
 * On entry *count is the capacity of `levels`; on return the number written.
 * `analytic` selects the closed-form ladder; otherwise the shooting oracle. */
DOSUSY_API dosusy_status dosusy_rm_levels(int variant, int n, double lambda0, int analytic,
                                          double* levels, size_t* count);

/* ---- Verification ------------------------------------------------------ */

typedef struct dosusy_report dosusy_report;

/* Runs suite "all" or one of specfun, do-core, isospectral, fisheye,
 * fullline, numerics with every tolerance scaled by tolerance_scale. */
DOSUSY_API dosusy_status dosusy_verify_run(const char* suite, double tolerance_scale, dosusy_report** out);
DOSUSY_API void dosusy_report_destroy(dosusy_report* report);
DOSUSY_API size_t dosusy_report_size(const dosusy_report* report);
/* Borrowed strings stay valid until the report is destroyed. */
DOSUSY_API dosusy_status dosusy_report_item(const dosusy_report* report, size_t index, const char** suite,
                                            const char** name, double* residual, double* tolerance,
                                            int* passed);

#ifdef __cplusplus
}
#endif

#endif /* DOSUSY_H */
