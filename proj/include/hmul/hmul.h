/*
 * Copyright 2026 The hmul Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * hmul -- Fourier multiplier norms on the Hardy space of the disc.
 *
 * C interface to the hmul core: analytic polynomials and multiplier symbols
 * on the circle, Hankel forms and their factorization (gamma_2) norm with
 * two-sided certificates, shifted-multiplier maximal functionals, the
 * block-witness separation experiment, and power-bounded operator
 * certificates.
 *
 * Conventions:
 *  - Every function returns an hmul_status (HMUL_OK == 0 on success). On
 *    failure, hmul_last_error() returns a thread-local description.
 *  - Objects are opaque handles freed with their hmul_*_free function.
 *  - Complex data travels as separate re/im double arrays; a NULL im pointer
 *    means "all imaginary parts zero" on input.
 *  - Grids are powers of two; grid_size 0 asks the library to choose.
 */

#ifndef HMUL_H
#define HMUL_H

#include <stddef.h>
#include <stdint.h>

#if defined(HMUL_BUILD_SHARED)
#define HMUL_API __attribute__((visibility("default")))
#else
#define HMUL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int hmul_status;

enum {
  HMUL_OK = 0,
  HMUL_ERR_INVALID_ARGUMENT = 1,
  HMUL_ERR_GRID_TOO_SMALL = 2,
  HMUL_ERR_NOT_POWER_OF_TWO = 3,
  HMUL_ERR_ZERO_INPUT = 4,
  HMUL_ERR_FACTORIZATION_DIVERGED = 5,
  HMUL_ERR_SIZE_LIMIT = 6,
  HMUL_ERR_SDP_NONCONVERGENT = 7,
  HMUL_ERR_DEGREE_VIOLATION = 8,
  HMUL_ERR_FAMILY_LENGTH_MISMATCH = 9,
  HMUL_ERR_NORM_VIOLATION = 10,
  HMUL_ERR_DIMENSION_MISMATCH = 11,
  HMUL_ERR_NOT_CERTIFIABLE = 12,
  HMUL_ERR_NOT_A_CONTRACTION = 13,
  HMUL_ERR_PROPERTY_CHECK_FAILED = 14,
  HMUL_ERR_IO = 15,
  HMUL_ERR_PARSE = 16,
  HMUL_ERR_CHECKSUM_MISMATCH = 17,
  HMUL_ERR_NOT_FOUND = 18,
  HMUL_ERR_INTERNAL = 19
};

/* Norm selectors for hmul_norm_p. */
enum { HMUL_NORM_INF = 0, HMUL_NORM_L1 = 1, HMUL_NORM_L2 = 2 };

HMUL_API const char* hmul_version_string(void);
HMUL_API const char* hmul_status_name(hmul_status code);
/* Thread-local message describing the most recent failure in this thread. */
HMUL_API const char* hmul_last_error(void);
/* Frees strings returned through char** out-parameters. */
HMUL_API void hmul_string_free(char* s);

/* ---------------------------------------------------------------- objects */

typedef struct hmul_poly hmul_poly;     /* analytic polynomial sum c(n) z^n   */
typedef struct hmul_seq hmul_seq;       /* multiplier symbol phi : N -> C     */
typedef struct hmul_matrix hmul_matrix; /* dense complex matrix               */
typedef struct hmul_gamma2_cert hmul_gamma2_cert;
typedef struct hmul_dyadic hmul_dyadic;
typedef struct hmul_sep_report hmul_sep_report;
typedef struct hmul_powerop hmul_powerop;
typedef struct hmul_mdcert hmul_mdcert;

/* ------------------------------------------------------------ polynomials */

HMUL_API hmul_status hmul_poly_create(const int64_t* indices, const double* re,
                                      const double* im, size_t count, hmul_poly** out);
HMUL_API void hmul_poly_free(hmul_poly* p);
HMUL_API hmul_status hmul_poly_degree(const hmul_poly* p, int64_t* out);
HMUL_API hmul_status hmul_poly_support_count(const hmul_poly* p, size_t* out);
/* Buffers sized by hmul_poly_support_count; entries in increasing index order. */
HMUL_API hmul_status hmul_poly_export(const hmul_poly* p, int64_t* indices, double* re,
                                      double* im);
HMUL_API hmul_status hmul_poly_coeff(const hmul_poly* p, int64_t n, double* re, double* im);
/* JSON schema: {"support": [[n, re, im], ...]} */
HMUL_API hmul_status hmul_poly_to_json(const hmul_poly* p, char** out);
HMUL_API hmul_status hmul_poly_from_json(const char* text, hmul_poly** out);

/* -------------------------------------------------------------- sequences */

HMUL_API hmul_status hmul_seq_create(const int64_t* indices, const double* re,
                                     const double* im, size_t count, hmul_seq** out);
HMUL_API void hmul_seq_free(hmul_seq* s);
HMUL_API hmul_status hmul_seq_support_max(const hmul_seq* s, int64_t* out);
HMUL_API hmul_status hmul_seq_support_count(const hmul_seq* s, size_t* out);
HMUL_API hmul_status hmul_seq_export(const hmul_seq* s, int64_t* indices, double* re,
                                     double* im);
HMUL_API hmul_status hmul_seq_entry(const hmul_seq* s, int64_t n, double* re, double* im);
HMUL_API hmul_status hmul_seq_to_json(const hmul_seq* s, char** out);
HMUL_API hmul_status hmul_seq_from_json(const char* text, hmul_seq** out);
HMUL_API hmul_status hmul_seq_from_poly(const hmul_poly* p, hmul_seq** out);
HMUL_API hmul_status hmul_seq_l2_norm(const hmul_seq* s, double* out);

/* ------------------------------------------------------- circle analysis  */

/* values[j] = sum_n c(n) exp(2 pi i j n / grid_size); grid_size a power of
 * two exceeding twice the degree. Both output buffers hold grid_size values. */
HMUL_API hmul_status hmul_eval_grid(const hmul_poly* p, uint64_t grid_size, double* out_re,
                                    double* out_im);
/* which: HMUL_NORM_L1 / L2 / INF. L2 ignores the grid; L1/INF need a
 * power-of-two grid exceeding 4x the degree. */
HMUL_API hmul_status hmul_norm_p(const hmul_poly* p, int which, uint64_t grid_size,
                                 double* out);
/* Certified upper bound on sup |p| (grid max over 1 - pi*degree/grid). */
HMUL_API hmul_status hmul_norm_inf_upper(const hmul_poly* p, uint64_t grid_size, double* out);

/* Factor p = g*h with |g| = |h| = |p|^{1/2} on the circle. Grid buffers (each
 * of length grid_size) may be NULL when only the norms are wanted. */
HMUL_API hmul_status hmul_riesz_factor(const hmul_poly* p, uint64_t grid_size, double tol,
                                       double* l2g, double* l2h, double* residual,
                                       double* achieved_tol, double* g_re, double* g_im,
                                       double* h_re, double* h_im);

/* Trapezoidal taper: 0 at 0, 1 on [2^K, 2^{K+1}], 0 from 3*2^K on. */
HMUL_API hmul_status hmul_lvp_kernel(int K, hmul_poly** out);
HMUL_API hmul_status hmul_dirichlet_poly(int64_t q, hmul_poly** out);

/* ----------------------------------------------------------- dense matrix */

/* Row-major; im may be NULL. */
HMUL_API hmul_status hmul_matrix_create(int64_t rows, int64_t cols, const double* re,
                                        const double* im, hmul_matrix** out);
HMUL_API void hmul_matrix_free(hmul_matrix* a);
HMUL_API hmul_status hmul_matrix_rows(const hmul_matrix* a, int64_t* out);
HMUL_API hmul_status hmul_matrix_cols(const hmul_matrix* a, int64_t* out);
HMUL_API hmul_status hmul_matrix_get(const hmul_matrix* a, int64_t i, int64_t j, double* re,
                                     double* im);
/* JSON schema: {"m": rows, "n": cols, "rows": [[re, im, ...], ...]} */
HMUL_API hmul_status hmul_matrix_to_json(const hmul_matrix* a, char** out);
HMUL_API hmul_status hmul_matrix_from_json(const char* text, hmul_matrix** out);

/* -------------------------------------------------- Hankel / gamma2 / x2  */

/* entries(i,j) = phi(i+j), 0 <= i,j < n. dense_cap 0 means the default 4096. */
HMUL_API hmul_status hmul_build_hankel(const hmul_seq* phi, int64_t n, int64_t dense_cap,
                                       hmul_matrix** out);

/* Factorization norm of a dense matrix with a two-sided certificate.
 * size_cap 0 means the default 600. */
HMUL_API hmul_status hmul_gamma2(const hmul_matrix* a, double tol, int64_t size_cap,
                                 hmul_gamma2_cert** out);
HMUL_API void hmul_gamma2_cert_free(hmul_gamma2_cert* c);
HMUL_API hmul_status hmul_gamma2_value(const hmul_gamma2_cert* c, double* out);
HMUL_API hmul_status hmul_gamma2_gap(const hmul_gamma2_cert* c, double* out);
HMUL_API hmul_status hmul_gamma2_dual_bound(const hmul_gamma2_cert* c, double* out);
HMUL_API hmul_status hmul_gamma2_row_norm_max(const hmul_gamma2_cert* c, double* out);
HMUL_API hmul_status hmul_gamma2_col_norm_max(const hmul_gamma2_cert* c, double* out);
/* X is m-by-r, Y is r-by-n, witness is (m+n)-by-(m+n). */
HMUL_API hmul_status hmul_gamma2_factor_rank(const hmul_gamma2_cert* c, int64_t* out);
HMUL_API hmul_status hmul_gamma2_factor_x(const hmul_gamma2_cert* c, hmul_matrix** out);
HMUL_API hmul_status hmul_gamma2_factor_y(const hmul_gamma2_cert* c, hmul_matrix** out);
HMUL_API hmul_status hmul_gamma2_witness(const hmul_gamma2_cert* c, hmul_matrix** out);
/* Scalars plus base64-packed factor and witness arrays. */
HMUL_API hmul_status hmul_gamma2_cert_to_json(const hmul_gamma2_cert* c, char** out);

/* Dyadic-block factorization bounds for the Hankel form of phi. */
HMUL_API hmul_status hmul_dyadic_upper(const hmul_seq* phi, hmul_dyadic** out);
HMUL_API void hmul_dyadic_free(hmul_dyadic* d);
HMUL_API hmul_status hmul_dyadic_block_sup(const hmul_dyadic* d, double* out);
HMUL_API hmul_status hmul_dyadic_statement_bound(const hmul_dyadic* d, double* out);
HMUL_API hmul_status hmul_dyadic_proof_bound(const hmul_dyadic* d, double* out);
HMUL_API hmul_status hmul_dyadic_two_proxy(const hmul_dyadic* d, double* out);
HMUL_API hmul_status hmul_dyadic_vectors_materialized(const hmul_dyadic* d, int* out);
/* <x_i, e_j> + <x_j, e_i> + <y_i, e_j> from the stored vector families. */
HMUL_API hmul_status hmul_dyadic_reconstruct(const hmul_dyadic* d, int64_t i, int64_t j,
                                             double* re, double* im);

/* Certified lower bound for the restricted dual norm of g. */
HMUL_API hmul_status hmul_x2_lower(const hmul_poly* g, double tol, double* out);

/* sup over unimodular s, t of |sum A_ij s_i t_j|; exact sign enumeration for
 * real input (refinement_bound 0), phase grid otherwise. */
HMUL_API hmul_status hmul_injective_norm(const hmul_matrix* a, int phase_resolution,
                                         double* value, double* refinement_bound);
/* Upper estimate (only) of the lifted convolution norm of p. */
HMUL_API hmul_status hmul_lifting_norm_upper(const hmul_poly* p, int phase_resolution,
                                             double* out);

/* ------------------------------------------------------ shifted multiplier */

HMUL_API hmul_status hmul_apply_multiplier(const hmul_seq* phi, const hmul_poly* x,
                                           hmul_poly** out);
/* Quadrature of sup_k |sum_n x(n) phi(n+k) z^n| plus a grid-doubling gap. */
HMUL_API hmul_status hmul_shift_maximal(const hmul_seq* phi, const hmul_poly* x,
                                        uint64_t grid_size, double* value, int64_t* k_max,
                                        double* refinement_gap);
/* Kernel-extraction lower bound: certified = integral/2, conservative = /3. */
HMUL_API hmul_status hmul_m3_lower_from_family(const hmul_poly* const* family, size_t count,
                                               int K, uint64_t grid_size, double* certified,
                                               double* conservative);
/* n -> kernel(n-k) * phi(n), exact sparse coefficient arithmetic. */
HMUL_API hmul_status hmul_extract_shift_window(const hmul_seq* phi, const hmul_poly* kernel,
                                               int64_t k, hmul_seq** out);

/* --------------------------------------------------- witness / separation */

/* 8q equispaced points with sup-norm recovery constant a = 1/(1 - pi/4);
 * thetas may be NULL. point_count, a, b are each optional outputs. */
HMUL_API hmul_status hmul_bernstein_grid(int64_t q, size_t* point_count, double* a, double* b,
                                         double* thetas);
/* Empirical lower bound (rotated Dirichlet family) and sqrt(q) ceiling. */
HMUL_API hmul_status hmul_cq_estimate(int64_t q, uint64_t grid_size, double* lower,
                                      double* upper);
HMUL_API hmul_status hmul_rotated_dirichlet_family(int64_t q, hmul_poly*** out, size_t* count);
HMUL_API void hmul_poly_array_free(hmul_poly** family, size_t count);
/* Block-embedded symbol scaled by 1/4; family length must be K/2 - 1. */
HMUL_API hmul_status hmul_build_witness(int K, const hmul_poly* const* family, size_t count,
                                        hmul_seq** out);

/* grid_size 0 chooses per-row grids; rows with K <= sdp_max_K also get the
 * dense SDP cross-check. */
HMUL_API hmul_status hmul_separation_experiment(const int* Ks, size_t count,
                                                uint64_t grid_size, double sdp_tol,
                                                int sdp_max_K, hmul_sep_report** out);
HMUL_API void hmul_sep_report_free(hmul_sep_report* r);
HMUL_API hmul_status hmul_sep_row_count(const hmul_sep_report* r, size_t* out);
/* m2_upper_sdp is NaN for rows without the dense cross-check. */
HMUL_API hmul_status hmul_sep_row(const hmul_sep_report* r, size_t i, int* K, int64_t* q,
                                  double* m2_upper_proof, double* m2_upper_sdp,
                                  double* m3_lower, double* ratio);
HMUL_API hmul_status hmul_sep_fit(const hmul_sep_report* r, double* exponent, double* r2);
HMUL_API hmul_status hmul_sep_to_json(const hmul_sep_report* r, char** out);
HMUL_API hmul_status hmul_sep_to_csv(const hmul_sep_report* r, char** out);

/* ------------------------------------------------- power-bounded operators */

HMUL_API hmul_status hmul_power_bound_certify(const hmul_matrix* t, int n_max,
                                              hmul_powerop** out);
HMUL_API void hmul_powerop_free(hmul_powerop* op);
HMUL_API hmul_status hmul_powerop_certified_c(const hmul_powerop* op, double* out);
HMUL_API hmul_status hmul_powerop_horizon(const hmul_powerop* op, int* out);
HMUL_API hmul_status hmul_powerop_is_contraction(const hmul_powerop* op, int* out);
HMUL_API hmul_status hmul_powerop_norm_at_horizon(const hmul_powerop* op, double* out);
HMUL_API hmul_status hmul_powerop_rationale(const hmul_powerop* op, char** out);
HMUL_API hmul_status hmul_powerop_to_json(const hmul_powerop* op, char** out);

/* phi(n) = <T^n xi, eta> for 0 <= n <= N; vectors of the operator dimension. */
HMUL_API hmul_status hmul_coeff_sequence(const hmul_powerop* op, const double* xi_re,
                                         const double* xi_im, const double* eta_re,
                                         const double* eta_im, size_t dim, int64_t N,
                                         hmul_seq** out);

HMUL_API hmul_status hmul_md_certificate(const hmul_powerop* op, const double* xi_re,
                                         const double* xi_im, const double* eta_re,
                                         const double* eta_im, size_t dim, int d,
                                         hmul_mdcert** out);
HMUL_API void hmul_mdcert_free(hmul_mdcert* c);
HMUL_API hmul_status hmul_mdcert_norm_bound(const hmul_mdcert* c, double* out);
HMUL_API hmul_status hmul_mdcert_eval(const hmul_mdcert* c, const int64_t* ts, size_t count,
                                      double* re, double* im);

/* lhs = ||P(T)||, rhs = certified circle sup bound, pass = lhs <= rhs(1+1e-8). */
HMUL_API hmul_status hmul_von_neumann_check(const hmul_poly* p, const hmul_matrix* t,
                                            uint64_t grid_size, double* lhs, double* rhs,
                                            int* pass);

#ifdef __cplusplus
}
#endif

#endif /* HMUL_H */
