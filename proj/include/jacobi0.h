/* C interface for the jacobi0 library: truncated (q, zeta)-series, fractional
 * q-series, Weierstrass/Klein evaluators, congruence tests, zero counting,
 * and the verification suites, behind opaque handles and status codes.
 *
 * Conventions:
 *   - every fallible call returns j0_status; outputs are written through
 *     pointers only on J0_OK;
 *   - j0_last_error() describes the most recent failure in the calling
 *     thread;
 *   - char** outputs receive malloc'd strings released with j0_string_free;
 *   - rational arguments are exact strings like "1/2", "-3", "0";
 *   - complex numbers travel as (re, im) double pairs.
 */
#ifndef JACOBI0_H
#define JACOBI0_H

#include <stddef.h>

#if defined(_WIN32)
#define J0_API __declspec(dllexport)
#else
#define J0_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum j0_status {
  J0_OK = 0,
  J0_EINVAL = 1,   /* invalid argument or precondition */
  J0_EPARSE = 2,   /* malformed JSON or rational literal */
  J0_EFIELD = 3,   /* mixed exact/complex coefficient fields */
  J0_EDOMAIN = 4,  /* outside the mathematical domain (Im tau <= 0, pole, ...) */
  J0_EWINDOW = 5,  /* truncation window too small to certify the request */
  J0_ENUMERIC = 6, /* convergence/overflow failure or rejected contour */
  J0_EVERIFY = 7   /* a verification suite reported failures */
} j0_status;

typedef struct j0_biseries j0_biseries;
typedef struct j0_fracqseries j0_fracqseries;
typedef struct j0_form j0_form;

J0_API const char* j0_version(void);
/* Thread-local message for the last failing call; never NULL. */
J0_API const char* j0_last_error(void);
J0_API void j0_string_free(char* s);

/* ---- bivariate series ---------------------------------------------- */

J0_API j0_status j0_sigma_series(int trunc, j0_biseries** out);
J0_API j0_status j0_biseries_one(int trunc, j0_biseries** out);
J0_API j0_status j0_biseries_from_json(const char* text, j0_biseries** out);
J0_API j0_status j0_biseries_to_json(const j0_biseries* s, char** out);
J0_API j0_status j0_biseries_mul(const j0_biseries* a, const j0_biseries* b,
                                 j0_biseries** out);
J0_API j0_status j0_biseries_scale(j0_biseries* s, const char* rational);
J0_API j0_status j0_biseries_eval(const j0_biseries* s, double tau_re, double tau_im,
                                  double z_re, double z_im, double* out_re,
                                  double* out_im);
J0_API j0_status j0_biseries_trunc(const j0_biseries* s, int* out);
/* profile[n] for n = 0..trunc; envelope != 0 gives the monotone hull.
 * The array is malloc'd; release with j0_array_free. */
J0_API j0_status j0_biseries_profile(const j0_biseries* s, int envelope, int** out,
                                     int* out_len);
J0_API void j0_biseries_free(j0_biseries* s);
J0_API void j0_array_free(void* p);

/* ---- fractional q-series ------------------------------------------- */

J0_API j0_status j0_fracq_from_json(const char* text, j0_fracqseries** out);
J0_API j0_status j0_fracq_to_json(const j0_fracqseries* s, char** out);
J0_API j0_status j0_fracq_mul(const j0_fracqseries* a, const j0_fracqseries* b,
                              j0_fracqseries** out);
J0_API j0_status j0_fracq_eval(const j0_fracqseries* s, double tau_re, double tau_im,
                               double* out_re, double* out_im);
/* is_zero = 1 marks the identically-zero-to-truncation flag; otherwise the
 * order is ord_num/ord_den in lowest terms. */
J0_API j0_status j0_fracq_ord(const j0_fracqseries* s, double rel_tol, int* is_zero,
                              long* ord_num, long* ord_den);
J0_API void j0_fracq_free(j0_fracqseries* s);

/* ---- point functions on the lattice [tau, 1] ------------------------ */

J0_API j0_status j0_psi(const char* lambda, const char* mu, int* out);
J0_API j0_status j0_eta1(double tau_re, double tau_im, double* out_re, double* out_im);
J0_API j0_status j0_eta_point(const char* lambda, const char* mu, double tau_re,
                              double tau_im, double* out_re, double* out_im);
J0_API j0_status j0_rho(double tau_re, double tau_im, double z_re, double z_im,
                        double* out_re, double* out_im);
J0_API j0_status j0_sigma_point(double tau_re, double tau_im, double z_re, double z_im,
                                double* out_re, double* out_im);
J0_API j0_status j0_wzeta(double tau_re, double tau_im, double z_re, double z_im,
                          double* out_re, double* out_im);
J0_API j0_status j0_legendre_check(double tau_re, double tau_im, double* deviation);

/* ---- forms ----------------------------------------------------------- */

/* name: "sigma" or "one". */
J0_API j0_status j0_form_builtin(const char* name, j0_form** out);
J0_API j0_status j0_form_mul(const j0_form* f, const j0_form* g, j0_form** out);
J0_API j0_status j0_form_weight(const j0_form* f, int* out);
J0_API j0_status j0_form_series(const j0_form* f, int trunc, j0_biseries** out);
J0_API j0_status j0_form_eval(const j0_form* f, double tau_re, double tau_im,
                              double z_re, double z_im, double* out_re, double* out_im);
J0_API j0_status j0_form_slash_prime_eval(const j0_form* f, long a, long b, long c,
                                          long d, double tau_re, double tau_im,
                                          double z_re, double z_im, double* out_re,
                                          double* out_im);
J0_API j0_status j0_form_slash_dprime_eval(const j0_form* f, const char* lambda,
                                           const char* mu, double tau_re, double tau_im,
                                           double z_re, double z_im, double* out_re,
                                           double* out_im);
J0_API j0_status j0_form_phi_x_point(const j0_form* f, const char* lambda,
                                     const char* mu, double tau_re, double tau_im,
                                     double* out_re, double* out_im);
J0_API void j0_form_free(j0_form* f);

/* ---- klein / phi_X --------------------------------------------------- */

J0_API j0_status j0_klein_eval(const char* lambda, const char* mu, double tau_re,
                               double tau_im, double* out_re, double* out_im);
J0_API j0_status j0_klein_qexp(const char* lambda, const char* mu, int trunc,
                               j0_fracqseries** out);
/* series must hold exact coefficients (J0_EFIELD otherwise). */
J0_API j0_status j0_phi_x_series(const j0_biseries* series, int k, const char* lambda,
                                 const char* mu, j0_fracqseries** out);
J0_API j0_status j0_subgroup_member(const char* lambda, const char* mu, int k, long a,
                                    long b, long c, long d, int* out);
/* order = -1 when no small order was found. */
J0_API j0_status j0_translation_ratio(const j0_biseries* series, int k,
                                      const char* lambda_x, const char* mu_x,
                                      const char* lambda_y, const char* mu_y,
                                      double* xi_re, double* xi_im,
                                      double* grid_deviation, double* unit_deviation,
                                      long* order);

/* ---- analysis --------------------------------------------------------- */

/* Pass z0 overrides as NaN to use the default corner.  json_out (optional)
 * receives the zero-count report. */
J0_API j0_status j0_count_zeros(const j0_form* f, double tau_re, double tau_im,
                                double z0_re, double z0_im, char** json_out,
                                long* count_out);
J0_API j0_status j0_filtration_index(const j0_biseries* series, int k, int* admissible,
                                     int* index, char** reason_out);
J0_API j0_status j0_coeff_relation(const j0_biseries* series, int k,
                                   const long* lambdas, int n_lambdas, long* checked,
                                   long* violations);
J0_API j0_status j0_delta_qexp(int trunc, j0_fracqseries** out);
/* lambdas/mus: n parallel rational strings.  JSON result:
 * {"filtration":int,"all_holomorphic":bool,"components":[...],"ords":[...]}. */
J0_API j0_status j0_embed(const j0_biseries* series, int k, const char* const* lambdas,
                          const char* const* mus, int n, int m, int trunc,
                          char** json_out);

/* ---- verification ----------------------------------------------------- */

/* Runs a named suite ("legendre", ..., or "all").  json_out and all_pass are
 * written whenever the suite executes, even on J0_EVERIFY (any report
 * failing); other statuses leave the outputs untouched. */
J0_API j0_status j0_run_suite(const char* name, char** json_out, int* all_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* JACOBI0_H */
