// C ABI shim: opaque handles around the C++ objects, exceptions folded into
// status codes, strings and arrays handed out as malloc'd blocks.
#include "jacobi0.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>
#include <vector>

#include "jacobi0/analysis.hpp"
#include "jacobi0/biseries.hpp"
#include "jacobi0/forms.hpp"
#include "jacobi0/fracqseries.hpp"
#include "jacobi0/json_io.hpp"
#include "jacobi0/klein.hpp"
#include "jacobi0/types.hpp"
#include "jacobi0/verify.hpp"
#include "jacobi0/weierstrass.hpp"

struct j0_biseries {
  jacobi0::ParsedBiSeries v;
};

struct j0_fracqseries {
  jacobi0::FracQSeries s;
};

struct j0_form {
  jacobi0::Form f;
};

namespace {

using jacobi0::BiSeriesC;
using jacobi0::BiSeriesQ;
using jacobi0::Complex;
using jacobi0::Rat;
using jacobi0::RationalPair;
using jacobi0::UnimodularMatrix;

thread_local std::string t_err;

void set_err(std::string m) { t_err = std::move(m); }

// Distinguishes literal/JSON syntax problems from other invalid arguments.
struct parse_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs fn, translating exceptions to statuses.  fn may itself return a
// non-OK status for conditions that are not exceptional in the C++ layer.
template <class Fn>
j0_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const parse_failure& e) {
    set_err(e.what());
    return J0_EPARSE;
  } catch (const jacobi0::window_error& e) {
    set_err(e.what());
    return J0_EWINDOW;
  } catch (const std::domain_error& e) {
    set_err(e.what());
    return J0_EDOMAIN;
  } catch (const std::logic_error& e) {  // invalid_argument, out_of_range, ...
    set_err(e.what());
    return J0_EINVAL;
  } catch (const std::exception& e) {  // overflow, convergence, allocation
    set_err(e.what());
    return J0_ENUMERIC;
  }
}

bool missing(const void* p) { return p == nullptr; }

j0_status null_arg() {
  set_err("null argument");
  return J0_EINVAL;
}

Rat parse_rat_arg(const char* s) {
  if (!s) throw parse_failure("null rational literal");
  try {
    return jacobi0::parse_rat(s);
  } catch (const std::invalid_argument& e) {
    throw parse_failure(e.what());
  }
}

RationalPair pair_arg(const char* lambda, const char* mu) {
  return {parse_rat_arg(lambda), parse_rat_arg(mu)};
}

void put(Complex v, double* re, double* im) {
  *re = v.real();
  *im = v.imag();
}

j0_status put_string(const std::string& s, char** out) {
  *out = dup_string(s);
  if (!*out) {
    set_err("out of memory");
    return J0_ENUMERIC;
  }
  return J0_OK;
}

const BiSeriesQ* exact_part(const j0_biseries* s) {
  return std::get_if<BiSeriesQ>(&s->v);
}

}  // namespace

extern "C" {

const char* j0_version(void) { return "0.1.0"; }

const char* j0_last_error(void) { return t_err.c_str(); }

void j0_string_free(char* s) { std::free(s); }

void j0_array_free(void* p) { std::free(p); }

/* ---- bivariate series ---------------------------------------------- */

j0_status j0_sigma_series(int trunc, j0_biseries** out) {
  if (missing(out)) return null_arg();
  return guarded([&] {
    *out = new j0_biseries{jacobi0::sigma_series(trunc)};
    return J0_OK;
  });
}

j0_status j0_biseries_one(int trunc, j0_biseries** out) {
  if (missing(out)) return null_arg();
  return guarded([&] {
    *out = new j0_biseries{BiSeriesQ::one(trunc)};
    return J0_OK;
  });
}

j0_status j0_biseries_from_json(const char* text, j0_biseries** out) {
  if (missing(text) || missing(out)) return null_arg();
  return guarded([&] {
    try {
      *out = new j0_biseries{jacobi0::biseries_from_json(text)};
    } catch (const std::invalid_argument& e) {
      throw parse_failure(e.what());
    }
    return J0_OK;
  });
}

j0_status j0_biseries_to_json(const j0_biseries* s, char** out) {
  if (missing(s) || missing(out)) return null_arg();
  return guarded([&] {
    std::string text =
        std::visit([](const auto& b) { return jacobi0::to_json(b); }, s->v);
    return put_string(text, out);
  });
}

j0_status j0_biseries_mul(const j0_biseries* a, const j0_biseries* b,
                          j0_biseries** out) {
  if (missing(a) || missing(b) || missing(out)) return null_arg();
  return guarded([&] {
    if (a->v.index() != b->v.index()) {
      set_err("mixed exact/complex coefficient fields");
      return J0_EFIELD;
    }
    if (const BiSeriesQ* aq = exact_part(a))
      *out = new j0_biseries{*aq * *exact_part(b)};
    else
      *out = new j0_biseries{std::get<BiSeriesC>(a->v) * std::get<BiSeriesC>(b->v)};
    return J0_OK;
  });
}

j0_status j0_biseries_scale(j0_biseries* s, const char* rational) {
  if (missing(s)) return null_arg();
  return guarded([&] {
    Rat r = parse_rat_arg(rational);
    if (BiSeriesQ* q = std::get_if<BiSeriesQ>(&s->v))
      q->scale(r);
    else
      std::get<BiSeriesC>(s->v).scale(jacobi0::field_traits<Rat>::to_complex(r));
    return J0_OK;
  });
}

j0_status j0_biseries_eval(const j0_biseries* s, double tau_re, double tau_im,
                           double z_re, double z_im, double* out_re,
                           double* out_im) {
  if (missing(s) || missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    Complex tau{tau_re, tau_im}, z{z_re, z_im};
    if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half-plane");
    put(std::visit([&](const auto& b) { return b.eval(tau, z); }, s->v), out_re,
        out_im);
    return J0_OK;
  });
}

j0_status j0_biseries_trunc(const j0_biseries* s, int* out) {
  if (missing(s) || missing(out)) return null_arg();
  *out = std::visit([](const auto& b) { return b.trunc(); }, s->v);
  return J0_OK;
}

j0_status j0_biseries_profile(const j0_biseries* s, int envelope, int** out,
                              int* out_len) {
  if (missing(s) || missing(out) || missing(out_len)) return null_arg();
  return guarded([&] {
    std::vector<int> prof = std::visit(
        [&](const auto& b) {
          return envelope ? b.envelope_profile() : b.minimal_profile();
        },
        s->v);
    int* arr = static_cast<int*>(std::malloc(prof.size() * sizeof(int)));
    if (!arr) {
      set_err("out of memory");
      return J0_ENUMERIC;
    }
    std::memcpy(arr, prof.data(), prof.size() * sizeof(int));
    *out = arr;
    *out_len = static_cast<int>(prof.size());
    return J0_OK;
  });
}

void j0_biseries_free(j0_biseries* s) { delete s; }

/* ---- fractional q-series ------------------------------------------- */

j0_status j0_fracq_from_json(const char* text, j0_fracqseries** out) {
  if (missing(text) || missing(out)) return null_arg();
  return guarded([&] {
    try {
      *out = new j0_fracqseries{jacobi0::fracqseries_from_json(text)};
    } catch (const std::invalid_argument& e) {
      throw parse_failure(e.what());
    }
    return J0_OK;
  });
}

j0_status j0_fracq_to_json(const j0_fracqseries* s, char** out) {
  if (missing(s) || missing(out)) return null_arg();
  return guarded([&] { return put_string(jacobi0::to_json(s->s), out); });
}

j0_status j0_fracq_mul(const j0_fracqseries* a, const j0_fracqseries* b,
                       j0_fracqseries** out) {
  if (missing(a) || missing(b) || missing(out)) return null_arg();
  return guarded([&] {
    *out = new j0_fracqseries{mul(a->s, b->s)};
    return J0_OK;
  });
}

j0_status j0_fracq_eval(const j0_fracqseries* s, double tau_re, double tau_im,
                        double* out_re, double* out_im) {
  if (missing(s) || missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    Complex tau{tau_re, tau_im};
    if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half-plane");
    put(s->s.eval(tau), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_fracq_ord(const j0_fracqseries* s, double rel_tol, int* is_zero,
                       long* ord_num, long* ord_den) {
  if (missing(s) || missing(is_zero) || missing(ord_num) || missing(ord_den))
    return null_arg();
  return guarded([&] {
    auto o = s->s.ord(rel_tol);
    if (!o) {
      *is_zero = 1;
      *ord_num = 0;
      *ord_den = 1;
      return J0_OK;
    }
    if (!o->get_num().fits_slong_p() || !o->get_den().fits_slong_p()) {
      set_err("order does not fit a long");
      return J0_ENUMERIC;
    }
    *is_zero = 0;
    *ord_num = o->get_num().get_si();
    *ord_den = o->get_den().get_si();
    return J0_OK;
  });
}

void j0_fracq_free(j0_fracqseries* s) { delete s; }

/* ---- point functions ------------------------------------------------ */

j0_status j0_psi(const char* lambda, const char* mu, int* out) {
  if (missing(out)) return null_arg();
  return guarded([&] {
    *out = jacobi0::psi(pair_arg(lambda, mu));
    return J0_OK;
  });
}

j0_status j0_eta1(double tau_re, double tau_im, double* out_re, double* out_im) {
  if (missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    put(jacobi0::eta1({tau_re, tau_im}), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_eta_point(const char* lambda, const char* mu, double tau_re,
                       double tau_im, double* out_re, double* out_im) {
  if (missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    put(jacobi0::eta_point(pair_arg(lambda, mu), {tau_re, tau_im}), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_rho(double tau_re, double tau_im, double z_re, double z_im,
                 double* out_re, double* out_im) {
  if (missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    put(jacobi0::rho({tau_re, tau_im}, {z_re, z_im}), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_sigma_point(double tau_re, double tau_im, double z_re, double z_im,
                         double* out_re, double* out_im) {
  if (missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    put(jacobi0::sigma_eval({tau_re, tau_im}, {z_re, z_im}), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_wzeta(double tau_re, double tau_im, double z_re, double z_im,
                   double* out_re, double* out_im) {
  if (missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    put(jacobi0::wzeta_eval({tau_re, tau_im}, {z_re, z_im}), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_legendre_check(double tau_re, double tau_im, double* deviation) {
  if (missing(deviation)) return null_arg();
  return guarded([&] {
    *deviation = jacobi0::legendre_check({tau_re, tau_im});
    return J0_OK;
  });
}

/* ---- forms ----------------------------------------------------------- */

j0_status j0_form_builtin(const char* name, j0_form** out) {
  if (missing(name) || missing(out)) return null_arg();
  return guarded([&] {
    std::string n = name;
    if (n == "sigma")
      *out = new j0_form{jacobi0::Form::sigma()};
    else if (n == "one")
      *out = new j0_form{jacobi0::Form::one()};
    else {
      set_err("unknown form '" + n + "' (expected \"sigma\" or \"one\")");
      return J0_EINVAL;
    }
    return J0_OK;
  });
}

j0_status j0_form_mul(const j0_form* f, const j0_form* g, j0_form** out) {
  if (missing(f) || missing(g) || missing(out)) return null_arg();
  return guarded([&] {
    *out = new j0_form{jacobi0::graded_mul(f->f, g->f)};
    return J0_OK;
  });
}

j0_status j0_form_weight(const j0_form* f, int* out) {
  if (missing(f) || missing(out)) return null_arg();
  *out = f->f.weight();
  return J0_OK;
}

j0_status j0_form_series(const j0_form* f, int trunc, j0_biseries** out) {
  if (missing(f) || missing(out)) return null_arg();
  return guarded([&] {
    *out = new j0_biseries{f->f.normalized_series(trunc)};
    return J0_OK;
  });
}

j0_status j0_form_eval(const j0_form* f, double tau_re, double tau_im, double z_re,
                       double z_im, double* out_re, double* out_im) {
  if (missing(f) || missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    put(f->f(Complex{tau_re, tau_im}, Complex{z_re, z_im}), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_form_slash_prime_eval(const j0_form* f, long a, long b, long c, long d,
                                   double tau_re, double tau_im, double z_re,
                                   double z_im, double* out_re, double* out_im) {
  if (missing(f) || missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    UnimodularMatrix M(a, b, c, d);
    auto g = jacobi0::slash_prime(f->f.evaluator(), f->f.weight(), M);
    put(g(Complex{tau_re, tau_im}, Complex{z_re, z_im}), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_form_slash_dprime_eval(const j0_form* f, const char* lambda,
                                    const char* mu, double tau_re, double tau_im,
                                    double z_re, double z_im, double* out_re,
                                    double* out_im) {
  if (missing(f) || missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    auto g = jacobi0::slash_dprime(f->f.evaluator(), f->f.weight(),
                                   pair_arg(lambda, mu));
    put(g(Complex{tau_re, tau_im}, Complex{z_re, z_im}), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_form_phi_x_point(const j0_form* f, const char* lambda, const char* mu,
                              double tau_re, double tau_im, double* out_re,
                              double* out_im) {
  if (missing(f) || missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    put(jacobi0::phi_x_point(f->f.evaluator(), f->f.weight(), pair_arg(lambda, mu),
                             {tau_re, tau_im}),
        out_re, out_im);
    return J0_OK;
  });
}

void j0_form_free(j0_form* f) { delete f; }

/* ---- klein / phi_X --------------------------------------------------- */

j0_status j0_klein_eval(const char* lambda, const char* mu, double tau_re,
                        double tau_im, double* out_re, double* out_im) {
  if (missing(out_re) || missing(out_im)) return null_arg();
  return guarded([&] {
    put(jacobi0::klein_eval(pair_arg(lambda, mu), {tau_re, tau_im}), out_re, out_im);
    return J0_OK;
  });
}

j0_status j0_klein_qexp(const char* lambda, const char* mu, int trunc,
                        j0_fracqseries** out) {
  if (missing(out)) return null_arg();
  return guarded([&] {
    *out = new j0_fracqseries{jacobi0::klein_qexp(pair_arg(lambda, mu), trunc)};
    return J0_OK;
  });
}

j0_status j0_phi_x_series(const j0_biseries* series, int k, const char* lambda,
                          const char* mu, j0_fracqseries** out) {
  if (missing(series) || missing(out)) return null_arg();
  return guarded([&] {
    const BiSeriesQ* q = exact_part(series);
    if (!q) {
      set_err("phi_X specialization needs exact coefficients");
      return J0_EFIELD;
    }
    *out = new j0_fracqseries{jacobi0::phi_x_series(*q, k, pair_arg(lambda, mu))};
    return J0_OK;
  });
}

j0_status j0_subgroup_member(const char* lambda, const char* mu, int k, long a,
                             long b, long c, long d, int* out) {
  if (missing(out)) return null_arg();
  return guarded([&] {
    *out = jacobi0::subgroup_member(pair_arg(lambda, mu), k,
                                    UnimodularMatrix(a, b, c, d))
               ? 1
               : 0;
    return J0_OK;
  });
}

j0_status j0_translation_ratio(const j0_biseries* series, int k,
                               const char* lambda_x, const char* mu_x,
                               const char* lambda_y, const char* mu_y, double* xi_re,
                               double* xi_im, double* grid_deviation,
                               double* unit_deviation, long* order) {
  if (missing(series) || missing(xi_re) || missing(xi_im) ||
      missing(grid_deviation) || missing(unit_deviation) || missing(order))
    return null_arg();
  return guarded([&] {
    const BiSeriesQ* q = exact_part(series);
    if (!q) {
      set_err("translation ratios need exact coefficients");
      return J0_EFIELD;
    }
    jacobi0::TranslationRatio r = jacobi0::translation_ratio(
        *q, k, pair_arg(lambda_x, mu_x), pair_arg(lambda_y, mu_y),
        jacobi0::default_tau_grid());
    put(r.xi, xi_re, xi_im);
    *grid_deviation = r.grid_deviation;
    *unit_deviation = r.unit_deviation;
    *order = r.order ? *r.order : -1;
    return J0_OK;
  });
}

/* ---- analysis --------------------------------------------------------- */

j0_status j0_count_zeros(const j0_form* f, double tau_re, double tau_im,
                         double z0_re, double z0_im, char** json_out,
                         long* count_out) {
  if (missing(f)) return null_arg();
  return guarded([&] {
    jacobi0::ZeroCountOptions opts;
    if (std::isfinite(z0_re) && std::isfinite(z0_im)) opts.z0 = {z0_re, z0_im};
    jacobi0::ZeroCountReport rep =
        jacobi0::count_zeros(f->f.evaluator(), {tau_re, tau_im}, opts);
    if (count_out) *count_out = rep.count;
    if (json_out) return put_string(jacobi0::to_json(rep), json_out);
    return J0_OK;
  });
}

j0_status j0_filtration_index(const j0_biseries* series, int k, int* admissible,
                              int* index, char** reason_out) {
  if (missing(series) || missing(admissible) || missing(index)) return null_arg();
  return guarded([&] {
    const BiSeriesQ* q = exact_part(series);
    if (!q) {
      set_err("filtration classification needs exact coefficients");
      return J0_EFIELD;
    }
    jacobi0::FiltrationResult fil = jacobi0::filtration_index(*q, k);
    *admissible = fil.admissible ? 1 : 0;
    *index = fil.admissible ? fil.index : 0;
    if (reason_out) return put_string(fil.reason, reason_out);
    return J0_OK;
  });
}

j0_status j0_coeff_relation(const j0_biseries* series, int k, const long* lambdas,
                            int n_lambdas, long* checked, long* violations) {
  if (missing(series) || missing(checked) || missing(violations)) return null_arg();
  if (n_lambdas > 0 && missing(lambdas)) return null_arg();
  return guarded([&] {
    const BiSeriesQ* q = exact_part(series);
    if (!q) {
      set_err("the coefficient relation needs exact coefficients");
      return J0_EFIELD;
    }
    std::vector<long> ls(lambdas, lambdas + (n_lambdas > 0 ? n_lambdas : 0));
    jacobi0::CoeffRelationReport rep = jacobi0::coeff_relation_check(*q, k, ls);
    *checked = rep.checked;
    *violations = static_cast<long>(rep.violations.size());
    return J0_OK;
  });
}

j0_status j0_delta_qexp(int trunc, j0_fracqseries** out) {
  if (missing(out)) return null_arg();
  return guarded([&] {
    *out = new j0_fracqseries{jacobi0::delta_qexp(trunc).series};
    return J0_OK;
  });
}

j0_status j0_embed(const j0_biseries* series, int k, const char* const* lambdas,
                   const char* const* mus, int n, int m, int trunc,
                   char** json_out) {
  if (missing(series) || missing(json_out)) return null_arg();
  if (n < 0 || (n > 0 && (missing(lambdas) || missing(mus)))) return null_arg();
  return guarded([&] {
    const BiSeriesQ* q = exact_part(series);
    if (!q) {
      set_err("embedding needs exact coefficients");
      return J0_EFIELD;
    }
    std::vector<RationalPair> indices;
    indices.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) indices.push_back(pair_arg(lambdas[i], mus[i]));
    jacobi0::EmbedResult res = jacobi0::embed_g(*q, k, indices, m, trunc);

    std::string js = "{\"kind\":\"embed\",\"k\":" + std::to_string(k) +
                     ",\"m\":" + std::to_string(m) +
                     ",\"filtration\":" + std::to_string(res.filtration) +
                     ",\"all_holomorphic\":" +
                     (res.all_holomorphic ? "true" : "false") + ",\"indices\":[";
    for (std::size_t i = 0; i < res.components.size(); ++i) {
      const jacobi0::EmbedComponent& comp = res.components[i];
      if (i) js += ',';
      js += "[\"" + jacobi0::rat_str(comp.X.lambda) + "\",\"" +
            jacobi0::rat_str(comp.X.mu) + "\"]";
    }
    js += "],\"ords\":[";
    for (std::size_t i = 0; i < res.components.size(); ++i) {
      if (i) js += ',';
      const auto& o = res.components[i].ord;
      js += o ? "\"" + jacobi0::rat_str(*o) + "\"" : std::string("null");
    }
    js += "],\"components\":[";
    for (std::size_t i = 0; i < res.components.size(); ++i) {
      if (i) js += ',';
      js += jacobi0::to_json(res.components[i].series);
    }
    js += "]}";
    return put_string(js, json_out);
  });
}

/* ---- verification ----------------------------------------------------- */

j0_status j0_run_suite(const char* name, char** json_out, int* all_pass) {
  if (missing(name)) return null_arg();
  return guarded([&] {
    std::vector<jacobi0::VerifyReport> rs = jacobi0::run_suite(name);
    bool ok = true;
    for (const auto& r : rs) ok = ok && r.pass;
    if (all_pass) *all_pass = ok ? 1 : 0;
    if (json_out) {
      j0_status st = put_string(jacobi0::to_json(rs), json_out);
      if (st != J0_OK) return st;
    }
    if (!ok) {
      set_err("verification suite reported failures");
      return J0_EVERIFY;
    }
    return J0_OK;
  });
}

} /* extern "C" */
