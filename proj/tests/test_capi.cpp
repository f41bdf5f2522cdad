// Exercises the C interface end to end: handle lifecycles, status mapping,
// thread-local error reporting, and the JSON payloads.  Everything here goes
// through jacobi0.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

#include "jacobi0.h"

namespace {

bool contains(const char* hay, const char* needle) {
  return hay && std::strstr(hay, needle) != nullptr;
}

struct StringOut {
  char* p = nullptr;
  ~StringOut() { j0_string_free(p); }
};

}  // namespace

TEST_CASE("version and error channel basics") {
  REQUIRE(j0_version() != nullptr);
  CHECK(std::strlen(j0_version()) >= 5);  // x.y.z
  REQUIRE(j0_last_error() != nullptr);    // never NULL, even before any failure
}

TEST_CASE("sigma series round-trips byte-identically through JSON") {
  j0_biseries* s = nullptr;
  REQUIRE(j0_sigma_series(6, &s) == J0_OK);
  int trunc = -1;
  REQUIRE(j0_biseries_trunc(s, &trunc) == J0_OK);
  CHECK(trunc == 6);

  StringOut j1;
  REQUIRE(j0_biseries_to_json(s, &j1.p) == J0_OK);
  CHECK(contains(j1.p, "\"kind\":\"biseries\""));
  CHECK(contains(j1.p, "\"field\":\"exact\""));

  j0_biseries* s2 = nullptr;
  REQUIRE(j0_biseries_from_json(j1.p, &s2) == J0_OK);
  StringOut j2;
  REQUIRE(j0_biseries_to_json(s2, &j2.p) == J0_OK);
  CHECK(std::string(j1.p) == std::string(j2.p));

  j0_biseries_free(s);
  j0_biseries_free(s2);
}

TEST_CASE("scaling and evaluation through the C layer") {
  j0_biseries* one = nullptr;
  REQUIRE(j0_biseries_one(8, &one) == J0_OK);
  REQUIRE(j0_biseries_scale(one, "3/2") == J0_OK);
  double re = 0, im = 0;
  REQUIRE(j0_biseries_eval(one, 0.0, 2.0, 0.3, 0.0, &re, &im) == J0_OK);
  CHECK(std::abs(re - 1.5) < 1e-14);
  CHECK(std::abs(im) < 1e-14);

  CHECK(j0_biseries_scale(one, "x/y") == J0_EPARSE);
  CHECK(std::strlen(j0_last_error()) > 0);
  j0_biseries_free(one);
}

TEST_CASE("profiles come back as malloc'd arrays") {
  j0_biseries* s = nullptr;
  REQUIRE(j0_sigma_series(5, &s) == J0_OK);
  int* raw = nullptr;
  int* env = nullptr;
  int n_raw = 0, n_env = 0;
  REQUIRE(j0_biseries_profile(s, 0, &raw, &n_raw) == J0_OK);
  REQUIRE(j0_biseries_profile(s, 1, &env, &n_env) == J0_OK);
  REQUIRE(n_raw == 6);
  REQUIRE(n_env == 6);
  for (int i = 0; i < 6; ++i) CHECK(env[i] >= raw[i]);
  for (int i = 1; i < 6; ++i) CHECK(env[i] >= env[i - 1]);
  CHECK(raw[0] == 1);  // row 0 of the generator is 1 - zeta
  j0_array_free(raw);
  j0_array_free(env);
  j0_biseries_free(s);
}

TEST_CASE("field mixing is rejected with J0_EFIELD") {
  j0_biseries* exact = nullptr;
  REQUIRE(j0_sigma_series(4, &exact) == J0_OK);
  const char* cjson =
      "{\"kind\":\"biseries\",\"field\":\"complex\",\"N\":4,"
      "\"terms\":[{\"n\":0,\"r\":0,\"re\":1.0,\"im\":0.0}]}";
  j0_biseries* cplx = nullptr;
  REQUIRE(j0_biseries_from_json(cjson, &cplx) == J0_OK);

  j0_biseries* prod = nullptr;
  CHECK(j0_biseries_mul(exact, cplx, &prod) == J0_EFIELD);
  CHECK(prod == nullptr);

  j0_fracqseries* fx = nullptr;
  CHECK(j0_phi_x_series(cplx, -1, "1/2", "0", &fx) == J0_EFIELD);
  CHECK(std::strlen(j0_last_error()) > 0);

  j0_biseries_free(exact);
  j0_biseries_free(cplx);
}

TEST_CASE("parse and domain failures map to their statuses") {
  j0_biseries* s = nullptr;
  CHECK(j0_biseries_from_json("{", &s) == J0_EPARSE);
  CHECK(j0_biseries_from_json("{\"kind\":\"nope\"}", &s) == J0_EPARSE);

  int sign = 0;
  CHECK(j0_psi("0.5", "0", &sign) == J0_EPARSE);
  REQUIRE(j0_psi("1/2", "0", &sign) == J0_OK);
  CHECK(sign == 1);  // trivial off the integer lattice
  REQUIRE(j0_psi("1", "0", &sign) == J0_OK);
  CHECK(sign == -1);
  REQUIRE(j0_psi("2", "-4", &sign) == J0_OK);
  CHECK(sign == 1);

  double re = 0, im = 0;
  j0_biseries* one = nullptr;
  REQUIRE(j0_biseries_one(4, &one) == J0_OK);
  CHECK(j0_biseries_eval(one, 0.0, -1.0, 0.0, 0.0, &re, &im) == J0_EDOMAIN);
  j0_biseries_free(one);

  CHECK(j0_wzeta(0.0, 1.0, 0.0, 0.0, &re, &im) == J0_EDOMAIN);  // pole at 0
  CHECK(j0_sigma_point(0.0, -2.0, 0.3, 0.0, &re, &im) == J0_EDOMAIN);
}

TEST_CASE("invalid arguments map to J0_EINVAL") {
  j0_form* f = nullptr;
  CHECK(j0_form_builtin("nope", &f) == J0_EINVAL);
  CHECK(f == nullptr);
  CHECK(j0_form_builtin("sigma", nullptr) == J0_EINVAL);
  CHECK(j0_sigma_series(-3, nullptr) == J0_EINVAL);

  char* json = nullptr;
  int all_pass = 7;
  CHECK(j0_run_suite("nope", &json, &all_pass) == J0_EINVAL);
  CHECK(json == nullptr);   // outputs untouched on non-verify failure
  CHECK(all_pass == 7);
}

TEST_CASE("point functions agree with their known values") {
  double re = 0, im = 0;
  REQUIRE(j0_eta1(0.0, 1.0, &re, &im) == J0_OK);
  CHECK(std::abs(re - 3.14159265358979324) < 1e-11);
  CHECK(std::abs(im) < 1e-11);

  REQUIRE(j0_rho(0.0, 1.0, 0.0, 0.0, &re, &im) == J0_OK);
  CHECK(re == 1.0);
  CHECK(im == 0.0);

  double dev = 1;
  REQUIRE(j0_legendre_check(0.25, 1.5, &dev) == J0_OK);
  CHECK(dev < 1e-9);

  REQUIRE(j0_eta_point("1", "0", 0.5, 1.0, &re, &im) == J0_OK);
  double r1 = 0, i1 = 0;
  REQUIRE(j0_eta1(0.5, 1.0, &r1, &i1) == J0_OK);
  // eta(tau) = tau eta(1) - 2 pi i
  double er = 0.5 * r1 - 1.0 * i1;
  double ei = 0.5 * i1 + 1.0 * r1 - 2 * 3.14159265358979324;
  CHECK(std::abs(re - er) < 1e-10);
  CHECK(std::abs(im - ei) < 1e-10);
}

TEST_CASE("forms compose and transform through the C layer") {
  j0_form* sigma = nullptr;
  REQUIRE(j0_form_builtin("sigma", &sigma) == J0_OK);
  int w = 0;
  REQUIRE(j0_form_weight(sigma, &w) == J0_OK);
  CHECK(w == -1);

  j0_form* s2 = nullptr;
  REQUIRE(j0_form_mul(sigma, sigma, &s2) == J0_OK);
  REQUIRE(j0_form_weight(s2, &w) == J0_OK);
  CHECK(w == -2);

  double pr = 0, pi_ = 0, tr = 0, ti = 0;
  REQUIRE(j0_form_eval(sigma, 0.0, 1.0, 0.3, 0.1, &pr, &pi_) == J0_OK);
  // |' invariance under the inversion for the weight -1 generator
  REQUIRE(j0_form_slash_prime_eval(sigma, 0, -1, 1, 0, 0.0, 1.0, 0.3, 0.1, &tr, &ti) ==
          J0_OK);
  CHECK(std::abs(tr - pr) < 1e-9);
  CHECK(std::abs(ti - pi_) < 1e-9);
  // |'' invariance at an integral pair
  REQUIRE(j0_form_slash_dprime_eval(sigma, "1", "0", 0.0, 1.0, 0.3, 0.1, &tr, &ti) ==
          J0_OK);
  CHECK(std::abs(tr - pr) < 1e-9);
  CHECK(std::abs(ti - pi_) < 1e-9);

  j0_biseries* ser = nullptr;
  REQUIRE(j0_form_series(s2, 6, &ser) == J0_OK);
  StringOut js;
  REQUIRE(j0_biseries_to_json(ser, &js.p) == J0_OK);
  CHECK(contains(js.p, "\"field\":\"exact\""));

  double xr = 0, xi = 0;
  REQUIRE(j0_form_phi_x_point(sigma, "1/2", "0", 0.0, 1.2, &xr, &xi) == J0_OK);
  CHECK(std::hypot(xr, xi) > 0);

  j0_biseries_free(ser);
  j0_form_free(s2);
  j0_form_free(sigma);
}

TEST_CASE("klein expansion order comes back in lowest terms") {
  j0_fracqseries* kq = nullptr;
  REQUIRE(j0_klein_qexp("1/2", "0", 8, &kq) == J0_OK);
  int is_zero = 1;
  long num = 0, den = 0;
  REQUIRE(j0_fracq_ord(kq, 1e-9, &is_zero, &num, &den) == J0_OK);
  CHECK(is_zero == 0);
  CHECK(num == -1);
  CHECK(den == 8);

  StringOut js;
  REQUIRE(j0_fracq_to_json(kq, &js.p) == J0_OK);
  CHECK(contains(js.p, "\"kind\":\"fracqseries\""));
  j0_fracqseries* back = nullptr;
  REQUIRE(j0_fracq_from_json(js.p, &back) == J0_OK);
  StringOut js2;
  REQUIRE(j0_fracq_to_json(back, &js2.p) == J0_OK);
  CHECK(std::string(js.p) == std::string(js2.p));

  j0_fracqseries* zq = nullptr;
  REQUIRE(j0_klein_qexp("1", "0", 8, &zq) == J0_OK);  // integral: flagged zero
  REQUIRE(j0_fracq_ord(zq, 1e-9, &is_zero, &num, &den) == J0_OK);
  CHECK(is_zero == 1);

  j0_fracq_free(kq);
  j0_fracq_free(back);
  j0_fracq_free(zq);
}

TEST_CASE("subgroup membership over the C layer") {
  int member = -1;
  REQUIRE(j0_subgroup_member("1/2", "0", -1, 1, 8, 0, 1, &member) == J0_OK);
  CHECK(member == 1);
  REQUIRE(j0_subgroup_member("1/2", "0", -1, 9, 8, 64, 57, &member) == J0_OK);
  CHECK(member == 1);
  REQUIRE(j0_subgroup_member("1/2", "0", -1, 1, 1, 0, 1, &member) == J0_OK);
  CHECK(member == 0);
  REQUIRE(j0_subgroup_member("1/2", "0", -1, 0, 1, -1, 0, &member) == J0_OK);
  CHECK(member == 0);
  CHECK(j0_subgroup_member("1/2", "0", -1, 2, 0, 0, 1, &member) == J0_EINVAL);  // det 1 required
}

TEST_CASE("translation ratio and the embedding report") {
  j0_biseries* s = nullptr;
  // the unreduced index (3/2, 0) drags the faithful window down by about
  // (3/2) rho(N), so the ratio needs a reasonably wide series
  REQUIRE(j0_sigma_series(14, &s) == J0_OK);

  double xr = 0, xi = 0, gd = 1, ud = 1;
  long order = 0;
  REQUIRE(j0_translation_ratio(s, -1, "3/2", "0", "1/2", "0", &xr, &xi, &gd, &ud,
                               &order) == J0_OK);
  CHECK(std::abs(xr + 1.0) < 1e-9);
  CHECK(std::abs(xi) < 1e-9);
  CHECK(gd < 1e-9);
  CHECK(ud < 1e-9);
  CHECK(order == 2);
  j0_biseries_free(s);

  j0_biseries* s16 = nullptr;
  REQUIRE(j0_sigma_series(16, &s16) == J0_OK);
  const char* ls[] = {"1/2", "1/3"};
  const char* ms[] = {"1/2", "2/3"};
  StringOut js;
  REQUIRE(j0_embed(s16, -1, ls, ms, 2, 2, 16, &js.p) == J0_OK);
  CHECK(contains(js.p, "\"filtration\":2"));
  CHECK(contains(js.p, "\"all_holomorphic\":true"));
  CHECK(contains(js.p, "\"15/8\""));
  CHECK(contains(js.p, "\"17/9\""));

  // window too small to certify the filtration
  j0_biseries* tiny = nullptr;
  REQUIRE(j0_biseries_one(0, &tiny) == J0_OK);
  const char* l1[] = {"1/2"};
  const char* m1[] = {"1/2"};
  char* out = nullptr;
  CHECK(j0_embed(tiny, 0, l1, m1, 1, 2, 12, &out) == J0_EWINDOW);
  CHECK(out == nullptr);
  j0_biseries_free(tiny);
  j0_biseries_free(s16);
}

TEST_CASE("zero counting over the C layer") {
  j0_form* sigma = nullptr;
  REQUIRE(j0_form_builtin("sigma", &sigma) == J0_OK);
  StringOut js;
  long count = -1;
  double nan = std::nan("");
  REQUIRE(j0_count_zeros(sigma, 0.0, 1.0, nan, nan, &js.p, &count) == J0_OK);
  CHECK(count == 1);
  CHECK(contains(js.p, "\"count\":1"));
  CHECK(j0_count_zeros(sigma, 0.0, -1.0, nan, nan, nullptr, &count) == J0_EDOMAIN);
  j0_form_free(sigma);
}

TEST_CASE("classification and the coefficient relation over the C layer") {
  j0_biseries* s = nullptr;
  REQUIRE(j0_sigma_series(10, &s) == J0_OK);
  int admissible = 0, index = 0;
  char* reason = nullptr;
  REQUIRE(j0_filtration_index(s, -1, &admissible, &index, &reason) == J0_OK);
  CHECK(admissible == 1);
  CHECK(index == 2);
  j0_string_free(reason);

  long lambdas[] = {-2, -1, 1, 2};
  long checked = 0, violations = -1;
  REQUIRE(j0_coeff_relation(s, -1, lambdas, 4, &checked, &violations) == J0_OK);
  CHECK(checked > 0);
  CHECK(violations == 0);
  j0_biseries_free(s);
}

TEST_CASE("normalized discriminant expansion over the C layer") {
  j0_fracqseries* d = nullptr;
  REQUIRE(j0_delta_qexp(10, &d) == J0_OK);
  StringOut js;
  REQUIRE(j0_fracq_to_json(d, &js.p) == J0_OK);
  CHECK(contains(js.p, "\"D\":1"));
  double re = 0, im = 0;
  REQUIRE(j0_fracq_eval(d, 0.0, 1.0, &re, &im) == J0_OK);
  CHECK(re > 1e-4);
  CHECK(std::abs(im) < 1e-12);
  j0_fracq_free(d);
}

TEST_CASE("verification suite runs green end to end") {
  StringOut js;
  int all_pass = 0;
  REQUIRE(j0_run_suite("legendre", &js.p, &all_pass) == J0_OK);
  CHECK(all_pass == 1);
  CHECK(contains(js.p, "\"pass\":true"));
  CHECK(contains(js.p, "\"identity\""));
}

TEST_CASE("error messages stay thread-local") {
  bool a_ok = false, b_ok = false;
  std::thread ta([&] {
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
      j0_biseries* s = nullptr;
      ok = ok && j0_biseries_from_json("{", &s) == J0_EPARSE;
      ok = ok && std::strstr(j0_last_error(), "null argument") == nullptr;
    }
    a_ok = ok;
  });
  std::thread tb([&] {
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
      ok = ok && j0_sigma_series(4, nullptr) == J0_EINVAL;
      ok = ok && std::strcmp(j0_last_error(), "null argument") == 0;
    }
    b_ok = ok;
  });
  ta.join();
  tb.join();
  CHECK(a_ok);
  CHECK(b_ok);
}

TEST_CASE("destructors tolerate NULL") {
  j0_biseries_free(nullptr);
  j0_fracq_free(nullptr);
  j0_form_free(nullptr);
  j0_string_free(nullptr);
  j0_array_free(nullptr);
  CHECK(true);
}
