// jacobi0 command-line tool.  Talks to the library exclusively through the C
// interface; everything here is argument plumbing and output shaping.
//
// Exit codes: 0 success / all checks pass, 1 verification or computation
// failure, 2 usage errors (bad flags, malformed literals, unknown names).
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jacobi0.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail_usage(const std::string& msg) { throw UsageError(msg); }
[[noreturn]] void fail_run(const std::string& msg) { throw RunError(msg); }

// Library errors at argument-parsing level are usage errors; everything else
// is a runtime failure.
void check(j0_status st, const char* what) {
  if (st == J0_OK) return;
  std::string msg = std::string(what) + ": " + j0_last_error();
  if (st == J0_EPARSE || st == J0_EINVAL) fail_usage(msg);
  fail_run(msg);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  j0_string_free(s);
  return out;
}

// %.17g with normalized -0, matching the library's JSON float convention.
std::string fmt17(double x) {
  if (x == 0.0) x = 0.0;  // flush -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// "a+bi" with decimal components; also accepts "a", "bi", "i", "-i".
std::complex<double> parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail_usage("empty complex literal");

  auto to_double = [&](std::string t, double bare) -> double {
    if (t.empty() || t == "+") return bare;
    if (t == "-") return -bare;
    try {
      std::size_t used = 0;
      double v = std::stod(t, &used);
      if (used != t.size()) fail_usage("malformed complex literal '" + raw + "'");
      return v;
    } catch (const std::logic_error&) {
      fail_usage("malformed complex literal '" + raw + "'");
    }
  };

  if (s.back() == 'i' || s.back() == 'I') {
    std::string body = s.substr(0, s.size() - 1);
    // Split at the last top-level +/-, skipping exponent signs and index 0.
    for (std::size_t i = body.size(); i-- > 1;) {
      char c = body[i];
      if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        return {to_double(body.substr(0, i), 0.0),
                to_double(body.substr(i), 1.0)};
      }
    }
    return {0.0, to_double(body, 1.0)};
  }
  return {to_double(s, 0.0), 0.0};
}

// "l,m" -> two exact rational literals (validated downstream by the library).
std::pair<std::string, std::string> split_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    fail_usage("expected an index pair 'lambda,mu', got '" + s + "'");
  return {s.substr(0, comma), s.substr(comma + 1)};
}

std::array<long, 4> parse_matrix(const std::string& s) {
  std::array<long, 4> m{};
  std::stringstream ss(s);
  std::string part;
  for (int i = 0; i < 4; ++i) {
    if (!std::getline(ss, part, ',')) fail_usage("matrix needs four entries 'a,b,c,d'");
    try {
      std::size_t used = 0;
      m[static_cast<std::size_t>(i)] = std::stol(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      fail_usage("malformed matrix entry '" + part + "'");
    }
  }
  if (ss.rdbuf()->in_avail() > 0) fail_usage("matrix needs exactly four entries");
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_usage("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- output shaping ----------------------------------------------------

void emit(const std::string& text) { std::cout << text << "\n"; }

std::string csv_from_series_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string out;
  if (j.at("kind") == "biseries") {
    bool exact = j.at("field") == "exact";
    out = exact ? "n,r,num,den\n" : "n,r,re,im\n";
    for (const auto& t : j.at("terms")) {
      out += std::to_string(t.at("n").get<long>()) + ',' +
             std::to_string(t.at("r").get<long>()) + ',';
      if (exact)
        out += t.at("num").get<std::string>() + ',' + t.at("den").get<std::string>();
      else
        out += fmt17(t.at("re").get<double>()) + ',' + fmt17(t.at("im").get<double>());
      out += '\n';
    }
  } else if (j.at("kind") == "fracqseries") {
    out = "e,D,re,im\n";
    long D = j.at("D").get<long>();
    for (const auto& t : j.at("terms"))
      out += std::to_string(t.at("e").get<long>()) + ',' + std::to_string(D) + ',' +
             fmt17(t.at("re").get<double>()) + ',' + fmt17(t.at("im").get<double>()) +
             '\n';
  } else {
    fail_run("no CSV form for this document");
  }
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

std::string pretty_from_series_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string out;
  if (j.at("kind") == "biseries") {
    bool exact = j.at("field") == "exact";
    out += "biseries (" + j.at("field").get<std::string>() +
           "), N = " + std::to_string(j.at("N").get<long>()) + "\n";
    const auto& terms = j.at("terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& t = terms[i];
      long n = t.at("n").get<long>();
      if (i == 0 || terms[i - 1].at("n").get<long>() != n)
        out += "q^" + std::to_string(n) + ":";
      out += "  ";
      if (exact) {
        out += t.at("num").get<std::string>();
        std::string den = t.at("den").get<std::string>();
        if (den != "1") out += "/" + den;
      } else {
        out += "(" + fmt17(t.at("re").get<double>()) + "," +
               fmt17(t.at("im").get<double>()) + ")";
      }
      long r = t.at("r").get<long>();
      if (r != 0) out += " z^" + std::to_string(r);
      if (i + 1 == terms.size() || terms[i + 1].at("n").get<long>() != n)
        out += "\n";
    }
    if (!out.empty() && out.back() == '\n') out.pop_back();
    return out;
  }
  if (j.at("kind") == "fracqseries") {
    long D = j.at("D").get<long>();
    out += "fracqseries, exponents in (1/" + std::to_string(D) + ")Z\n";
    for (const auto& t : j.at("terms")) {
      out += "q^(" + std::to_string(t.at("e").get<long>()) + "/" + std::to_string(D) +
             "): (" + fmt17(t.at("re").get<double>()) + "," +
             fmt17(t.at("im").get<double>()) + ")\n";
    }
    if (!out.empty() && out.back() == '\n') out.pop_back();
    return out;
  }
  fail_run("no pretty form for this document");
}

void emit_series(const std::string& json_text, const std::string& output) {
  if (output == "json")
    emit(json_text);
  else if (output == "csv")
    emit(csv_from_series_json(json_text));
  else
    emit(pretty_from_series_json(json_text));
}

std::string csv_from_reports(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string out = "identity,max_abs_deviation,samples,pass,tolerance\n";
  for (const auto& r : j)
    out += r.at("identity").get<std::string>() + ',' +
           fmt17(r.at("max_abs_deviation").get<double>()) + ',' +
           std::to_string(r.at("samples").get<long>()) + ',' +
           (r.at("pass").get<bool>() ? "true" : "false") + ',' +
           fmt17(r.at("tolerance").get<double>()) + '\n';
  out.pop_back();
  return out;
}

std::string pretty_from_reports(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string out;
  for (const auto& r : j) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-34s dev %-12.3g n=%-5ld tol %-8.1g %s",
                  r.at("identity").get<std::string>().c_str(),
                  r.at("max_abs_deviation").get<double>(),
                  r.at("samples").get<long>(),
                  r.at("tolerance").get<double>(),
                  r.at("pass").get<bool>() ? "PASS" : "FAIL");
    out += line;
    out += '\n';
  }
  if (!out.empty()) out.pop_back();
  return out;
}

// ---- handle guards -------------------------------------------------------

struct BiSeriesHandle {
  j0_biseries* p = nullptr;
  ~BiSeriesHandle() { j0_biseries_free(p); }
};
struct FracQHandle {
  j0_fracqseries* p = nullptr;
  ~FracQHandle() { j0_fracq_free(p); }
};
struct FormHandle {
  j0_form* p = nullptr;
  ~FormHandle() { j0_form_free(p); }
};

// "sigma", "one", or "sigma^m".
void make_form(const std::string& spec, FormHandle& out) {
  std::string base = spec;
  int power = 1;
  auto caret = spec.find('^');
  if (caret != std::string::npos) {
    base = spec.substr(0, caret);
    try {
      power = std::stoi(spec.substr(caret + 1));
    } catch (const std::logic_error&) {
      fail_usage("malformed form power in '" + spec + "'");
    }
    if (power < 1) fail_usage("form power must be >= 1");
  }
  check(j0_form_builtin(base.c_str(), &out.p), "form");
  if (power > 1) {
    FormHandle base_form;
    check(j0_form_builtin(base.c_str(), &base_form.p), "form");
    for (int i = 1; i < power; ++i) {
      j0_form* next = nullptr;
      check(j0_form_mul(out.p, base_form.p, &next), "form");
      j0_form_free(out.p);
      out.p = next;
    }
  }
}

// ---- shared command state ------------------------------------------------

struct Config {
  int trunc = 12;
  double tol = 1e-9;
  std::string tau;
  std::string z = "0";
  std::vector<std::string> X;
  std::string matrix;
  std::string grid = "default";
  std::string output = "json";
  std::string suite;
  std::string form = "sigma";
  std::string input;
  int k = 0;
  bool k_set = false;
  int m = 0;
  std::string z0;
  bool allow_small_im = false;
};

void require_grid(const Config& c) {
  if (c.grid != "default") fail_usage("unknown grid '" + c.grid + "'");
}

std::complex<double> require_tau(const Config& c) {
  if (c.tau.empty()) fail_usage("--tau is required");
  std::complex<double> tau = parse_complex(c.tau);
  if (!(tau.imag() > 0)) fail_usage("Im tau must be positive");
  return tau;
}

// Loads --input as either series document; returns which kind was read.
enum class DocKind { biseries, fracq };
DocKind load_series(const std::string& path, BiSeriesHandle& bs, FracQHandle& fq) {
  std::string text = read_file(path);
  if (j0_biseries_from_json(text.c_str(), &bs.p) == J0_OK) return DocKind::biseries;
  if (j0_fracq_from_json(text.c_str(), &fq.p) == J0_OK) return DocKind::fracq;
  fail_usage("'" + path + "' is not a recognized series document: " +
             j0_last_error());
}

// ---- commands --------------------------------------------------------------

int cmd_expand(const Config& c, const std::string& what) {
  if (c.trunc < 1) fail_usage("--trunc must be >= 1");
  if (what == "sigma" || what == "one") {
    BiSeriesHandle s;
    check(what == "sigma" ? j0_sigma_series(c.trunc, &s.p)
                          : j0_biseries_one(c.trunc, &s.p),
          "expand");
    char* js = nullptr;
    check(j0_biseries_to_json(s.p, &js), "expand");
    emit_series(take_string(js), c.output);
    return kExitOk;
  }
  if (what == "delta") {
    FracQHandle s;
    check(j0_delta_qexp(c.trunc, &s.p), "expand");
    char* js = nullptr;
    check(j0_fracq_to_json(s.p, &js), "expand");
    emit_series(take_string(js), c.output);
    return kExitOk;
  }
  fail_usage("unknown expansion '" + what + "' (sigma, one, delta)");
}

int cmd_eval(const Config& c) {
  std::complex<double> tau = require_tau(c);
  std::complex<double> z = parse_complex(c.z);
  double re = 0, im = 0;

  if (!c.input.empty()) {
    // Truncated-series evaluation: guarded tail policy.
    if (tau.imag() < 0.5 && !c.allow_small_im)
      fail_usage("series evaluation needs Im tau >= 0.5 (pass --allow-small-im to override)");
    BiSeriesHandle bs;
    FracQHandle fq;
    if (load_series(c.input, bs, fq) == DocKind::biseries)
      check(j0_biseries_eval(bs.p, tau.real(), tau.imag(), z.real(), z.imag(), &re,
                             &im),
            "eval");
    else
      check(j0_fracq_eval(fq.p, tau.real(), tau.imag(), &re, &im), "eval");
  } else {
    FormHandle f;
    make_form(c.form, f);
    if (!c.matrix.empty() && !c.X.empty())
      fail_usage("--matrix and --X are mutually exclusive for eval");
    if (!c.matrix.empty()) {
      auto M = parse_matrix(c.matrix);
      check(j0_form_slash_prime_eval(f.p, M[0], M[1], M[2], M[3], tau.real(),
                                     tau.imag(), z.real(), z.imag(), &re, &im),
            "eval");
    } else if (!c.X.empty()) {
      if (c.X.size() != 1) fail_usage("eval takes one --X");
      auto [l, m] = split_pair(c.X[0]);
      check(j0_form_slash_dprime_eval(f.p, l.c_str(), m.c_str(), tau.real(),
                                      tau.imag(), z.real(), z.imag(), &re, &im),
            "eval");
    } else {
      check(j0_form_eval(f.p, tau.real(), tau.imag(), z.real(), z.imag(), &re, &im),
            "eval");
    }
  }

  std::string js = "{\"kind\":\"value\",\"tau\":[" + fmt17(tau.real()) + "," +
                   fmt17(tau.imag()) + "],\"z\":[" + fmt17(z.real()) + "," +
                   fmt17(z.imag()) + "],\"value\":[" + fmt17(re) + "," + fmt17(im) +
                   "]}";
  if (c.output == "json")
    emit(js);
  else
    emit(fmt17(re) + (im < 0 ? " - " : " + ") + fmt17(std::fabs(im)) + "i");
  return kExitOk;
}

int cmd_klein(const Config& c) {
  if (c.X.size() != 1) fail_usage("klein needs exactly one --X 'lambda,mu'");
  auto [l, m] = split_pair(c.X[0]);

  if (!c.tau.empty()) {
    std::complex<double> tau = require_tau(c);
    double re = 0, im = 0;
    check(j0_klein_eval(l.c_str(), m.c_str(), tau.real(), tau.imag(), &re, &im),
          "klein");
    emit("{\"kind\":\"value\",\"X\":[\"" + l + "\",\"" + m + "\"],\"tau\":[" +
         fmt17(tau.real()) + "," + fmt17(tau.imag()) + "],\"value\":[" + fmt17(re) +
         "," + fmt17(im) + "]}");
    return kExitOk;
  }

  if (c.trunc < 1) fail_usage("--trunc must be >= 1");
  FracQHandle s;
  check(j0_klein_qexp(l.c_str(), m.c_str(), c.trunc, &s.p), "klein");
  char* js = nullptr;
  check(j0_fracq_to_json(s.p, &js), "klein");
  emit_series(take_string(js), c.output);
  return kExitOk;
}

int cmd_phix(const Config& c) {
  if (c.X.size() != 1) fail_usage("phix needs exactly one --X 'lambda,mu'");
  auto [l, m] = split_pair(c.X[0]);

  if (!c.tau.empty()) {
    // Point route through the slash action; works at any Im tau > 0.
    std::complex<double> tau = require_tau(c);
    FormHandle f;
    make_form(c.form, f);
    double re = 0, im = 0;
    check(j0_form_phi_x_point(f.p, l.c_str(), m.c_str(), tau.real(), tau.imag(),
                              &re, &im),
          "phix");
    emit("{\"kind\":\"value\",\"X\":[\"" + l + "\",\"" + m + "\"],\"tau\":[" +
         fmt17(tau.real()) + "," + fmt17(tau.imag()) + "],\"value\":[" + fmt17(re) +
         "," + fmt17(im) + "]}");
    return kExitOk;
  }

  if (c.trunc < 1) fail_usage("--trunc must be >= 1");
  BiSeriesHandle bs;
  int k = 0;
  if (!c.input.empty()) {
    FracQHandle fq;
    if (load_series(c.input, bs, fq) != DocKind::biseries)
      fail_usage("phix needs a biseries input");
    if (!c.k_set) fail_usage("--k is required with --input");
    k = c.k;
  } else {
    FormHandle f;
    make_form(c.form, f);
    check(j0_form_series(f.p, c.trunc, &bs.p), "phix");
    check(j0_form_weight(f.p, &k), "phix");
  }
  FracQHandle out;
  check(j0_phi_x_series(bs.p, k, l.c_str(), m.c_str(), &out.p), "phix");
  char* js = nullptr;
  check(j0_fracq_to_json(out.p, &js), "phix");
  emit_series(take_string(js), c.output);
  return kExitOk;
}

int cmd_verify(const Config& c, std::string suite) {
  require_grid(c);
  if (!c.suite.empty()) suite = c.suite;
  if (suite.empty()) suite = "all";
  char* js = nullptr;
  int all_pass = 0;
  j0_status st = j0_run_suite(suite.c_str(), &js, &all_pass);
  if (st != J0_OK && st != J0_EVERIFY)
    check(st, "verify");  // unknown suite and friends -> usage error
  std::string text = take_string(js);
  if (c.output == "json")
    emit(text);
  else if (c.output == "csv")
    emit(csv_from_reports(text));
  else
    emit(pretty_from_reports(text));
  return all_pass ? kExitOk : kExitFail;
}

int cmd_zeros(const Config& c) {
  std::complex<double> tau = require_tau(c);
  FormHandle f;
  make_form(c.form, f);
  double z0_re = std::nan(""), z0_im = std::nan("");
  if (!c.z0.empty()) {
    std::complex<double> z0 = parse_complex(c.z0);
    z0_re = z0.real();
    z0_im = z0.imag();
  }
  char* js = nullptr;
  long count = 0;
  check(j0_count_zeros(f.p, tau.real(), tau.imag(), z0_re, z0_im, &js, &count),
        "zeros");
  emit(take_string(js));
  return kExitOk;
}

int cmd_classify(const Config& c) {
  BiSeriesHandle bs;
  int k = 0;
  if (!c.input.empty()) {
    FracQHandle fq;
    if (load_series(c.input, bs, fq) != DocKind::biseries)
      fail_usage("classify needs a biseries input");
    if (!c.k_set) fail_usage("--k is required with --input");
    k = c.k;
  } else {
    if (c.trunc < 1) fail_usage("--trunc must be >= 1");
    FormHandle f;
    make_form(c.form, f);
    check(j0_form_series(f.p, c.trunc, &bs.p), "classify");
    check(j0_form_weight(f.p, &k), "classify");
  }
  int admissible = 0, index = 0;
  char* reason = nullptr;
  check(j0_filtration_index(bs.p, k, &admissible, &index, &reason), "classify");
  std::string why = take_string(reason);
  std::string js = "{\"kind\":\"filtration\",\"k\":" + std::to_string(k) +
                   ",\"admissible\":" + (admissible ? "true" : "false");
  if (admissible)
    js += ",\"index\":" + std::to_string(index);
  else
    js += ",\"reason\":\"" + why + "\"";
  js += "}";
  emit(js);
  return admissible ? kExitOk : kExitFail;
}

int cmd_embed(const Config& c) {
  if (c.X.empty()) fail_usage("embed needs --X 'lambda,mu' (repeat per component)");
  if (c.trunc < 1) fail_usage("--trunc must be >= 1");
  BiSeriesHandle bs;
  int k = 0;
  if (!c.input.empty()) {
    FracQHandle fq;
    if (load_series(c.input, bs, fq) != DocKind::biseries)
      fail_usage("embed needs a biseries input");
    if (!c.k_set) fail_usage("--k is required with --input");
    k = c.k;
  } else {
    FormHandle f;
    make_form(c.form, f);
    check(j0_form_series(f.p, c.trunc, &bs.p), "embed");
    check(j0_form_weight(f.p, &k), "embed");
  }
  std::vector<std::string> ls, ms;
  std::vector<const char*> lp, mp;
  for (const auto& x : c.X) {
    auto [l, m] = split_pair(x);
    ls.push_back(l);
    ms.push_back(m);
  }
  for (std::size_t i = 0; i < ls.size(); ++i) {
    lp.push_back(ls[i].c_str());
    mp.push_back(ms[i].c_str());
  }
  int m = c.m > 0 ? c.m : 1;
  char* js = nullptr;
  j0_status st = j0_embed(bs.p, k, lp.data(), mp.data(),
                          static_cast<int>(lp.size()), m, c.trunc, &js);
  if (st == J0_EWINDOW) fail_run(std::string("embed: ") + j0_last_error());
  check(st, "embed");
  emit(take_string(js));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modified Jacobi forms of index zero: expansions, evaluation, "
               "verification suites, zero counting, classification, embedding"};
  app.require_subcommand(1);
  Config cfg;

  if (const char* env = std::getenv("JACOBI0_PRECISION")) {
    try {
      cfg.tol = std::stod(env);
    } catch (const std::logic_error&) {
      std::cerr << "error: JACOBI0_PRECISION is not a number\n";
      return kExitUsage;
    }
    if (!(cfg.tol > 0)) {
      std::cerr << "error: JACOBI0_PRECISION must be positive\n";
      return kExitUsage;
    }
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--trunc", cfg.trunc, "truncation order");
    sub->add_option("--tol", cfg.tol, "tolerance for comparisons");
    sub->add_option("--output", cfg.output, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
  };

  std::string expand_what = "sigma";
  CLI::App* expand = app.add_subcommand("expand", "print a normalized expansion");
  expand->add_option("what", expand_what, "sigma, one, or delta");
  add_common(expand);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a form or series document");
  add_common(eval);
  eval->add_option("--form", cfg.form, "builtin form: sigma, one, sigma^m");
  eval->add_option("--input", cfg.input, "series document (JSON)");
  eval->add_option("--tau", cfg.tau, "tau as 'a+bi'");
  eval->add_option("--z", cfg.z, "z as 'a+bi'");
  eval->add_option("--matrix", cfg.matrix, "weight-k slash by 'a,b,c,d'");
  eval->add_option("--X", cfg.X, "index pair 'lambda,mu' for the dprime slash");
  eval->add_flag("--allow-small-im", cfg.allow_small_im,
                 "evaluate truncated series below Im tau = 0.5");

  CLI::App* klein = app.add_subcommand("klein", "Klein form values and expansions");
  add_common(klein);
  klein->add_option("--X", cfg.X, "index pair 'lambda,mu'")->required();
  klein->add_option("--tau", cfg.tau, "point mode when given");

  CLI::App* phix = app.add_subcommand("phix", "specialize phi_X");
  add_common(phix);
  phix->add_option("--X", cfg.X, "index pair 'lambda,mu'")->required();
  phix->add_option("--form", cfg.form, "builtin form");
  phix->add_option("--input", cfg.input, "biseries document (JSON)");
  phix->add_option("--k", cfg.k, "weight of the input series")
      ->each([&](const std::string&) { cfg.k_set = true; });
  phix->add_option("--tau", cfg.tau, "point mode when given");

  std::string verify_suite;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("name", verify_suite, "suite name or 'all'");
  verify->add_option("--suite", cfg.suite, "suite name (overrides positional)");
  verify->add_option("--grid", cfg.grid, "sample grid (only 'default')");

  CLI::App* zeros = app.add_subcommand("zeros", "argument-principle zero count");
  add_common(zeros);
  zeros->add_option("--form", cfg.form, "builtin form: sigma, one, sigma^m");
  zeros->add_option("--tau", cfg.tau, "tau as 'a+bi'")->required();
  zeros->add_option("--z0", cfg.z0, "contour corner override");

  CLI::App* classify = app.add_subcommand("classify", "filtration index");
  add_common(classify);
  classify->add_option("--form", cfg.form, "builtin form");
  classify->add_option("--input", cfg.input, "biseries document (JSON)");
  classify->add_option("--k", cfg.k, "weight of the input series")
      ->each([&](const std::string&) { cfg.k_set = true; });

  CLI::App* embed = app.add_subcommand("embed", "phi_X Delta^m components");
  add_common(embed);
  embed->add_option("--form", cfg.form, "builtin form");
  embed->add_option("--input", cfg.input, "biseries document (JSON)");
  embed->add_option("--k", cfg.k, "weight of the input series")
      ->each([&](const std::string&) { cfg.k_set = true; });
  embed->add_option("--X", cfg.X, "index pair, repeat per component");
  embed->add_option("--m", cfg.m, "Delta power (default: 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!(cfg.tol > 0)) fail_usage("tolerance must be positive");
    if (expand->parsed()) return cmd_expand(cfg, expand_what);
    if (eval->parsed()) return cmd_eval(cfg);
    if (klein->parsed()) return cmd_klein(cfg);
    if (phix->parsed()) return cmd_phix(cfg);
    if (verify->parsed()) return cmd_verify(cfg, verify_suite);
    if (zeros->parsed()) return cmd_zeros(cfg);
    if (classify->parsed()) return cmd_classify(cfg);
    if (embed->parsed()) return cmd_embed(cfg);
    fail_usage("no command");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RunError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
