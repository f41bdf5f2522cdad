#include "jacobi0/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jacobi0 {

std::string fmt_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value in output");
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_complex_pair(Complex z) {
  return "[" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + "]";
}

std::string to_json(const BiSeriesQ& s) {
  std::ostringstream out;
  out << "{\"kind\":\"biseries\",\"field\":\"exact\",\"N\":" << s.trunc() << ",\"terms\":[";
  bool first = true;
  for (const auto& [n, row] : s.rows()) {
    for (const auto& [r, c] : row) {
      if (!first) out << ",";
      first = false;
      out << "{\"n\":" << n << ",\"r\":" << r << ",\"num\":\"" << c.get_num().get_str()
          << "\",\"den\":\"" << c.get_den().get_str() << "\"}";
    }
  }
  out << "]}";
  return out.str();
}

std::string to_json(const BiSeriesC& s) {
  std::ostringstream out;
  out << "{\"kind\":\"biseries\",\"field\":\"complex\",\"N\":" << s.trunc() << ",\"terms\":[";
  bool first = true;
  for (const auto& [n, row] : s.rows()) {
    for (const auto& [r, c] : row) {
      if (!first) out << ",";
      first = false;
      out << "{\"n\":" << n << ",\"r\":" << r << ",\"re\":" << fmt_double(c.real())
          << ",\"im\":" << fmt_double(c.imag()) << "}";
    }
  }
  out << "]}";
  return out.str();
}

std::string to_json(const FracQSeries& s) {
  std::ostringstream out;
  out << "{\"kind\":\"fracqseries\",\"D\":" << s.den() << ",\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (!first) out << ",";
    first = false;
    out << "{\"e\":" << e << ",\"re\":" << fmt_double(c.real()) << ",\"im\":"
        << fmt_double(c.imag()) << "}";
  }
  out << "]}";
  return out.str();
}

std::string to_json(const VerifyReport& r) {
  std::ostringstream out;
  out << "{\"identity\":\"" << r.identity << "\",\"max_abs_deviation\":"
      << fmt_double(r.max_abs_deviation) << ",\"samples\":" << r.samples
      << ",\"pass\":" << (r.pass ? "true" : "false") << ",\"tolerance\":"
      << fmt_double(r.tolerance) << "}";
  return out.str();
}

std::string to_json(const std::vector<VerifyReport>& rs) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out << ",";
    out << to_json(rs[i]);
  }
  out << "]";
  return out.str();
}

std::string to_json(const ZeroCountReport& r) {
  std::ostringstream out;
  out << "{\"tau0\":" << fmt_complex_pair(r.tau0) << ",\"z0\":" << fmt_complex_pair(r.z0)
      << ",\"integral\":" << fmt_complex_pair(r.integral) << ",\"count\":" << r.count
      << ",\"residual\":" << fmt_double(r.residual) << ",\"retries\":" << r.retries << "}";
  return out.str();
}

namespace {

using nlohmann::json;

json parse_strict(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

double get_num(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw std::invalid_argument(std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}

std::string get_str(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw std::invalid_argument(std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

}  // namespace

ParsedBiSeries biseries_from_json(const std::string& text) {
  json j = parse_strict(text);
  if (!j.is_object() || get_str(j, "kind") != "biseries")
    throw std::invalid_argument("not a biseries document");
  std::string field = get_str(j, "field");
  int N = get_int(j, "N");
  if (N < 0) throw std::invalid_argument("negative truncation order");
  if (!j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("missing terms array");

  if (field == "exact") {
    BiSeriesQ s(N);
    for (const auto& t : j["terms"]) {
      int n = get_int(t, "n");
      int r = get_int(t, "r");
      Rat num = parse_rat(get_str(t, "num"));
      Rat den = parse_rat(get_str(t, "den"));
      if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
      s.add(n, r, num / den);
    }
    return s;
  }
  if (field == "complex") {
    BiSeriesC s(N);
    for (const auto& t : j["terms"])
      s.add(get_int(t, "n"), get_int(t, "r"), Complex{get_num(t, "re"), get_num(t, "im")});
    return s;
  }
  throw std::invalid_argument("unknown coefficient field '" + field + "'");
}

FracQSeries fracqseries_from_json(const std::string& text) {
  json j = parse_strict(text);
  if (!j.is_object() || get_str(j, "kind") != "fracqseries")
    throw std::invalid_argument("not a fracqseries document");
  int D = get_int(j, "D");
  if (D < 1) throw std::invalid_argument("denominator must be positive");
  if (!j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("missing terms array");
  long max_e = 0;
  bool any = false;
  for (const auto& t : j["terms"]) {
    long e = static_cast<long>(get_int(t, "e"));
    max_e = any ? std::max(max_e, e) : e;
    any = true;
  }
  FracQSeries s(D, any ? max_e : 0);
  for (const auto& t : j["terms"])
    s.add(static_cast<long>(get_int(t, "e")), Complex{get_num(t, "re"), get_num(t, "im")});
  return s;
}

}  // namespace jacobi0
