// Canonical JSON serialization: fixed key order, 17-significant-digit floats,
// -0 normalized, terms sorted by exponent.  Identical inputs always produce
// byte-identical output.  Parsing is strict: unknown kinds, missing fields,
// or malformed rationals are rejected.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "jacobi0/analysis.hpp"
#include "jacobi0/biseries.hpp"
#include "jacobi0/fracqseries.hpp"

namespace jacobi0 {

std::string fmt_double(double x);
std::string fmt_complex_pair(Complex z);  // "[re,im]"

std::string to_json(const BiSeriesQ& s);
std::string to_json(const BiSeriesC& s);
std::string to_json(const FracQSeries& s);

struct VerifyReport {
  std::string identity;
  double max_abs_deviation = 0;
  long samples = 0;
  bool pass = false;
  double tolerance = 0;
};

std::string to_json(const VerifyReport& r);
std::string to_json(const std::vector<VerifyReport>& rs);
std::string to_json(const ZeroCountReport& r);

using ParsedBiSeries = std::variant<BiSeriesQ, BiSeriesC>;

// Throws std::invalid_argument on any schema violation.
ParsedBiSeries biseries_from_json(const std::string& text);
FracQSeries fracqseries_from_json(const std::string& text);

}  // namespace jacobi0
