// Shared domain types: complex helpers, exact rationals, SL2(Z) matrices,
// rational index pairs, and evaluation points.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace jacobi0 {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline const Complex kTwoPiI{0.0, 2.0 * kPi};

// Exact rational; GMP keeps the arithmetic overflow-free.
using Rat = mpq_class;

// Raised when a truncation window is too short to certify the request.
struct window_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// num/den in lowest terms.  The raw two-argument mpq_class constructor does
// not canonicalize, and GMP comparisons assume canonical form, so every
// fraction built from parts must go through here.
inline Rat rat_of(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p" (base 10, optional leading sign). No float syntax.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& x);

bool rat_is_integer(const Rat& x);
bool rat_is_even_integer(const Rat& x);

// floor(x) as a long; throws std::overflow_error if it does not fit.
long rat_floor(const Rat& x);

// x must be an integer fitting a long.
long rat_to_long(const Rat& x);

inline double rat_to_double(const Rat& x) { return x.get_d(); }

// ceil(x) as a long.
long rat_ceil(const Rat& x);

// e(x) = exp(2 pi i x).
inline Complex e2pi(Complex x) { return std::exp(kTwoPiI * x); }

// Exact root of unity e(t) for rational t; t is reduced mod 1 before any
// floating-point rounding, so the phase error stays at machine level no
// matter how large the numerator is.
Complex e2pi(const Rat& t);

// base^k for integer k, single-valued (no logarithm branch).
Complex ipow(Complex base, long k);

// X = (lambda mu) in Q^2, stored in lowest terms.
struct RationalPair {
  Rat lambda;
  Rat mu;

  RationalPair(Rat l, Rat m);

  // lcm of the two denominators ("N" such that X in N^{-1} Z^2).
  long level() const;
  bool integral() const;

  RationalPair operator+(const RationalPair& o) const;
  bool operator==(const RationalPair& o) const;
};

// det of the 2x2 matrix with rows X then Y.
Rat det_rows(const RationalPair& X, const RationalPair& Y);

// M = (a b; c d) in SL2(Z).
struct UnimodularMatrix {
  long a, b, c, d;

  UnimodularMatrix(long a_, long b_, long c_, long d_);

  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
  static UnimodularMatrix S() { return {0, -1, 1, 0}; }
  static UnimodularMatrix T() { return {1, 1, 0, 1}; }
  static UnimodularMatrix Tinv() { return {1, -1, 0, 1}; }

  UnimodularMatrix operator*(const UnimodularMatrix& o) const;

  Complex mobius(Complex tau) const;      // (a tau + b) / (c tau + d)
  Complex automorphy(Complex tau) const;  // c tau + d
};

// Row-vector action X M = (lambda a + mu c, lambda b + mu d).
RationalPair operator*(const RationalPair& X, const UnimodularMatrix& M);

// A point (tau, z) with Im tau > 0 plus the numeric policy used when series
// are evaluated there.
struct EvalPoint {
  Complex tau;
  Complex z;
  double tolerance = 1e-9;
  long max_terms = 1 << 20;

  EvalPoint(Complex tau_, Complex z_, double tol = 1e-9, long max_terms_ = 1 << 20);
};

}  // namespace jacobi0
