#include "jacobi0/types.hpp"

#include <cctype>
#include <cmath>

namespace jacobi0 {

namespace {

bool valid_rat_literal(const std::string& s) {
  // [sign] digits [ "/" [sign-less] digits ]; rejects empty parts and floats.
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Rat parse_rat(const std::string& s) {
  if (!valid_rat_literal(s))
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  Rat x(s);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  x.canonicalize();
  return x;
}

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool rat_is_integer(const Rat& x) { return x.get_den() == 1; }

bool rat_is_even_integer(const Rat& x) {
  return x.get_den() == 1 && mpz_even_p(x.get_num().get_mpz_t());
}

long rat_floor(const Rat& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("rational floor out of range");
  return f.get_si();
}

long rat_ceil(const Rat& x) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  if (!c.fits_slong_p()) throw std::overflow_error("rational ceil out of range");
  return c.get_si();
}

long rat_to_long(const Rat& x) {
  if (x.get_den() != 1) throw std::invalid_argument("rational is not an integer");
  if (!x.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
  return x.get_num().get_si();
}

Complex e2pi(const Rat& t) {
  // Reduce mod 1 exactly; quarter-period angles get exact values so that
  // integral and half-integral indices cancel bit-exactly downstream.
  Rat r = t - Rat(rat_floor(t));
  if (r.get_den() == 1) return {1.0, 0.0};
  if (r.get_den() == 2) return {-1.0, 0.0};
  if (r.get_den() == 4) return r.get_num() == 1 ? Complex{0.0, 1.0}
                                                : Complex{0.0, -1.0};
  double f = r.get_d();
  return std::polar(1.0, 2.0 * kPi * f);
}

Complex ipow(Complex base, long k) {
  if (k < 0) {
    if (base == Complex{}) throw std::domain_error("ipow: negative power of zero");
    return 1.0 / ipow(base, -k);
  }
  Complex acc{1.0, 0.0};
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

RationalPair::RationalPair(Rat l, Rat m) : lambda(std::move(l)), mu(std::move(m)) {
  lambda.canonicalize();
  mu.canonicalize();
}

long RationalPair::level() const {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), lambda.get_den().get_mpz_t(), mu.get_den().get_mpz_t());
  if (!l.fits_slong_p()) throw std::overflow_error("index level out of range");
  return l.get_si();
}

bool RationalPair::integral() const {
  return lambda.get_den() == 1 && mu.get_den() == 1;
}

RationalPair RationalPair::operator+(const RationalPair& o) const {
  return {lambda + o.lambda, mu + o.mu};
}

bool RationalPair::operator==(const RationalPair& o) const {
  return lambda == o.lambda && mu == o.mu;
}

Rat det_rows(const RationalPair& X, const RationalPair& Y) {
  return X.lambda * Y.mu - X.mu * Y.lambda;
}

UnimodularMatrix::UnimodularMatrix(long a_, long b_, long c_, long d_)
    : a(a_), b(b_), c(c_), d(d_) {
  // Overflow-safe determinant check.
  mpz_class det = mpz_class(a) * d - mpz_class(b) * c;
  if (det != 1) throw std::invalid_argument("matrix determinant must be 1");
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Complex UnimodularMatrix::mobius(Complex tau) const {
  return (static_cast<double>(a) * tau + static_cast<double>(b)) / automorphy(tau);
}

Complex UnimodularMatrix::automorphy(Complex tau) const {
  return static_cast<double>(c) * tau + static_cast<double>(d);
}

RationalPair operator*(const RationalPair& X, const UnimodularMatrix& M) {
  return {X.lambda * M.a + X.mu * M.c, X.lambda * M.b + X.mu * M.d};
}

EvalPoint::EvalPoint(Complex tau_, Complex z_, double tol, long max_terms_)
    : tau(tau_), z(z_), tolerance(tol), max_terms(max_terms_) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half-plane");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (max_terms < 1) throw std::invalid_argument("max_terms must be positive");
}

}  // namespace jacobi0
