#include "jacobi0/fracqseries.hpp"

#include <cmath>
#include <stdexcept>

namespace jacobi0 {

long sat_add(long a, long b) {
  constexpr long kMax = std::numeric_limits<long>::max() / 4;
  constexpr long kMin = std::numeric_limits<long>::min() / 4;
  if (a > 0 && b > kMax - a) return kMax;
  if (a < 0 && b < kMin - a) return kMin;
  long s = a + b;
  return s > kMax ? kMax : (s < kMin ? kMin : s);
}

FracQSeries::FracQSeries(long den, long trunc_e) : den_(den), trunc_e_(trunc_e) {
  if (den < 1) throw std::invalid_argument("exponent denominator must be >= 1");
}

FracQSeries FracQSeries::one(long den, long trunc_e) {
  FracQSeries s(den, trunc_e);
  s.set(0, {1.0, 0.0});
  return s;
}

void FracQSeries::set(long e, Complex c) {
  if (e > trunc_e_) return;
  if (c == Complex{}) {
    terms_.erase(e);
    return;
  }
  terms_[e] = c;
}

void FracQSeries::add(long e, Complex c) {
  if (e > trunc_e_ || c == Complex{}) return;
  Complex& slot = terms_[e];
  slot += c;
  if (slot == Complex{}) terms_.erase(e);
}

Complex FracQSeries::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex{} : it->second;
}

long FracQSeries::min_e() const {
  if (terms_.empty()) throw std::logic_error("min_e of empty series");
  return terms_.begin()->first;
}

double FracQSeries::max_abs() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::optional<Rat> FracQSeries::ord(double rel_tol) const {
  double cutoff = max_abs() * rel_tol;
  for (const auto& [e, c] : terms_)
    if (std::abs(c) > cutoff) return rat_of(e, den_);
  return std::nullopt;
}

Complex FracQSeries::eval(Complex tau) const {
  Complex w = e2pi(tau / static_cast<double>(den_));
  Complex total{};
  for (const auto& [e, c] : terms_) total += c * ipow(w, e);
  return total;
}

void FracQSeries::scale(Complex s) {
  if (s == Complex{}) {
    terms_.clear();
    return;
  }
  for (auto& [e, c] : terms_) c *= s;
}

FracQSeries FracQSeries::rescaled(long new_den) const {
  if (new_den % den_ != 0) throw std::invalid_argument("lattice refinement must be a multiple");
  long f = new_den / den_;
  // trunc scales with the lattice; clamp instead of overflowing.
  constexpr long kMax = std::numeric_limits<long>::max() / 4;
  constexpr long kMin = std::numeric_limits<long>::min() / 4;
  long new_trunc;
  if (trunc_e_ >= 0)
    new_trunc = trunc_e_ > kMax / f ? kMax : trunc_e_ * f;
  else
    new_trunc = trunc_e_ < kMin / f ? kMin : trunc_e_ * f;
  FracQSeries out(new_den, new_trunc);
  for (const auto& [e, c] : terms_) out.set(e * f, c);
  return out;
}

FracQSeries FracQSeries::shifted(long delta_e, Complex s) const {
  FracQSeries out(den_, sat_add(trunc_e_, delta_e));
  for (const auto& [e, c] : terms_) out.set(e + delta_e, c * s);
  return out;
}

FracQSeries mul(const FracQSeries& a, const FracQSeries& b) {
  mpz_class l;
  mpz_class da(a.den_), db(b.den_);
  mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  if (!l.fits_slong_p()) throw std::overflow_error("exponent lattice too fine");
  long den = l.get_si();
  FracQSeries fa = a.rescaled(den);
  FracQSeries fb = b.rescaled(den);

  // With both factors faithful below their bounds, products are complete for
  // e <= min(trunc_a + min_b, trunc_b + min_a).
  long trunc;
  if (fa.terms_.empty() || fb.terms_.empty()) {
    trunc = std::min(fa.trunc_e_, fb.trunc_e_);
  } else {
    trunc = std::min(sat_add(fa.trunc_e_, fb.min_e()), sat_add(fb.trunc_e_, fa.min_e()));
  }
  FracQSeries out(den, trunc);
  for (const auto& [e1, c1] : fa.terms_) {
    if (!fb.terms_.empty() && sat_add(e1, fb.terms_.begin()->first) > trunc) break;
    for (const auto& [e2, c2] : fb.terms_) {
      long e = sat_add(e1, e2);
      if (e > trunc) break;
      out.add(e, c1 * c2);
    }
  }
  return out;
}

FracQSeries FracQSeries::pow(int m) const {
  if (m < 0) throw std::invalid_argument("negative series power");
  if (m == 0) return one(den_, trunc_e_);
  FracQSeries acc = *this;
  for (int i = 1; i < m; ++i) acc = mul(acc, *this);
  return acc;
}

FracQSeries& FracQSeries::operator+=(const FracQSeries& o) {
  mpz_class l;
  mpz_class da(den_), db(o.den_);
  mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  if (!l.fits_slong_p()) throw std::overflow_error("exponent lattice too fine");
  long den = l.get_si();
  FracQSeries fa = rescaled(den);
  FracQSeries fb = o.rescaled(den);
  fa.trunc_e_ = std::min(fa.trunc_e_, fb.trunc_e_);
  auto it = fa.terms_.upper_bound(fa.trunc_e_);
  fa.terms_.erase(it, fa.terms_.end());
  for (const auto& [e, c] : fb.terms_) fa.add(e, c);
  *this = std::move(fa);
  return *this;
}

void FracQSeries::prune(double rel_tol) {
  double cutoff = max_abs() * rel_tol;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= cutoff)
      it = terms_.erase(it);
    else
      ++it;
  }
}

}  // namespace jacobi0
