// Finite q-expansions with exponents in (1/D) Z, D >= 1; exponents may be
// negative.  A series carries a faithfulness bound `trunc_e`: every exponent
// e <= trunc_e (in 1/D units) is exactly represented, anything above is
// discarded.  Products propagate that bound so a chain of multiplications
// never claims more precision than it has.
#pragma once

#include <limits>
#include <map>
#include <optional>

#include "jacobi0/types.hpp"

namespace jacobi0 {

class FracQSeries {
 public:
  // den: the D of the exponent lattice; trunc_e: faithfulness bound in 1/D
  // units (terms with e > trunc_e are dropped on insert).
  FracQSeries(long den, long trunc_e);

  static FracQSeries one(long den, long trunc_e);

  long den() const { return den_; }
  long trunc_e() const { return trunc_e_; }

  // Faithfulness bound as a plain q-exponent, trunc_e / D.
  Rat trunc_exponent() const { return rat_of(trunc_e_, den_); }

  void set(long e, Complex c);
  void add(long e, Complex c);
  Complex coeff(long e) const;

  const std::map<long, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  long min_e() const;  // least stored exponent; throws if empty

  // Least exponent (as an exact rational e/D) whose coefficient is
  // non-negligible relative to the largest stored magnitude; nullopt for the
  // zero series.  The default floor sits well above accumulated convolution
  // roundoff yet below any honest unit coefficient at the window sizes the
  // library stays exact for.
  std::optional<Rat> ord(double rel_tol = 1e-12) const;

  // Largest coefficient magnitude (0 if empty).
  double max_abs() const;

  Complex eval(Complex tau) const;

  void scale(Complex s);

  // Same series on a finer lattice; new_den must be a multiple of den.
  FracQSeries rescaled(long new_den) const;

  // q^{delta_e/D}-shift combined with a scalar factor.
  FracQSeries shifted(long delta_e, Complex s) const;

  friend FracQSeries mul(const FracQSeries& a, const FracQSeries& b);
  FracQSeries pow(int m) const;

  FracQSeries& operator+=(const FracQSeries& o);

  // Drops terms whose magnitude is below rel_tol times the largest.
  void prune(double rel_tol = 1e-13);

 private:
  long den_;
  long trunc_e_;
  std::map<long, Complex> terms_;
};

// Saturating add used for truncation bookkeeping.
long sat_add(long a, long b);

}  // namespace jacobi0
