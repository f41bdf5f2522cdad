#include "jacobi0/klein.hpp"

#include <cmath>
#include <stdexcept>

#include "jacobi0/weierstrass.hpp"

namespace jacobi0 {

namespace {

// In-place s *= (1 - c q^{de/D}); the factor leads with 1, so the
// faithfulness bound is unchanged and inserts beyond it are dropped by add().
void mul_one_minus(FracQSeries& s, long de, Complex c) {
  std::vector<std::pair<long, Complex>> snap(s.terms().begin(), s.terms().end());
  for (const auto& [e, v] : snap) s.add(e + de, -c * v);
}

}  // namespace

Complex klein_eval(const RationalPair& X, Complex tau, double tol) {
  if (X.integral()) return {};
  Complex w = rat_to_double(X.lambda) * tau + Complex{rat_to_double(X.mu), 0.0};
  Complex factor = std::exp(-0.5 * eta_point(X, tau, tol) * w);
  // -2 pi i rescales the sigma path into the product normalization, whose
  // leading coefficient is the pure unit e(mu (lambda-1)/2).
  return -kTwoPiI * static_cast<double>(psi(X)) * factor * sigma_eval(tau, w, tol);
}

FracQSeries klein_qexp(const RationalPair& X, int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation order must be >= 0");
  if (X.integral()) return FracQSeries(2, 2L * trunc);  // flagged zero series

  long a = rat_floor(X.lambda);
  Rat lam = X.lambda - Rat(a);  // in [0, 1)
  const Rat& mu = X.mu;
  long p = static_cast<long>(lam.get_num().get_si());
  long s = static_cast<long>(lam.get_den().get_si());
  long D = 2 * s * s;

  // k_{(lam+a, mu)} = (-1)^a e(-a mu / 2) k_{(lam, mu)}.
  Complex lead = e2pi(mu * (lam - 1) / 2) * e2pi(Rat(-a) * mu / 2);
  if (a & 1) lead = -lead;
  long lead_e = p * (p - s);  // lam(lam-1)/2 in 1/D units, <= 0

  long final_trunc = static_cast<long>(trunc) * D;
  long unit_trunc = final_trunc - lead_e;

  Complex emu = e2pi(mu);
  Complex emu_inv = e2pi(-mu);

  FracQSeries u(D, unit_trunc);
  u.set(0, {1.0, 0.0});
  mul_one_minus(u, 2 * p * s, emu);  // (1 - e(mu) q^lam)
  for (long n = 1;; ++n) {
    long e_minus = n * D - 2 * p * s;  // (n - lam) D
    long e_plus = n * D + 2 * p * s;   // (n + lam) D
    if (e_minus > unit_trunc) break;
    mul_one_minus(u, e_minus, emu_inv);
    if (e_plus <= unit_trunc) mul_one_minus(u, e_plus, emu);
  }

  std::vector<mpz_class> p2 = two_colored_partitions(static_cast<int>(unit_trunc / D) + 1);
  FracQSeries parts(D, unit_trunc);
  for (long j = 0; j * D <= unit_trunc; ++j)
    parts.set(j * D, {p2[static_cast<std::size_t>(j)].get_d(), 0.0});

  FracQSeries out = mul(u, parts).shifted(lead_e, lead);
  out.prune(1e-12);
  return out;
}

FracQSeries phi_x_series(const BiSeriesQ& normalized, int k, const RationalPair& X) {
  const Rat& u = X.lambda;
  const Rat& v = X.mu;
  long s = static_cast<long>(u.get_den().get_si());
  long D = 2 * s * s;
  int N = normalized.trunc();

  // Entering front of the out-of-window rows, estimated from the last three
  // in-window rows of the envelope; exponents at or past it are unreliable.
  std::vector<int> env = normalized.envelope_profile();
  Rat au = abs(u);
  Rat front = Rat(N) - au * Rat(env[static_cast<std::size_t>(N)]);
  for (int j = std::max(0, N - 2); j < N; ++j) {
    Rat f = Rat(j) - au * Rat(env[static_cast<std::size_t>(j)]);
    if (f < front) front = f;
  }
  Rat shift = Rat(k) * u * (1 - u) / 2;
  Rat cut = (front + shift) * D;
  long e_cut = rat_ceil(cut) - 1;

  int sgn = (psi(X) < 0 && (k & 1)) ? -1 : 1;
  Complex pre = static_cast<double>(sgn) * e2pi(Rat(k) * v * (1 - u) / 2);

  FracQSeries out(D, e_cut);
  for (const auto& [n, row] : normalized.rows()) {
    for (const auto& [r, c] : row) {
      Rat ex = (Rat(n) + u * Rat(r) + shift) * D;
      long e = rat_to_long(ex);
      if (e > e_cut) continue;
      out.add(e, pre * e2pi(v * Rat(r)) * Complex{c.get_d(), 0.0});
    }
  }
  out.prune(1e-12);
  return out;
}

Complex phi_x_point(const Evaluator& phi, int k, const RationalPair& X, Complex tau,
                    double tol) {
  int sgn = (psi(X) < 0 && (k & 1)) ? -1 : 1;
  Complex w = rat_to_double(X.lambda) * tau + Complex{rat_to_double(X.mu), 0.0};
  Complex factor = std::exp(0.5 * static_cast<double>(k) * eta_point(X, tau, tol) * w);
  return static_cast<double>(sgn) * factor * phi(tau, w);
}

bool subgroup_member(const RationalPair& X, int k, const UnimodularMatrix& M) {
  const Rat& l = X.lambda;
  const Rat& m = X.mu;
  Rat c1 = Rat(M.a - 1) * l + Rat(M.c) * m;
  Rat c2 = Rat(M.b) * l + Rat(M.d - 1) * m;
  Rat c3 = Rat(k) * (Rat(M.b) * l * l + Rat(M.d - M.a) * l * m - Rat(M.c) * m * m);
  return rat_is_even_integer(c1) && rat_is_even_integer(c2) && rat_is_even_integer(c3);
}

TranslationRatio translation_ratio(const BiSeriesQ& normalized, int k,
                                   const RationalPair& X, const RationalPair& Y,
                                   const std::vector<Complex>& tau_grid, double tol) {
  RationalPair diff{X.lambda - Y.lambda, X.mu - Y.mu};
  if (!diff.integral())
    throw std::invalid_argument("indices must agree modulo the integer lattice");
  if (tau_grid.empty()) throw std::invalid_argument("empty tau grid");

  FracQSeries sx = phi_x_series(normalized, k, X);
  FracQSeries sy = phi_x_series(normalized, k, Y);
  if (!sy.ord(1e-9)) throw std::domain_error("denominator specialization is the zero series");

  TranslationRatio res;
  bool first = true;
  for (Complex tau : tau_grid) {
    Complex den = sy.eval(tau);
    if (std::abs(den) < 1e-300) throw std::domain_error("denominator vanishes on the grid");
    Complex ratio = sx.eval(tau) / den;
    if (first) {
      res.xi = ratio;
      first = false;
    } else {
      res.grid_deviation = std::max(res.grid_deviation, std::abs(ratio - res.xi));
    }
  }
  res.unit_deviation = std::abs(std::abs(res.xi) - 1.0);

  long level = X.level();
  long cap = 4 * level * level * std::max(1L, std::labs(static_cast<long>(k)));
  for (long d = 1; d <= cap; ++d) {
    if (std::abs(ipow(res.xi, d) - Complex{1.0, 0.0}) < std::max(tol, 1e-9) * 10.0) {
      res.order = d;
      break;
    }
  }
  return res;
}

}  // namespace jacobi0
