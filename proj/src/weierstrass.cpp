#include "jacobi0/weierstrass.hpp"

#include <cmath>
#include <stdexcept>

namespace jacobi0 {

namespace {

void require_upper_half(Complex tau) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half-plane");
}

}  // namespace

int psi(const RationalPair& X) {
  if (!X.integral()) return 1;
  bool both_even = rat_is_even_integer(X.lambda) && rat_is_even_integer(X.mu);
  return both_even ? 1 : -1;
}

Complex eta1(Complex tau, double tol, long max_terms) {
  require_upper_half(tau);
  Complex q = e2pi(tau);
  double a = std::abs(q);
  Complex sum{};
  Complex qn{1.0, 0.0};
  double an = 1.0;
  double one_minus_a3 = (1.0 - a) * (1.0 - a) * (1.0 - a);
  for (long n = 1; n <= max_terms; ++n) {
    qn *= q;
    an *= a;
    sum += static_cast<double>(n) * qn / (1.0 - qn);
    // tail <= |q|^{n+1} ((n+1) - n|q|) / (1-|q|)^3
    double tail = an * a * (static_cast<double>(n + 1) - static_cast<double>(n) * a) / one_minus_a3;
    if (tail < tol * std::max(1.0, std::abs(sum))) {
      double pi2 = kPi * kPi;
      return pi2 / 3.0 - 8.0 * pi2 * sum;
    }
  }
  throw std::runtime_error("eta1: series did not converge within max_terms");
}

FracQSeries eta1_series(int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation order must be >= 0");
  std::vector<long> s1(static_cast<std::size_t>(trunc) + 1, 0);
  for (int d = 1; d <= trunc; ++d)
    for (int m = d; m <= trunc; m += d) s1[static_cast<std::size_t>(m)] += d;
  double pi2 = kPi * kPi;
  FracQSeries out(1, trunc);
  out.set(0, {pi2 / 3.0, 0.0});
  for (int n = 1; n <= trunc; ++n)
    out.set(n, {-8.0 * pi2 * static_cast<double>(s1[static_cast<std::size_t>(n)]), 0.0});
  return out;
}

Complex eta_point(const RationalPair& X, Complex tau, double tol) {
  Complex e1 = eta1(tau, tol);
  Complex etau = tau * e1 - kTwoPiI;  // Legendre: eta(tau) 1 - eta(1) tau = -2 pi i
  return rat_to_double(X.lambda) * etau + rat_to_double(X.mu) * e1;
}

Complex rho(Complex tau, Complex z, double tol) {
  Complex e1 = eta1(tau, tol);
  return std::exp(0.5 * e1 * z * z - Complex{0.0, kPi} * z);
}

Complex sigma_eval(Complex tau, Complex z, double tol, long max_terms) {
  require_upper_half(tau);
  Complex q = e2pi(tau);
  Complex zeta = e2pi(z);
  double a = std::abs(q);
  double zmag = std::abs(zeta);
  double growth = zmag + 1.0 / zmag + 2.0;
  double one_minus_a3 = (1.0 - a) * (1.0 - a) * (1.0 - a);

  Complex prod = 1.0 - zeta;
  Complex qn{1.0, 0.0};
  double an = 1.0;
  for (long n = 1; n <= max_terms; ++n) {
    qn *= q;
    an *= a;
    Complex d = 1.0 - qn;
    prod *= (1.0 - qn * zeta) * (1.0 - qn / zeta) / (d * d);
    // Remaining factors differ from 1 by at most ~ |q|^m (|zeta|+1/|zeta|+2)
    // each; the summed bound must clear both the +/- zeta branches.
    double tail = an * a * growth / one_minus_a3;
    if (an * zmag < 0.5 && an / zmag < 0.5 && tail < tol) {
      return -(rho(tau, z, tol) * prod) / kTwoPiI;
    }
  }
  throw std::runtime_error("sigma: product did not converge within max_terms");
}

BiSeriesQ sigma_series(int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation order must be >= 0");
  BiSeriesQ s(trunc);
  s.set(0, 0, Rat(1));
  s.set(0, 1, Rat(-1));

  // Multiply in place by (1 - q^dn zeta^dr).
  auto mul_one_minus = [trunc](BiSeriesQ& t, int dn, int dr) {
    BiSeriesQ shifted(trunc);
    for (const auto& [n, row] : t.rows()) {
      if (n + dn > trunc) break;
      for (const auto& [r, c] : row) shifted.add(n + dn, r + dr, c);
    }
    t = t - shifted;
  };

  for (int n = 1; n <= trunc; ++n) {
    mul_one_minus(s, n, 1);
    mul_one_minus(s, n, -1);
  }

  std::vector<mpz_class> p2 = two_colored_partitions(trunc);
  BiSeriesQ t(trunc);
  for (int j = 0; j <= trunc; ++j) t.set(j, 0, Rat(p2[static_cast<std::size_t>(j)]));
  return s * t;
}

std::vector<mpz_class> two_colored_partitions(int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation order must be >= 0");
  std::vector<mpz_class> c(static_cast<std::size_t>(trunc) + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= trunc; ++n)
    for (int pass = 0; pass < 2; ++pass)
      for (int j = n; j <= trunc; ++j)
        c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - n)];
  return c;
}

bool near_lattice_point(Complex tau, Complex z, double eps) {
  double im = tau.imag();
  double lam = z.imag() / im;
  double mu = z.real() - lam * tau.real();
  Complex nearest = std::round(lam) * tau + Complex{std::round(mu), 0.0};
  return std::abs(z - nearest) < eps;
}

Complex wzeta_eval(Complex tau, Complex z, double tol, double eps, long max_terms) {
  require_upper_half(tau);
  if (near_lattice_point(tau, z, eps))
    throw std::domain_error("zeta pole: z is a lattice point");
  Complex q = e2pi(tau);
  Complex zeta = e2pi(z);
  double a = std::abs(q);
  double zmag = std::abs(zeta);
  double growth = zmag + 1.0 / zmag;
  double one_minus_a2 = (1.0 - a) * (1.0 - a);

  Complex bracket = zeta / (1.0 - zeta);
  Complex qn{1.0, 0.0};
  double an = 1.0;
  for (long n = 1; n <= max_terms; ++n) {
    qn *= q;
    an *= a;
    Complex u = qn * zeta;
    Complex v = qn / zeta;
    bracket += u / (1.0 - u) - v / (1.0 - v);
    double tail = an * a * growth / one_minus_a2;
    if (an * zmag < 0.5 && an / zmag < 0.5 && tail < tol * std::max(1.0, std::abs(bracket))) {
      Complex e1 = eta1(tau, tol);
      return e1 * z - Complex{0.0, kPi} - kTwoPiI * bracket;
    }
  }
  throw std::runtime_error("zeta: series did not converge within max_terms");
}

}  // namespace jacobi0
