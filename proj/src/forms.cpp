#include "jacobi0/forms.hpp"

#include <array>

#include "jacobi0/weierstrass.hpp"

namespace jacobi0 {

Evaluator slash_prime(Evaluator phi, int k, const UnimodularMatrix& M) {
  return [phi = std::move(phi), k, M](Complex tau, Complex z) {
    Complex j = M.automorphy(tau);
    return ipow(j, -static_cast<long>(k)) * phi(M.mobius(tau), z / j);
  };
}

Evaluator slash_dprime(Evaluator phi, int k, const RationalPair& X) {
  double lam = rat_to_double(X.lambda);
  double mu = rat_to_double(X.mu);
  int sgn = (psi(X) < 0 && (k & 1)) ? -1 : 1;
  return [phi = std::move(phi), k, X, lam, mu, sgn](Complex tau, Complex z) {
    Complex w = lam * tau + Complex{mu, 0.0};
    Complex factor = std::exp(static_cast<double>(k) * eta_point(X, tau) * (z + 0.5 * w));
    return static_cast<double>(sgn) * factor * phi(tau, z + w);
  };
}

Complex dprime_cocycle(const RationalPair& X, const RationalPair& Xp, int k) {
  int s = psi(X) * psi(Xp) * psi(X + Xp);
  double sign = (s < 0 && (k & 1)) ? -1.0 : 1.0;
  return sign * e2pi(Rat(k) * det_rows(Xp, X) / 2);
}

Form::Form(int weight, Evaluator ev, std::function<BiSeriesQ(int)> series_gen,
           std::string label)
    : weight_(weight), ev_(std::move(ev)), series_gen_(std::move(series_gen)),
      label_(std::move(label)) {}

BiSeriesQ Form::normalized_series(int trunc) const {
  if (!series_gen_) throw std::logic_error("form has no exact series");
  return series_gen_(trunc);
}

Form Form::sigma() {
  // Scaled by -2 pi i so that rho^k (evaluator) equals the integer series S
  // exactly; every transformation law is homogeneous in the scale.
  return Form(-1, [](Complex tau, Complex z) { return -kTwoPiI * sigma_eval(tau, z); },
              [](int trunc) { return sigma_series(trunc); }, "sigma");
}

Form Form::one() {
  return Form(0, [](Complex, Complex) { return Complex{1.0, 0.0}; },
              [](int trunc) { return BiSeriesQ::one(trunc); }, "one");
}

Form graded_mul(const Form& f, const Form& g) {
  Evaluator ev = [fe = f.evaluator(), ge = g.evaluator()](Complex tau, Complex z) {
    return fe(tau, z) * ge(tau, z);
  };
  std::function<BiSeriesQ(int)> gen;
  if (f.has_series() && g.has_series()) {
    gen = [f, g](int trunc) { return f.normalized_series(trunc) * g.normalized_series(trunc); };
  }
  std::string label = f.label().empty() || g.label().empty()
                          ? std::string{}
                          : f.label() + "*" + g.label();
  return Form(f.weight() + g.weight(), std::move(ev), std::move(gen), std::move(label));
}

CoeffRelationReport coeff_relation_check(const BiSeriesQ& s, int k,
                                         const std::vector<long>& lambdas) {
  CoeffRelationReport rep;
  long trunc = s.trunc();
  for (const auto& [n, row] : s.rows()) {
    for (const auto& [r, c] : row) {
      for (long lam : lambdas) {
        long n2 = n - static_cast<long>(r) * lam - static_cast<long>(k) * lam * (lam + 1) / 2;
        long r2 = r + lam * static_cast<long>(k);
        if (n2 < 0 || n2 > trunc) continue;
        ++rep.checked;
        bool flip = ((lam * k) % 2) != 0;
        Rat expected = s.coeff(static_cast<int>(n2), static_cast<int>(r2));
        if (flip) expected = -expected;
        if (c != expected) rep.violations.push_back({n, static_cast<long>(r), lam});
      }
    }
  }
  return rep;
}

FiltrationResult filtration_index(const BiSeriesQ& normalized, int k) {
  FiltrationResult res;
  int N = normalized.trunc();
  if (N < 1) {
    res.reason = "window too small to certify the support envelope";
    return res;
  }
  std::vector<int> env = normalized.envelope_profile();
  Rat dN = Rat(N) - Rat(env[static_cast<std::size_t>(N)]);
  Rat dN1 = Rat(N - 1) - Rat(env[static_cast<std::size_t>(N - 1)]);
  if (dN < dN1) {
    res.reason = "support envelope still widening at the window edge; enlarge the window";
    return res;
  }
  Rat min_d = Rat(0) - Rat(env[0]);
  for (int n = 0; n <= N; ++n) {
    Rat d = Rat(n) - Rat(env[static_cast<std::size_t>(n)]);
    if (d < min_d) min_d = d;
  }
  res.min_defect = min_d;
  Rat need = -(min_d + rat_of(k, 8));
  long m = rat_ceil(need);
  res.index = static_cast<int>(m < 1 ? 1 : m);
  res.admissible = true;
  return res;
}

}  // namespace jacobi0
