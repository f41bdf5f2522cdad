#include "jacobi0/analysis.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <stdexcept>

#include "jacobi0/weierstrass.hpp"

namespace jacobi0 {

namespace {

using GL64 = boost::math::quadrature::gauss<double, 64>;

Complex log_deriv(const Evaluator& phi, Complex tau, Complex z, double step) {
  double h = step * std::max(1.0, std::abs(z));
  Complex f = phi(tau, z);
  Complex fp = (phi(tau, z + h) - phi(tau, z - h)) / (2.0 * h);
  return fp / f;
}

// First-order distance estimate |f / f'| from samples along edge a -> b;
// used only to reject contours that graze a zero.
double min_zero_distance(const Evaluator& phi, Complex tau, Complex a, Complex b,
                         double step) {
  double best = std::numeric_limits<double>::infinity();
  constexpr int kSamples = 17;
  for (int i = 0; i <= kSamples; ++i) {
    Complex z = a + (static_cast<double>(i) / kSamples) * (b - a);
    double h = step * std::max(1.0, std::abs(z));
    Complex f = phi(tau, z);
    Complex fp = (phi(tau, z + h) - phi(tau, z - h)) / (2.0 * h);
    double d = std::abs(fp) > 0 ? std::abs(f) / std::abs(fp)
                                : (std::abs(f) > 0 ? best : 0.0);
    best = std::min(best, d);
  }
  return best;
}

Complex integrate_edge(const Evaluator& phi, Complex tau, Complex a, Complex b,
                       int points, double step) {
  int panels = std::max(1, (points + 63) / 64);
  Complex total{};
  for (int p = 0; p < panels; ++p) {
    double t0 = static_cast<double>(p) / panels;
    double t1 = static_cast<double>(p + 1) / panels;
    auto re = [&](double t) { return (log_deriv(phi, tau, a + t * (b - a), step) * (b - a)).real(); };
    auto im = [&](double t) { return (log_deriv(phi, tau, a + t * (b - a), step) * (b - a)).imag(); };
    total += Complex{GL64::integrate(re, t0, t1), GL64::integrate(im, t0, t1)};
  }
  return total;
}

}  // namespace

ZeroCountReport count_zeros(const Evaluator& phi, Complex tau0, const ZeroCountOptions& opts) {
  if (!(tau0.imag() > 0)) throw std::domain_error("tau must lie in the upper half-plane");
  const Complex nudge{0.017, 0.013};
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    Complex z0 = opts.z0 + static_cast<double>(attempt) * nudge;
    std::array<Complex, 4> corner{z0, z0 + 1.0, z0 + 1.0 + tau0, z0 + tau0};

    bool too_close = false;
    for (int e = 0; e < 4 && !too_close; ++e) {
      double d = min_zero_distance(phi, tau0, corner[static_cast<std::size_t>(e)],
                                   corner[static_cast<std::size_t>((e + 1) % 4)],
                                   opts.diff_step);
      too_close = d < opts.min_distance;
    }
    if (too_close) continue;

    ZeroCountReport rep;
    rep.tau0 = tau0;
    rep.z0 = z0;
    rep.retries = attempt;
    Complex total{};
    for (int e = 0; e < 4; ++e) {
      Complex seg = integrate_edge(phi, tau0, corner[static_cast<std::size_t>(e)],
                                   corner[static_cast<std::size_t>((e + 1) % 4)],
                                   opts.points_per_segment, opts.diff_step);
      rep.segments[static_cast<std::size_t>(e)] = seg;
      total += seg;
    }
    rep.integral = total;
    Complex raw = total / kTwoPiI;
    rep.count = std::lround(raw.real());
    rep.residual = std::abs(raw - Complex{static_cast<double>(rep.count), 0.0});
    if (rep.residual > opts.max_residual) continue;
    return rep;
  }
  throw std::runtime_error("zero count: no admissible contour after retries");
}

double legendre_check(Complex tau, double tol) {
  Complex direct = tau * eta1(tau, tol) - kTwoPiI;
  const Complex z0{0.21, 0.17};
  Complex oracle = wzeta_eval(tau, z0 + tau, tol) - wzeta_eval(tau, z0, tol);
  return std::abs(direct - oracle);
}

std::vector<mpz_class> delta_coefficients(int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation order must be >= 0");
  std::size_t len = static_cast<std::size_t>(trunc) + 1;
  // Euler product prod (1 - q^n), dense DP.
  std::vector<mpz_class> p(len, 0);
  p[0] = 1;
  for (int n = 1; n <= trunc; ++n)
    for (int j = trunc; j >= n; --j)
      p[static_cast<std::size_t>(j)] -= p[static_cast<std::size_t>(j - n)];

  auto square = [len](const std::vector<mpz_class>& a) {
    std::vector<mpz_class> out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j) {
        if (a[j] == 0) continue;
        out[i + j] += a[i] * a[j];
      }
    }
    return out;
  };
  std::vector<mpz_class> p2 = square(p);    // ^2
  std::vector<mpz_class> p4 = square(p2);   // ^4
  std::vector<mpz_class> p8 = square(p4);   // ^8
  std::vector<mpz_class> p16 = square(p8);  // ^16
  std::vector<mpz_class> p24(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    if (p16[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) p24[i + j] += p16[i] * p8[j];
  }

  std::vector<mpz_class> out(len, 0);
  for (std::size_t e = 1; e < len; ++e) out[e] = p24[e - 1];
  return out;
}

DeltaSeries delta_qexp(int trunc) {
  std::vector<mpz_class> c = delta_coefficients(trunc);
  DeltaSeries d{FracQSeries(1, trunc), 12};
  for (std::size_t e = 0; e < c.size(); ++e)
    d.series.set(static_cast<long>(e), {c[e].get_d(), 0.0});
  return d;
}

EmbedResult embed_g(const BiSeriesQ& normalized, int k,
                    const std::vector<RationalPair>& indices, int m, int trunc) {
  if (k > 0) throw std::invalid_argument("embedding requires weight k <= 0");
  std::size_t want = static_cast<std::size_t>(-k + 1);
  if (indices.size() != want)
    throw std::invalid_argument("need exactly -k+1 index pairs");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const RationalPair& X = indices[i];
    if (!(X.lambda > 0 && X.lambda < 1 && X.mu > 0 && X.mu < 1))
      throw std::invalid_argument("index components must lie strictly inside (0,1)");
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (X == indices[j]) throw std::invalid_argument("index pairs must be distinct");
  }
  FiltrationResult fil = filtration_index(normalized, k);
  if (!fil.admissible) throw window_error(fil.reason);
  if (m < fil.index)
    throw std::invalid_argument("Delta power below the filtration index");

  DeltaSeries dhat = delta_qexp(trunc);
  FracQSeries dm = dhat.series.pow(m);

  EmbedResult res;
  res.filtration = fil.index;
  res.all_holomorphic = true;
  for (const RationalPair& X : indices) {
    FracQSeries fx = phi_x_series(normalized, k, X);
    // Delta-hat^m = q^m (1 + O(q)) with unit leading coefficient, so the
    // component order is ord(phi_X) + m exactly; reading it off the product
    // instead would be at the mercy of the huge Delta-hat^m coefficients.
    std::optional<Rat> fo = fx.ord();
    EmbedComponent comp{X, mul(fx, dm), std::nullopt, false};
    if (fo) comp.ord = *fo + Rat(m);
    comp.holomorphic = !comp.ord || *comp.ord >= 0;
    if (!comp.holomorphic) res.all_holomorphic = false;
    res.components.push_back(std::move(comp));
  }
  return res;
}

}  // namespace jacobi0
