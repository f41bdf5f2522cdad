// Contour analytics: argument-principle zero counting over a period
// parallelogram, the Legendre quasi-period identity check, the normalized
// discriminant expansion, and the Delta-power embedding.
#pragma once

#include <optional>
#include <vector>

#include "jacobi0/forms.hpp"
#include "jacobi0/fracqseries.hpp"
#include "jacobi0/klein.hpp"
#include "jacobi0/types.hpp"

namespace jacobi0 {

struct ZeroCountOptions {
  Complex z0{0.11, 0.13};        // base corner of the parallelogram
  int points_per_segment = 64;   // composite Gauss-Legendre, 64-point panels
  double diff_step = 1e-5;       // central-difference step, scaled by |z|
  double min_distance = 1e-3;    // reject contours passing this close to a zero
  double max_residual = 0.01;    // |integral/(2 pi i) - nearest integer|
  int max_retries = 8;
  double tol = 1e-13;            // evaluator accuracy hint
};

struct ZeroCountReport {
  Complex tau0{};
  Complex z0{};                   // corner actually used (after retries)
  Complex integral{};             // contour integral of phi_z / phi
  long count = 0;                 // nearest integer to integral / (2 pi i)
  double residual = 0;
  int retries = 0;
  std::array<Complex, 4> segments{};  // per-edge integrals, for diagnostics
};

// Zeros of z -> phi(tau0, z) inside z0 + [0,1) + [0,1) tau0, counted by the
// argument principle; the contour is nudged deterministically when it runs
// too close to a zero or the residual is out of spec.
ZeroCountReport count_zeros(const Evaluator& phi, Complex tau0,
                            const ZeroCountOptions& opts = {});

// | eta(tau) - (tau eta(1) - 2 pi i) | with eta(tau) measured independently
// as a zeta quasi-period difference.
double legendre_check(Complex tau, double tol = 1e-13);

// Exact integer coefficients of q prod (1-q^n)^{24} through q^trunc
// (index = exponent).
std::vector<mpz_class> delta_coefficients(int trunc);

// The same expansion as a FracQSeries (D = 1) plus the transcendental tag:
// the true discriminant is (2 pi i)^{12} times this series.
struct DeltaSeries {
  FracQSeries series;
  int two_pi_i_power = 12;
};
DeltaSeries delta_qexp(int trunc);

struct EmbedComponent {
  RationalPair X;
  FracQSeries series;           // phi_X * Delta-hat^m
  std::optional<Rat> ord;
  bool holomorphic = false;     // ord >= 0 (vacuously true for the zero series)
};

struct EmbedResult {
  std::vector<EmbedComponent> components;
  bool all_holomorphic = false;
  int filtration = 0;           // classifier value used for validation
};

// g(phi) = (phi_{X_1} Delta-hat^m, ..., phi_{X_{-k+1}} Delta-hat^m) for a
// weight-k form, k <= 0; requires exactly -k+1 distinct indices with
// components strictly inside the open unit square, and m at least the
// filtration index of the series.
EmbedResult embed_g(const BiSeriesQ& normalized, int k,
                    const std::vector<RationalPair>& indices, int m, int trunc);

}  // namespace jacobi0
