// Klein forms by two routes (sigma-path point values and the fractional
// q-product), the phi_X specialization of a normalized series, the exact
// congruence-subgroup membership test, and the root-of-unity translation law.
#pragma once

#include <optional>
#include <vector>

#include "jacobi0/biseries.hpp"
#include "jacobi0/forms.hpp"
#include "jacobi0/fracqseries.hpp"
#include "jacobi0/types.hpp"

namespace jacobi0 {

// k_X(tau) = -2 pi i psi(X) exp(-eta(l tau + m) (l tau + m) / 2)
//            sigma(tau, l tau + m),
// scaled so the product expansion below has leading coefficient
// e(mu (lambda - 1)/2).  Exactly 0 for integral X.
Complex klein_eval(const RationalPair& X, Complex tau, double tol = 1e-13);

// q-expansion e(mu(lambda-1)/2) q^{lambda(lambda-1)/2} (1 - e(mu) q^lambda)
// prod_{n>=1} (1 - e(mu) q^{n+lambda})(1 - e(-mu) q^{n-lambda}) / (1-q^n)^2,
// with lambda first reduced into [0, 1) by
// k_{(lambda+a, mu)} = (-1)^a e(-a mu / 2) k_{(lambda, mu)}.
// Faithful through q^trunc; integral X gives the flagged zero series.
FracQSeries klein_qexp(const RationalPair& X, int trunc);

// phi_X(tau) = (psi(X) e(v(1-u)/2))^k sum c(n,r) e(vr) q^{n + ur + ku(1-u)/2}
// from the normalized series of a weight-k form.  The faithfulness bound is
// derived from the support envelope: exponents at or beyond the entering
// front of out-of-window rows are dropped.
FracQSeries phi_x_series(const BiSeriesQ& normalized, int k, const RationalPair& X);

// (phi |''_k X)(tau, 0) for a point evaluator; converges at any Im tau > 0,
// which the q-expansion route does not.
Complex phi_x_point(const Evaluator& phi, int k, const RationalPair& X, Complex tau,
                    double tol = 1e-13);

// True iff (a-1)l + c m, b l + (d-1) m, and k(b l^2 + (d-a) l m - c m^2) are
// all even integers (exact rational arithmetic).
bool subgroup_member(const RationalPair& X, int k, const UnimodularMatrix& M);

struct TranslationRatio {
  Complex xi{};              // phi_X / phi_Y at the first grid point
  double grid_deviation = 0; // max |ratio_i - xi| over the grid
  double unit_deviation = 0; // | |xi| - 1 |
  std::optional<long> order; // least d <= 4 N^2 max(1,|k|) with xi^d ~ 1
};

// Requires X - Y integral and phi_Y not the zero series.
TranslationRatio translation_ratio(const BiSeriesQ& normalized, int k,
                                   const RationalPair& X, const RationalPair& Y,
                                   const std::vector<Complex>& tau_grid,
                                   double tol = 1e-9);

}  // namespace jacobi0
