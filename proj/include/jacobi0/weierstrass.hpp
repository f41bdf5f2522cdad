// Weierstrass-side machinery for the lattice [tau, 1]: the sign character
// psi, the quasi-period eta (point values and q-expansion), the elementary
// factor rho, the sigma function (adaptive product and exact normalized
// series), and the zeta function.
#pragma once

#include "jacobi0/biseries.hpp"
#include "jacobi0/fracqseries.hpp"
#include "jacobi0/types.hpp"

namespace jacobi0 {

// psi(X) = -1 when X is integral with lambda, mu not both even, +1 otherwise
// (equals (-1)^{lambda mu + lambda + mu} on Z^2, +1 off it).
int psi(const RationalPair& X);

// eta(1) = eta(1, [tau, 1]), summed adaptively; internal target accuracy is
// `tol` relative to the result.
Complex eta1(Complex tau, double tol = 1e-13, long max_terms = 2'000'000);

// q-expansion of eta(1): pi^2/3 - 8 pi^2 sum_{n>=1} sigma_1(n) q^n.
FracQSeries eta1_series(int trunc);

// eta(lambda tau + mu, [tau, 1]) via the R-linear extension
// eta(lambda tau + mu) = lambda eta(tau) + mu eta(1), with
// eta(tau) = tau eta(1) - 2 pi i.
Complex eta_point(const RationalPair& X, Complex tau, double tol = 1e-13);

// rho(tau, z) = exp(eta(1) z^2 / 2 - pi i z).
Complex rho(Complex tau, Complex z, double tol = 1e-13);

// sigma(tau, z), adaptive product; converges for every z once the index n
// passes the magnitude of Im z / Im tau.
Complex sigma_eval(Complex tau, Complex z, double tol = 1e-13, long max_terms = 2'000'000);

// Exact normalized series S with sigma = -(2 pi i)^{-1} rho S; integer
// coefficients, truncation order `trunc`.
BiSeriesQ sigma_series(int trunc);

// Weierstrass zeta on [tau, 1]; throws std::domain_error within `eps` of a
// lattice point.
Complex wzeta_eval(Complex tau, Complex z, double tol = 1e-13, double eps = 1e-8,
                   long max_terms = 2'000'000);

// True when z is within eps of Z tau + Z.
bool near_lattice_point(Complex tau, Complex z, double eps = 1e-8);

// Coefficients of prod_{n>=1} (1 - q^n)^{-2} up to q^trunc (two-colored
// partition numbers), computed by the standard divisor DP.
std::vector<mpz_class> two_colored_partitions(int trunc);

}  // namespace jacobi0
