#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "jacobi0/types.hpp"
#include "jacobi0/weierstrass.hpp"

using jacobi0::Complex;
using jacobi0::kPi;
using jacobi0::Rat;
using jacobi0::RationalPair;

namespace {

RationalPair rp(long ln, long ld, long mn, long md) {
  return {jacobi0::rat_of(ln, ld), jacobi0::rat_of(mn, md)};
}

const std::vector<Complex>& taus() {
  static const std::vector<Complex> g{{0, 1}, {0, 2}, {0.5, 1}, {1.0 / 3, 2}};
  return g;
}

}  // namespace

TEST_CASE("psi is the parity character of the half-lattice") {
  CHECK(jacobi0::psi(rp(0, 1, 0, 1)) == 1);
  CHECK(jacobi0::psi(rp(1, 1, 0, 1)) == -1);
  CHECK(jacobi0::psi(rp(0, 1, 1, 1)) == -1);
  CHECK(jacobi0::psi(rp(1, 1, 1, 1)) == -1);
  CHECK(jacobi0::psi(rp(2, 1, 0, 1)) == 1);
  CHECK(jacobi0::psi(rp(2, 1, 1, 1)) == -1);
  CHECK(jacobi0::psi(rp(-1, 1, 3, 1)) == -1);
  CHECK(jacobi0::psi(rp(-2, 1, -4, 1)) == 1);
  // off the integer lattice the character is trivial
  CHECK(jacobi0::psi(rp(1, 2, 0, 1)) == 1);
  CHECK(jacobi0::psi(rp(1, 1, 1, 3)) == 1);
}

TEST_CASE("psi is invariant under the row action of SL2(Z)") {
  const jacobi0::UnimodularMatrix mats[] = {
      jacobi0::UnimodularMatrix::S(), jacobi0::UnimodularMatrix::T(),
      jacobi0::UnimodularMatrix(1, 1, 1, 2), jacobi0::UnimodularMatrix(9, 8, 64, 57)};
  const RationalPair xs[] = {rp(1, 1, 0, 1), rp(0, 1, 1, 1), rp(1, 1, 1, 1),
                             rp(2, 1, 1, 1), rp(1, 2, 0, 1), rp(2, 5, 1, 5)};
  for (const auto& M : mats)
    for (const auto& X : xs) CHECK(jacobi0::psi(X * M) == jacobi0::psi(X));
}

TEST_CASE("eta(1) series has the stated low-order coefficients") {
  jacobi0::FracQSeries s = jacobi0::eta1_series(4);
  CHECK(s.den() == 1);
  CHECK(std::abs(s.coeff(0) - Complex{kPi * kPi / 3, 0}) < 1e-12);
  // -8 pi^2 sigma_1(n) for n = 1..4: sigma_1 = 1, 3, 4, 7
  CHECK(std::abs(s.coeff(1) - Complex{-8 * kPi * kPi, 0}) < 1e-10);
  CHECK(std::abs(s.coeff(2) - Complex{-24 * kPi * kPi, 0}) < 1e-10);
  CHECK(std::abs(s.coeff(3) - Complex{-32 * kPi * kPi, 0}) < 1e-10);
  CHECK(std::abs(s.coeff(4) - Complex{-56 * kPi * kPi, 0}) < 1e-10);
}

TEST_CASE("eta(1) at the square lattice point is pi") {
  Complex v = jacobi0::eta1({0, 1});
  CHECK(std::abs(v - Complex{kPi, 0}) < 1e-12);
}

TEST_CASE("adaptive eta(1) agrees with its own q-expansion") {
  for (Complex tau : taus()) {
    Complex a = jacobi0::eta1(tau);
    Complex b = jacobi0::eta1_series(40).eval(tau);
    CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
  }
}

TEST_CASE("eta extends R-linearly with eta(tau) = tau eta(1) - 2 pi i") {
  for (Complex tau : taus()) {
    Complex e1 = jacobi0::eta1(tau);
    Complex etau = jacobi0::eta_point(rp(1, 1, 0, 1), tau);
    CHECK(std::abs(etau - (tau * e1 - jacobi0::kTwoPiI)) < 1e-12 * std::abs(etau));
    CHECK(std::abs(jacobi0::eta_point(rp(0, 1, 1, 1), tau) - e1) == 0.0);
    Complex mix = jacobi0::eta_point(rp(1, 2, -1, 3), tau);
    CHECK(std::abs(mix - (0.5 * etau - e1 / 3.0)) < 1e-12 * (1 + std::abs(mix)));
  }
}

TEST_CASE("zeta has quasi-periods eta(1) and eta(tau)") {
  Complex z0{0.21, 0.17};
  for (Complex tau : taus()) {
    Complex e1 = jacobi0::eta1(tau);
    Complex etau = jacobi0::eta_point(rp(1, 1, 0, 1), tau);
    Complex d1 = jacobi0::wzeta_eval(tau, z0 + 1.0) - jacobi0::wzeta_eval(tau, z0);
    Complex dt = jacobi0::wzeta_eval(tau, z0 + tau) - jacobi0::wzeta_eval(tau, z0);
    CHECK(std::abs(d1 - e1) < 1e-9);
    CHECK(std::abs(dt - etau) < 1e-9);
  }
}

TEST_CASE("zeta is odd and has principal part 1/z") {
  Complex tau{0.1, 1.3};
  for (Complex z : {Complex{0.3, 0.1}, Complex{-0.2, 0.4}, Complex{0.45, -0.28}}) {
    Complex a = jacobi0::wzeta_eval(tau, z);
    Complex b = jacobi0::wzeta_eval(tau, -z);
    CHECK(std::abs(a + b) < 1e-10 * (1 + std::abs(a)));
  }
  Complex small{1e-3, 5e-4};
  Complex v = jacobi0::wzeta_eval(tau, small);
  CHECK(std::abs(v - 1.0 / small) < 1e-2);  // O(z) correction only
}

TEST_CASE("zeta rejects lattice points") {
  Complex tau{0.3, 1.1};
  CHECK_THROWS_AS((void)jacobi0::wzeta_eval(tau, {0, 0}), std::domain_error);
  CHECK_THROWS_AS((void)jacobi0::wzeta_eval(tau, tau + 1.0), std::domain_error);
  CHECK_THROWS_AS((void)jacobi0::wzeta_eval(tau, 2.0 * tau - 3.0), std::domain_error);
  CHECK(jacobi0::near_lattice_point(tau, tau - 1.0));
  CHECK_FALSE(jacobi0::near_lattice_point(tau, tau / 2.0));
}

TEST_CASE("rho at the square lattice") {
  // rho(i, 1) = exp(eta1(i)/2 - pi i) = -e^{pi/2}
  Complex v = jacobi0::rho({0, 1}, {1, 0});
  CHECK(std::abs(v - Complex{-std::exp(kPi / 2), 0}) < 1e-10);
  // rho(tau, 0) = 1 always
  CHECK(std::abs(jacobi0::rho({0.37, 0.9}, {0, 0}) - Complex{1, 0}) == 0.0);
}

TEST_CASE("sigma is normalized as sigma(z)/z -> 1") {
  for (Complex tau : taus()) {
    Complex z{1e-4, -3e-5};
    Complex v = jacobi0::sigma_eval(tau, z);
    CHECK(std::abs(v / z - 1.0) < 1e-6);
  }
}

TEST_CASE("sigma satisfies the eta quasi-periodicity law in both periods") {
  Complex z{0.23, 0.11};
  for (Complex tau : taus()) {
    Complex e1 = jacobi0::eta1(tau);
    Complex etau = jacobi0::eta_point(rp(1, 1, 0, 1), tau);
    Complex s = jacobi0::sigma_eval(tau, z);

    Complex lhs1 = jacobi0::sigma_eval(tau, z + 1.0);
    Complex rhs1 = -s * std::exp(e1 * (z + 0.5));
    CHECK(std::abs(lhs1 - rhs1) < 1e-9 * (1 + std::abs(rhs1)));

    Complex lhst = jacobi0::sigma_eval(tau, z + tau);
    Complex rhst = -s * std::exp(etau * (z + tau / 2.0));
    CHECK(std::abs(lhst - rhst) < 1e-9 * (1 + std::abs(rhst)));
  }
}

TEST_CASE("sigma vanishes only on the lattice (fundamental cell spot checks)") {
  Complex tau{0, 1};
  CHECK(std::abs(jacobi0::sigma_eval(tau, {0.5, 0.5})) > 1e-3);
  CHECK(std::abs(jacobi0::sigma_eval(tau, {0.5, 0.0})) > 1e-3);
  Complex nearly_zero = jacobi0::sigma_eval(tau, {1e-9, 0});
  CHECK(std::abs(nearly_zero) < 1e-8);
}

TEST_CASE("exact series and analytic product agree: sigma = -(2 pi i)^{-1} rho S") {
  jacobi0::BiSeriesQ S = jacobi0::sigma_series(14);
  for (Complex tau : {Complex{0, 2}, Complex{0.5, 1.5}}) {
    for (Complex z : {Complex{0.1, 0.0}, Complex{0.2, 0.3}, Complex{-0.15, 0.05}}) {
      Complex lhs = jacobi0::sigma_eval(tau, z);
      Complex rhs = -(1.0 / jacobi0::kTwoPiI) * jacobi0::rho(tau, z) * S.eval(tau, z);
      CHECK(std::abs(lhs - rhs) < 1e-10 * (1 + std::abs(lhs)));
    }
  }
}

TEST_CASE("zeta is the logarithmic derivative of sigma (numeric check)") {
  Complex tau{0.2, 1.4};
  Complex z{0.31, 0.12};
  double h = 1e-6;
  Complex ds = (jacobi0::sigma_eval(tau, z + h) - jacobi0::sigma_eval(tau, z - h)) /
               (2 * h);
  Complex lhs = ds / jacobi0::sigma_eval(tau, z);
  Complex rhs = jacobi0::wzeta_eval(tau, z);
  CHECK(std::abs(lhs - rhs) < 1e-7 * (1 + std::abs(rhs)));
}
