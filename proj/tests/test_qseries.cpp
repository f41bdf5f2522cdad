#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "jacobi0/biseries.hpp"
#include "jacobi0/fracqseries.hpp"
#include "jacobi0/json_io.hpp"
#include "jacobi0/weierstrass.hpp"
#include "oracles.hpp"

using jacobi0::BiSeriesC;
using jacobi0::BiSeriesQ;
using jacobi0::Complex;
using jacobi0::FracQSeries;
using jacobi0::Rat;

namespace {

BiSeriesQ random_sparse(std::mt19937& rng, int trunc, int max_r, int fill_permille) {
  BiSeriesQ s(trunc);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> keep(0, 999);
  for (int n = 0; n <= trunc; ++n)
    for (int r = -max_r; r <= max_r; ++r)
      if (keep(rng) < fill_permille) s.set(n, r, jacobi0::rat_of(num(rng), den(rng)));
  return s;
}

oracle::TermMap to_terms(const BiSeriesQ& s) {
  oracle::TermMap t;
  for (const auto& [n, row] : s.rows())
    for (const auto& [r, c] : row) t[{n, r}] = c;
  return t;
}

bool matches_oracle(const BiSeriesQ& s, const oracle::TermMap& t) {
  if (to_terms(s) != t) return false;
  return true;
}

}  // namespace

TEST_CASE("sigma series reproduces the product expansion table") {
  BiSeriesQ s = jacobi0::sigma_series(5);

  // rows with published coefficients
  const std::vector<std::vector<std::pair<int, long>>> rows{
      {{0, 1}, {1, -1}},
      {{-1, -1}, {0, 3}, {1, -3}, {2, 1}},
      {{-1, -3}, {0, 9}, {1, -9}, {2, 3}},
      {{-2, 1}, {-1, -9}, {0, 22}, {1, -22}, {2, 9}, {3, -1}},
  };
  for (int n = 0; n < static_cast<int>(rows.size()); ++n) {
    long nonzero = 0;
    for (const auto& [r, c] : rows[static_cast<std::size_t>(n)]) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(s.coeff(n, r) == Rat(c));
      ++nonzero;
    }
    // and nothing else in the row
    long stored = s.rows().count(n) ? static_cast<long>(s.rows().at(n).size()) : 0;
    CHECK(stored == nonzero);
  }
  const std::vector<std::pair<int, long>> row5{{-2, 9}, {-1, -51}, {0, 108},
                                               {1, -108}, {2, 51},  {3, -9}};
  for (const auto& [r, c] : row5) CHECK(s.coeff(5, r) == Rat(c));

  // The independently convolved product fixes the q^4 row.
  oracle::TermMap prod = oracle::sigma_product(5);
  const std::vector<std::pair<int, long>> row4{{-2, 3}, {-1, -22}, {0, 51},
                                               {1, -51}, {2, 22},  {3, -3}};
  for (const auto& [r, c] : row4) {
    CHECK(prod[{4, r}] == Rat(c));
    CHECK(s.coeff(4, r) == Rat(c));
  }
}

TEST_CASE("sigma series equals the brute-force product at every order") {
  BiSeriesQ s = jacobi0::sigma_series(9);
  CHECK(matches_oracle(s, oracle::sigma_product(9)));
}

TEST_CASE("two-colored partition numbers match the frozen table") {
  auto p = jacobi0::two_colored_partitions(5);
  const auto& ref = oracle::two_colored_reference();
  REQUIRE(p.size() == ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(p[i] == ref[i]);
}

TEST_CASE("exact ring axioms hold bit-exactly to common truncation") {
  std::mt19937 rng(7);
  for (int round = 0; round < 6; ++round) {
    BiSeriesQ a = random_sparse(rng, 6, 4, 300);
    BiSeriesQ b = random_sparse(rng, 6, 4, 300);
    BiSeriesQ c = random_sparse(rng, 6, 4, 300);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * BiSeriesQ::one(6) == a);
  }
}

TEST_CASE("complex ring axioms hold to relative 1e-12") {
  std::mt19937 rng(11);
  auto random_c = [&](int trunc) {
    BiSeriesC s(trunc);
    std::uniform_real_distribution<double> u(-1, 1);
    std::uniform_int_distribution<int> keep(0, 9);
    for (int n = 0; n <= trunc; ++n)
      for (int r = -3; r <= 3; ++r)
        if (keep(rng) < 4) s.set(n, r, Complex{u(rng), u(rng)});
    return s;
  };
  auto close = [](const BiSeriesC& x, const BiSeriesC& y) {
    double scale = 0, dev = 0;
    for (const auto& [n, row] : x.rows())
      for (const auto& [r, c] : row) scale = std::max(scale, std::abs(c));
    for (int n = 0; n <= std::min(x.trunc(), y.trunc()); ++n)
      for (int r = -12; r <= 12; ++r)
        dev = std::max(dev, std::abs(x.coeff(n, r) - y.coeff(n, r)));
    return dev <= 1e-12 * std::max(scale, 1.0);
  };
  for (int round = 0; round < 4; ++round) {
    BiSeriesC a = random_c(5), b = random_c(5), c = random_c(5);
    CHECK(close(a * b, b * a));
    CHECK(close((a * b) * c, a * (b * c)));
    CHECK(close(a * (b + c), a * b + a * c));
  }
}

TEST_CASE("product truncation is the minimum of the factors") {
  BiSeriesQ a = jacobi0::sigma_series(8);
  BiSeriesQ b = jacobi0::sigma_series(3);
  CHECK((a * b).trunc() == 3);
  CHECK((a + b).trunc() == 3);
}

TEST_CASE("evaluation is a homomorphism up to the geometric tail") {
  std::mt19937 rng(23);
  BiSeriesQ a = random_sparse(rng, 8, 3, 400);
  BiSeriesQ b = random_sparse(rng, 8, 3, 400);
  Complex tau{0.3, 2.0};  // |q| = e^{-4 pi}
  Complex z{0.17, 0.0};   // |zeta| = 1

  Complex lhs = (a * b).eval(tau, z);
  Complex rhs = a.eval(tau, z) * b.eval(tau, z);

  double sum_a = 0, sum_b = 0;
  for (const auto& [n, row] : a.rows())
    for (const auto& [r, c] : row) sum_a += std::abs(c.get_d());
  for (const auto& [n, row] : b.rows())
    for (const auto& [r, c] : row) sum_b += std::abs(c.get_d());
  double qa = std::exp(-2 * jacobi0::kPi * tau.imag());
  double tail = sum_a * sum_b * std::pow(qa, 9) / (1 - qa);
  // the tail estimate plus double-rounding noise from the evaluations
  CHECK(std::abs(lhs - rhs) <= tail + 1e-12 * (1 + std::abs(lhs)));
}

TEST_CASE("support profiles are subadditive under products") {
  std::mt19937 rng(31);
  for (int round = 0; round < 8; ++round) {
    BiSeriesQ a = random_sparse(rng, 7, 5, 150);
    BiSeriesQ b = random_sparse(rng, 7, 5, 150);
    BiSeriesQ ab = a * b;
    auto pa = a.minimal_profile(), pb = b.minimal_profile(),
         pab = ab.minimal_profile();
    for (int n = 0; n <= ab.trunc(); ++n) {
      int bound = 0;
      for (int i = 0; i <= n; ++i)
        bound = std::max(bound, pa[static_cast<std::size_t>(i)] +
                                    pb[static_cast<std::size_t>(n - i)]);
      CHECK(pab[static_cast<std::size_t>(n)] <= bound);
    }
  }
}

TEST_CASE("profiles: minimal from nonzero support, envelope monotone") {
  BiSeriesQ s(4);
  s.set(0, 0, Rat(1));
  s.set(1, 3, Rat(2));
  s.set(3, 1, Rat(-1));
  s.set(2, -2, Rat(0));  // explicit zero is dropped, not stored
  CHECK_FALSE(s.has(2, -2));
  auto mp = s.minimal_profile();
  CHECK(mp == std::vector<int>{0, 3, 0, 1, 0});
  auto ep = s.envelope_profile();
  CHECK(ep == std::vector<int>{0, 3, 3, 3, 3});
}

TEST_CASE("biseries JSON round-trips and stays canonical") {
  BiSeriesQ s = jacobi0::sigma_series(6);
  s.set(2, 0, Rat(7, 3));  // force a non-integer denominator through the trip
  std::string one = jacobi0::to_json(s);
  std::string two = jacobi0::to_json(s);
  CHECK(one == two);

  auto parsed = jacobi0::biseries_from_json(one);
  REQUIRE(std::holds_alternative<BiSeriesQ>(parsed));
  CHECK(std::get<BiSeriesQ>(parsed) == s);
  CHECK(jacobi0::to_json(std::get<BiSeriesQ>(parsed)) == one);

  BiSeriesC c(2);
  c.set(0, 0, Complex{1.5, -2.25});
  c.set(1, -1, Complex{0.0, 1e-17});
  std::string cj = jacobi0::to_json(c);
  auto cparsed = jacobi0::biseries_from_json(cj);
  REQUIRE(std::holds_alternative<BiSeriesC>(cparsed));
  CHECK(jacobi0::to_json(std::get<BiSeriesC>(cparsed)) == cj);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS((void)jacobi0::biseries_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS((void)jacobi0::biseries_from_json(R"({"kind":"nope"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)jacobi0::biseries_from_json(R"({"kind":"biseries","field":"exact"})"),
      std::invalid_argument);
  CHECK_THROWS_AS((void)jacobi0::biseries_from_json(
                      R"({"kind":"biseries","field":"exact","N":2,)"
                      R"("terms":[{"n":0,"r":0,"num":"1","den":"0"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)jacobi0::biseries_from_json(
                      R"({"kind":"biseries","field":"exact","N":2,)"
                      R"("terms":[{"n":0,"r":0,"num":"0.5","den":"1"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)jacobi0::fracqseries_from_json(R"({"kind":"fracqseries"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)jacobi0::fracqseries_from_json(
                      R"({"kind":"fracqseries","D":0,"terms":[]})"),
                  std::invalid_argument);
}

TEST_CASE("fractional q-series arithmetic tracks exponents exactly") {
  FracQSeries a(8, 40);
  a.set(-1, Complex{1, 0});
  a.set(3, Complex{0, 2});
  FracQSeries b(8, 24);
  b.set(2, Complex{1, 0});

  FracQSeries ab = mul(a, b);
  CHECK(ab.den() == 8);
  CHECK(std::abs(ab.coeff(1) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(ab.coeff(5) - Complex{0, 2}) < 1e-15);
  // faithful truncation: min(trunc_a + min_b, trunc_b + min_a)
  CHECK(ab.trunc_e() == std::min(40 + 2, 24 + (-1)));

  auto o = ab.ord();
  REQUIRE(o.has_value());
  CHECK(*o == Rat(1, 8));

  FracQSeries z(4, 10);
  CHECK_FALSE(z.ord().has_value());

  FracQSeries fine = a.rescaled(16);
  CHECK(fine.den() == 16);
  CHECK(std::abs(fine.coeff(-2) - Complex{1, 0}) < 1e-15);
  CHECK(fine.trunc_e() == 80);

  FracQSeries sh = a.shifted(4, Complex{2, 0});
  CHECK(std::abs(sh.coeff(3) - Complex{2, 0}) < 1e-15);
  CHECK(std::abs(sh.coeff(7) - Complex{0, 4}) < 1e-15);
}

TEST_CASE("fractional q-series evaluation matches a direct sum") {
  FracQSeries s(8, 64);
  s.set(-1, Complex{1, 0});
  s.set(4, Complex{-2, 0.5});
  s.set(9, Complex{0, -3});
  Complex tau{0.1, 1.1};
  Complex q8 = jacobi0::e2pi(tau / 8.0);
  Complex direct = jacobi0::ipow(q8, -1) + Complex{-2, 0.5} * jacobi0::ipow(q8, 4) +
                   Complex{0, -3} * jacobi0::ipow(q8, 9);
  CHECK(std::abs(s.eval(tau) - direct) <= 1e-14 * std::abs(direct));
}

TEST_CASE("fractional q-series JSON round-trips") {
  FracQSeries s(8, 17);
  s.set(-1, Complex{1, 0});
  s.set(7, Complex{0.25, -0.125});
  std::string js = jacobi0::to_json(s);
  FracQSeries back = jacobi0::fracqseries_from_json(js);
  CHECK(back.den() == 8);
  CHECK(jacobi0::to_json(back) == js);  // canonical fixed point
  CHECK(std::abs(back.coeff(7) - Complex{0.25, -0.125}) == 0.0);
}

TEST_CASE("powers respect truncation and match repeated products") {
  BiSeriesQ s = jacobi0::sigma_series(6);
  CHECK(s.pow(3) == s * s * s);
  CHECK(s.pow(0) == BiSeriesQ::one(6));

  FracQSeries d(1, 6);
  d.set(1, Complex{1, 0});
  d.set(2, Complex{-24, 0});
  FracQSeries d2 = d.pow(2);
  CHECK(std::abs(d2.coeff(2) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(d2.coeff(3) - Complex{-48, 0}) < 1e-15);
}
