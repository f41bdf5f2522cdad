// Weight-k actions on functions of (tau, z), the graded product, the
// two-term coefficient recurrence, and the filtration classifier driven by
// support envelopes.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jacobi0/biseries.hpp"
#include "jacobi0/types.hpp"

namespace jacobi0 {

using Evaluator = std::function<Complex(Complex tau, Complex z)>;

// (phi |' M)(tau, z) = (c tau + d)^{-k} phi(M tau, z / (c tau + d)).
Evaluator slash_prime(Evaluator phi, int k, const UnimodularMatrix& M);

// (phi |'' X)(tau, z) =
//   (psi(X) exp(eta(l tau + m)(z + (l tau + m)/2)))^k phi(tau, z + l tau + m).
Evaluator slash_dprime(Evaluator phi, int k, const RationalPair& X);

// The scalar by which |'' composition differs from addition of indices:
// (psi(X) psi(X') psi(X + X') e(det(X'; X) / 2))^k.
Complex dprime_cocycle(const RationalPair& X, const RationalPair& Xp, int k);

// A weight-graded function: evaluator plus (optionally) an exact normalized
// series generator.
class Form {
 public:
  Form(int weight, Evaluator ev,
       std::function<BiSeriesQ(int)> series_gen = nullptr, std::string label = {});

  int weight() const { return weight_; }
  const std::string& label() const { return label_; }

  Complex operator()(Complex tau, Complex z) const { return ev_(tau, z); }
  const Evaluator& evaluator() const { return ev_; }

  bool has_series() const { return static_cast<bool>(series_gen_); }
  BiSeriesQ normalized_series(int trunc) const;

  // sigma itself (weight -1) and the constant 1 (weight 0).
  static Form sigma();
  static Form one();

 private:
  int weight_;
  Evaluator ev_;
  std::function<BiSeriesQ(int)> series_gen_;
  std::string label_;
};

// Pointwise product; weights add, series multiply when both factors have one.
Form graded_mul(const Form& f, const Form& g);

// Check c(n, r) = (-1)^{lambda k} c(n - r lambda - k lambda(lambda+1)/2,
// r + lambda k) over every stored term and every supplied lambda whose
// partner row stays inside the window.
struct CoeffRelationReport {
  long checked = 0;
  std::vector<std::array<long, 3>> violations;  // (n, r, lambda)
  bool pass() const { return violations.empty(); }
};

CoeffRelationReport coeff_relation_check(const BiSeriesQ& s, int k,
                                         const std::vector<long>& lambdas);

// Filtration slot from the envelope profile: the least m >= 1 with
// n - rho_env(n) + k/8 >= -m for all n in the window.  The window must be
// wide enough to certify stability: the defect n - rho_env(n) has to be
// nondecreasing at the window edge, otherwise the classification is refused.
struct FiltrationResult {
  bool admissible = false;
  int index = 0;        // valid only when admissible
  Rat min_defect{0};    // min over the window of n - rho_env(n)
  std::string reason;   // set when !admissible
};

FiltrationResult filtration_index(const BiSeriesQ& normalized, int k);

}  // namespace jacobi0
