// Truncated bivariate series sum_{0 <= n <= N} sum_r c(n, r) q^n zeta^r with a
// finite Laurent row in zeta for each power of q.  Coefficients are either
// exact rationals or complex doubles; the truncation order N is part of the
// value and every ring operation keeps only rows that are complete.
#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "jacobi0/types.hpp"

namespace jacobi0 {

template <class F>
struct field_traits;

template <>
struct field_traits<Rat> {
  static constexpr const char* name = "exact";
  static bool is_zero(const Rat& x) { return sgn(x) == 0; }
  static Complex to_complex(const Rat& x) { return {x.get_d(), 0.0}; }
};

template <>
struct field_traits<Complex> {
  static constexpr const char* name = "complex";
  static bool is_zero(const Complex& x) { return x == Complex{}; }
  static Complex to_complex(const Complex& x) { return x; }
};

template <class F>
class BiSeries {
 public:
  using row_map = std::map<int, F>;       // r -> coefficient
  using data_map = std::map<int, row_map>;  // n -> row

  explicit BiSeries(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("truncation order must be >= 0");
  }

  static BiSeries one(int trunc) {
    BiSeries s(trunc);
    s.set(0, 0, F(1));
    return s;
  }

  int trunc() const { return trunc_; }

  void set(int n, int r, F value) {
    check_n(n);
    if (field_traits<F>::is_zero(value)) {
      auto it = data_.find(n);
      if (it != data_.end()) {
        it->second.erase(r);
        if (it->second.empty()) data_.erase(it);
      }
      return;
    }
    data_[n][r] = std::move(value);
  }

  void add(int n, int r, const F& value) {
    check_n(n);
    if (field_traits<F>::is_zero(value)) return;
    F& slot = data_[n][r];
    slot += value;
    if (field_traits<F>::is_zero(slot)) {
      data_[n].erase(r);
      if (data_[n].empty()) data_.erase(n);
    }
  }

  F coeff(int n, int r) const {
    auto it = data_.find(n);
    if (it == data_.end()) return F(0);
    auto jt = it->second.find(r);
    return jt == it->second.end() ? F(0) : jt->second;
  }

  bool has(int n, int r) const {
    auto it = data_.find(n);
    return it != data_.end() && it->second.count(r) != 0;
  }

  const data_map& rows() const { return data_; }

  long term_count() const {
    long c = 0;
    for (const auto& [n, row] : data_) c += static_cast<long>(row.size());
    return c;
  }

  BiSeries& operator+=(const BiSeries& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    auto it = data_.upper_bound(trunc_);
    data_.erase(it, data_.end());
    for (const auto& [n, row] : o.data_) {
      if (n > trunc_) break;
      for (const auto& [r, c] : row) add(n, r, c);
    }
    return *this;
  }

  BiSeries operator+(const BiSeries& o) const {
    BiSeries s = *this;
    s += o;
    return s;
  }

  BiSeries& negate() {
    for (auto& [n, row] : data_)
      for (auto& [r, c] : row) c = -c;
    return *this;
  }

  BiSeries operator-(const BiSeries& o) const {
    BiSeries t = o;
    t.negate();
    return *this + t;
  }

  BiSeries& scale(const F& s) {
    if (field_traits<F>::is_zero(s)) {
      data_.clear();
      return *this;
    }
    for (auto& [n, row] : data_)
      for (auto& [r, c] : row) c *= s;
    return *this;
  }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries out(std::min(a.trunc_, b.trunc_));
    for (const auto& [n1, row1] : a.data_) {
      if (n1 > out.trunc_) break;
      for (const auto& [n2, row2] : b.data_) {
        if (n1 + n2 > out.trunc_) break;
        for (const auto& [r1, c1] : row1)
          for (const auto& [r2, c2] : row2) out.add(n1 + n2, r1 + r2, c1 * c2);
      }
    }
    return out;
  }

  BiSeries pow(int m) const {
    if (m < 0) throw std::invalid_argument("negative series power");
    BiSeries acc = one(trunc_);
    for (int i = 0; i < m; ++i) acc = acc * *this;
    return acc;
  }

  bool operator==(const BiSeries& o) const {
    return trunc_ == o.trunc_ && data_ == o.data_;
  }

  // Truncated evaluation; the discarded tail is the caller's business (its
  // modulus is bounded by a geometric tail in |q| once N is past the support
  // growth).
  Complex eval(Complex tau, Complex z) const {
    Complex q = e2pi(tau);
    Complex zeta = e2pi(z);
    Complex total{};
    for (const auto& [n, row] : data_) {
      Complex qn = ipow(q, n);
      Complex row_sum{};
      for (const auto& [r, c] : row)
        row_sum += field_traits<F>::to_complex(c) * ipow(zeta, r);
      total += qn * row_sum;
    }
    return total;
  }

  // rho(n) = max |r| over the nonzero terms of row n (0 for an empty row),
  // for n = 0..N.
  std::vector<int> minimal_profile() const {
    std::vector<int> prof(static_cast<std::size_t>(trunc_) + 1, 0);
    for (const auto& [n, row] : data_) {
      int m = 0;
      for (const auto& [r, c] : row) m = std::max(m, std::abs(r));
      prof[static_cast<std::size_t>(n)] = m;
    }
    return prof;
  }

  // Nondecreasing hull of the minimal profile.
  std::vector<int> envelope_profile() const {
    std::vector<int> prof = minimal_profile();
    for (std::size_t i = 1; i < prof.size(); ++i)
      prof[i] = std::max(prof[i], prof[i - 1]);
    return prof;
  }

 private:
  void check_n(int n) const {
    if (n < 0 || n > trunc_) throw std::out_of_range("row index outside [0, N]");
  }

  int trunc_;
  data_map data_;
};

using BiSeriesQ = BiSeries<Rat>;
using BiSeriesC = BiSeries<Complex>;

inline BiSeriesC to_complex(const BiSeriesQ& a) {
  BiSeriesC out(a.trunc());
  for (const auto& [n, row] : a.rows())
    for (const auto& [r, c] : row) out.set(n, r, field_traits<Rat>::to_complex(c));
  return out;
}

}  // namespace jacobi0
