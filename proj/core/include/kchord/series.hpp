#pragma once

// Truncated bivariate formal power series with exact integer coefficients,
// and the generating functions built on them. These series never converge;
// everything here is coefficient bookkeeping up to a truncation order.

#include <array>
#include <string>
#include <vector>

#include "kchord/exact.hpp"

namespace kchord {

class BivariateSeries {
 public:
  /// Zero series with coefficients for degrees 0..order1 x 0..order2.
  BivariateSeries(unsigned order1, unsigned order2,
                  std::array<std::string, 2> var_names = {"x", "y"});

  static BivariateSeries constant(unsigned order1, unsigned order2, const Integer& c,
                                  std::array<std::string, 2> var_names = {"x", "y"});
  /// c * v1^i v2^j (zero if beyond the truncation).
  static BivariateSeries monomial(unsigned order1, unsigned order2, unsigned i,
                                  unsigned j, const Integer& c,
                                  std::array<std::string, 2> var_names = {"x", "y"});

  unsigned order1() const { return order1_; }
  unsigned order2() const { return order2_; }
  const std::array<std::string, 2>& var_names() const { return var_names_; }

  /// Coefficient of v1^i v2^j; zero beyond the truncation.
  Integer coeff(unsigned i, unsigned j) const;
  Integer& at(unsigned i, unsigned j);
  const Integer& at(unsigned i, unsigned j) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  bool is_zero() const;

  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);
  BivariateSeries& operator*=(const Integer& scalar);

  /// Same coefficients restricted to smaller (or padded to larger) orders.
  BivariateSeries truncated(unsigned order1, unsigned order2) const;

  /// Multiplies by v1^di v2^dj, discarding what falls past the truncation.
  BivariateSeries shifted(unsigned di, unsigned dj) const;

  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) {
    return a += b;
  }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) {
    return a -= b;
  }
  friend BivariateSeries operator*(BivariateSeries a, const Integer& s) { return a *= s; }
  friend BivariateSeries operator-(BivariateSeries a) { return a *= Integer(-1); }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

 private:
  void require_same_orders(const BivariateSeries& other) const;
  std::size_t index(unsigned i, unsigned j) const { return i * (order2_ + 1) + j; }

  unsigned order1_;
  unsigned order2_;
  std::array<std::string, 2> var_names_;
  std::vector<Integer> coeffs_;  // row-major, (order1+1) x (order2+1)
};

/// Binary exponentiation; s^0 is the constant 1.
BivariateSeries pow(const BivariateSeries& s, unsigned exponent);

/// (1 + u)^(-r) for u with zero constant term and r >= 1.
BivariateSeries neg_binomial_expand(const BivariateSeries& u, unsigned r);

/// L_k(x, y) = 1 / (1 - y(1 + x^k y^(k-1))).
BivariateSeries L_series(unsigned k, unsigned order_x, unsigned order_y);

/// F_k(w, z): [w^n z^l] = d(n, l), for n <= n_max.
BivariateSeries F_series(unsigned k, unsigned n_max);

/// C_k(y, z): [y^n z^q] = c(n, q), for n <= n_max.
BivariateSeries C_series(unsigned k, unsigned n_max);

/// T(x, y), the fixpoint of T = 1 + x T^k - x(1-y) T; [x^m y^l] = T(m, l).
BivariateSeries T_series(unsigned k, unsigned order_x, unsigned order_y);

/// c(n, .) extracted directly from C_k without building the full series;
/// O(n^2) big-integer work per row, for rows far beyond the series route.
std::vector<Integer> components_row(unsigned k, unsigned n);

/// d(n, l, m) = [x^m y^l] T^(kn-km+1) d(n-m, 0): diagrams with exactly l
/// short chords and m non-crossing chords. Throws if m > n.
Integer triple_count(unsigned k, unsigned n, unsigned l, unsigned m);

/// The full array d(n, l, m) for one n, indexed [m][l].
std::vector<std::vector<Integer>> triple_table(unsigned k, unsigned n);

/// Closed form for k = 2:
/// (2n-2m+1)/m C(m,l) C(2n-m,l-1) d(n-m,0), and d(n,0,0) for m = 0.
Integer triple_count_k2_closed_form(unsigned n, unsigned l, unsigned m);

}  // namespace kchord
