#include "kchord/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kchord {

BivariateSeries::BivariateSeries(unsigned order1, unsigned order2,
                                 std::array<std::string, 2> var_names)
    : order1_(order1),
      order2_(order2),
      var_names_(std::move(var_names)),
      coeffs_(static_cast<std::size_t>(order1 + 1) * (order2 + 1), 0) {}

BivariateSeries BivariateSeries::constant(unsigned order1, unsigned order2,
                                          const Integer& c,
                                          std::array<std::string, 2> var_names) {
  BivariateSeries s(order1, order2, std::move(var_names));
  s.at(0, 0) = c;
  return s;
}

BivariateSeries BivariateSeries::monomial(unsigned order1, unsigned order2, unsigned i,
                                          unsigned j, const Integer& c,
                                          std::array<std::string, 2> var_names) {
  BivariateSeries s(order1, order2, std::move(var_names));
  if (i <= order1 && j <= order2) s.at(i, j) = c;
  return s;
}

Integer BivariateSeries::coeff(unsigned i, unsigned j) const {
  if (i > order1_ || j > order2_) return 0;
  return coeffs_[index(i, j)];
}

Integer& BivariateSeries::at(unsigned i, unsigned j) {
  if (i > order1_ || j > order2_) throw std::out_of_range("series index past truncation");
  return coeffs_[index(i, j)];
}

const Integer& BivariateSeries::at(unsigned i, unsigned j) const {
  if (i > order1_ || j > order2_) throw std::out_of_range("series index past truncation");
  return coeffs_[index(i, j)];
}

bool BivariateSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void BivariateSeries::require_same_orders(const BivariateSeries& other) const {
  if (order1_ != other.order1_ || order2_ != other.order2_) {
    throw std::invalid_argument("series truncation orders differ");
  }
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  require_same_orders(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  require_same_orders(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

BivariateSeries BivariateSeries::truncated(unsigned order1, unsigned order2) const {
  BivariateSeries out(order1, order2, var_names_);
  for (unsigned i = 0; i <= std::min(order1, order1_); ++i) {
    for (unsigned j = 0; j <= std::min(order2, order2_); ++j) {
      out.at(i, j) = at(i, j);
    }
  }
  return out;
}

BivariateSeries BivariateSeries::shifted(unsigned di, unsigned dj) const {
  BivariateSeries out(order1_, order2_, var_names_);
  for (unsigned i = 0; i + di <= order1_; ++i) {
    for (unsigned j = 0; j + dj <= order2_; ++j) {
      out.at(i + di, j + dj) = at(i, j);
    }
  }
  return out;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  a.require_same_orders(b);
  struct Term {
    unsigned i, j;
    const Integer* c;
  };
  std::vector<Term> nonzero_b;
  for (unsigned i = 0; i <= b.order1_; ++i) {
    for (unsigned j = 0; j <= b.order2_; ++j) {
      const auto& c = b.at(i, j);
      if (c != 0) nonzero_b.push_back({i, j, &c});
    }
  }
  BivariateSeries out(a.order1_, a.order2_, a.var_names_);
  for (unsigned i = 0; i <= a.order1_; ++i) {
    for (unsigned j = 0; j <= a.order2_; ++j) {
      const auto& c = a.at(i, j);
      if (c == 0) continue;
      for (const auto& t : nonzero_b) {
        if (i + t.i > a.order1_ || j + t.j > a.order2_) continue;
        mpz_addmul(out.at(i + t.i, j + t.j).get_mpz_t(), c.get_mpz_t(), t.c->get_mpz_t());
      }
    }
  }
  return out;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  return a.order1_ == b.order1_ && a.order2_ == b.order2_ && a.coeffs_ == b.coeffs_;
}

BivariateSeries pow(const BivariateSeries& s, unsigned exponent) {
  auto result =
      BivariateSeries::constant(s.order1(), s.order2(), 1, s.var_names());
  BivariateSeries base = s;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BivariateSeries neg_binomial_expand(const BivariateSeries& u, unsigned r) {
  if (r < 1) throw std::invalid_argument("neg_binomial_expand needs r >= 1");
  if (u.at(0, 0) != 0) {
    throw std::invalid_argument("neg_binomial_expand needs a zero constant term");
  }
  auto result = BivariateSeries::constant(u.order1(), u.order2(), 1, u.var_names());
  auto power = result;
  // u^i has no terms below total degree i.
  for (unsigned i = 1; i <= u.order1() + u.order2(); ++i) {
    power = power * u;
    if (power.is_zero()) break;
    Integer c = binomial(static_cast<long>(r) + i - 1, i);
    if (i % 2 == 1) c = -c;
    result += power * c;
  }
  return result;
}

BivariateSeries L_series(unsigned k, unsigned order_x, unsigned order_y) {
  require_chord_size(k);
  // 1/(1 - v) with v = y + x^k y^k.
  BivariateSeries v = BivariateSeries::monomial(order_x, order_y, 0, 1, 1);
  v += BivariateSeries::monomial(order_x, order_y, k, k, 1);
  return neg_binomial_expand(-v, 1);
}

BivariateSeries F_series(unsigned k, unsigned n_max) {
  require_chord_size(k);
  const std::array<std::string, 2> names{"w", "z"};
  // u = w(1 - z)
  BivariateSeries u = BivariateSeries::monomial(n_max, n_max, 1, 0, 1, names);
  u -= BivariateSeries::monomial(n_max, n_max, 1, 1, 1, names);
  BivariateSeries total(n_max, n_max, names);
  for (unsigned j = 0; j <= n_max; ++j) {
    auto term = neg_binomial_expand(u, k * j + 1).shifted(j, 0);
    total += term * total_diagrams(k, j);
  }
  return total;
}

BivariateSeries C_series(unsigned k, unsigned n_max) {
  require_chord_size(k);
  const std::array<std::string, 2> names{"y", "z"};
  auto one = BivariateSeries::constant(n_max, n_max, 1, names);
  // numerator 1 + a, a = -y(1-z); denominator 1 + b, b = -y^2(1-z)
  BivariateSeries a = BivariateSeries::monomial(n_max, n_max, 1, 1, 1, names);
  a -= BivariateSeries::monomial(n_max, n_max, 1, 0, 1, names);
  BivariateSeries b = BivariateSeries::monomial(n_max, n_max, 2, 1, 1, names);
  b -= BivariateSeries::monomial(n_max, n_max, 2, 0, 1, names);
  BivariateSeries total(n_max, n_max, names);
  for (unsigned j = 0; j <= n_max; ++j) {
    const unsigned r = k * j + 1;
    auto ratio = pow(one + a, r) * neg_binomial_expand(b, r);
    total += ratio.shifted(j, 0) * total_diagrams(k, j);
  }
  return total;
}

BivariateSeries T_series(unsigned k, unsigned order_x, unsigned order_y) {
  require_chord_size(k);
  const auto one = BivariateSeries::constant(order_x, order_y, 1);
  // x(1 - y)
  auto x_one_minus_y = BivariateSeries::monomial(order_x, order_y, 1, 0, 1) -
                       BivariateSeries::monomial(order_x, order_y, 1, 1, 1);
  BivariateSeries t = one;
  for (unsigned step = 0; step <= order_x; ++step) {
    t = one + pow(t, k).shifted(1, 0) - x_one_minus_y * t;
  }
  return t;
}

std::vector<Integer> components_row(unsigned k, unsigned n) {
  require_chord_size(k);
  std::vector<Integer> totals(n + 1);
  for (unsigned j = 0; j <= n; ++j) totals[j] = total_diagrams(k, j);
  // c(n, .) = sum_e A_e (z-1)^e
  std::vector<Integer> by_power(n + 1, 0);
  for (unsigned p = 0; p <= n; ++p) {
    for (unsigned s = 0; p + 2 * s <= n; ++s) {
      const unsigned j = n - p - 2 * s;
      const long r = static_cast<long>(k) * j + 1;
      Integer term = totals[j] * binomial(r, p) * binomial(r + s - 1, s);
      if (s % 2 == 1) {
        by_power[p + s] -= term;
      } else {
        by_power[p + s] += term;
      }
    }
  }
  std::vector<Integer> row(n + 1, 0);
  for (unsigned e = 0; e <= n; ++e) {
    if (by_power[e] == 0) continue;
    for (unsigned q = 0; q <= e; ++q) {
      Integer term = by_power[e] * binomial(e, q);
      if ((e - q) % 2 == 1) {
        row[q] -= term;
      } else {
        row[q] += term;
      }
    }
  }
  return row;
}

Integer triple_count(unsigned k, unsigned n, unsigned l, unsigned m) {
  require_chord_size(k);
  if (m > n) throw std::invalid_argument("triple_count requires m <= n");
  if (l > m) return 0;
  const auto t = T_series(k, m, l);
  const auto power = pow(t, k * (n - m) + 1);
  return power.coeff(m, l) * count_zero_short(k, n - m);
}

std::vector<std::vector<Integer>> triple_table(unsigned k, unsigned n) {
  require_chord_size(k);
  const auto t = T_series(k, n, n);
  std::vector<std::vector<Integer>> table(n + 1, std::vector<Integer>(n + 1, 0));
  for (unsigned m = 0; m <= n; ++m) {
    const Integer zero_short = count_zero_short(k, n - m);
    if (zero_short == 0) continue;
    const auto power = pow(t.truncated(m, m), k * (n - m) + 1);
    for (unsigned l = 0; l <= m; ++l) table[m][l] = power.coeff(m, l) * zero_short;
  }
  return table;
}

Integer triple_count_k2_closed_form(unsigned n, unsigned l, unsigned m) {
  if (m > n) throw std::invalid_argument("triple count requires m <= n");
  if (m == 0) return l == 0 ? count_zero_short(2, n) : Integer(0);
  if (l == 0) return 0;
  Integer numer = Integer(2L * n - 2L * m + 1) * binomial(m, l) *
                  binomial(2L * n - m, l - 1) * count_zero_short(2, n - m);
  if (mpz_divisible_ui_p(numer.get_mpz_t(), m) == 0) {
    throw std::logic_error("k=2 triple closed form is not integral");
  }
  Integer result;
  mpz_divexact_ui(result.get_mpz_t(), numer.get_mpz_t(), m);
  return result;
}

}  // namespace kchord
