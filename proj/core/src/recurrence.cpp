#include "kchord/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace kchord {

namespace {

using Poly = std::vector<Integer>;

Poly truncated_mul(const Poly& a, const Poly& b, std::size_t order) {
  Poly out(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

CountTable d_table_kp1(unsigned k, unsigned n_max) {
  require_chord_size(k);
  CountTable t{k, Statistic::short_chords, {}};
  t.rows.push_back({Integer(1)});
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<Integer> row(n + 1);
    row[0] = count_zero_short(k, n);
    for (unsigned l = 1; l <= n; ++l) {
      Integer rhs = Integer(static_cast<long>(k) * n - static_cast<long>(l) * (k - 1)) *
                        t.at(n - 1, l - 1) +
                    Integer(static_cast<long>(l) * (k - 1)) * t.at(n - 1, l);
      if (mpz_divisible_ui_p(rhs.get_mpz_t(), l) == 0) {
        throw std::logic_error("first recurrence produced a non-integer at n=" +
                               std::to_string(n) + ", l=" + std::to_string(l));
      }
      mpz_divexact_ui(row[l].get_mpz_t(), rhs.get_mpz_t(), l);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Integer balls_in_bins_coeff(unsigned j, unsigned p, unsigned l, unsigned k) {
  require_chord_size(k);
  // f(x) = (1-x)^(1-k) - 1 = sum_{m>=1} C(k-2+m, m) x^m, truncated at x^j.
  Poly f(j + 1, 0);
  for (unsigned m = 1; m <= j; ++m) f[m] = binomial(k - 2 + m, m);
  Poly power(j + 1, 0);
  power[0] = 1;
  for (unsigned i = 0; i < p; ++i) power = truncated_mul(power, f, j);
  return binomial(l + p, p) * power[j];
}

Integer kp2_coefficient(unsigned n, unsigned l, unsigned p, unsigned k) {
  require_chord_size(k);
  if (p < 1 || p > k - 1) {
    throw std::invalid_argument("kp2_coefficient requires 1 <= p <= k-1");
  }
  const long forest = static_cast<long>(k) * n - static_cast<long>(k - 1) * (l + p);
  Integer sum = 0;
  for (unsigned h = 1; h <= k - p; ++h) {
    for (unsigned f = 0; f <= k - p - h; ++f) {
      sum += binomial(forest + f - 1, f) * balls_in_bins_coeff(k - h - f, p, l, k);
    }
  }
  return sum;
}

Integer kp2_home_forest_coefficient(unsigned n, unsigned l, unsigned k) {
  require_chord_size(k);
  const long forest = static_cast<long>(k) * n - static_cast<long>(k - 1) * l;
  Integer sum = 0;
  for (unsigned h = 1; h <= k - 1; ++h) {
    sum += binomial(forest + k - h - 1, k - h);
  }
  return sum;
}

CountTable d_table_kp2(unsigned k, unsigned n_max) {
  require_chord_size(k);
  CountTable t{k, Statistic::short_chords, {}};
  t.rows.push_back({Integer(1)});
  for (unsigned n = 0; n < n_max; ++n) {
    std::vector<Integer> row(n + 2, 0);
    for (unsigned l = 0; l <= n + 1; ++l) {
      Integer value = l > 0 ? t.at(n, l - 1) : Integer(0);
      if (l <= n) value += kp2_home_forest_coefficient(n, l, k) * t.at(n, l);
      for (unsigned p = 1; p <= k - 1 && l + p <= n; ++p) {
        value += kp2_coefficient(n, l, p, k) * t.at(n, l + p);
      }
      row[l] = std::move(value);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

CountTable noncrossing_table(unsigned k, unsigned m_max) {
  require_chord_size(k);
  CountTable t{k, Statistic::noncrossing_short, {}};
  t.rows.push_back({Integer(1)});
  // powers[j][m] = [x^m] T^(j+1) as a polynomial in y, filled row by row.
  std::vector<std::vector<Poly>> powers(k);
  powers[0].push_back({Integer(1)});
  for (unsigned j = 1; j < k; ++j) powers[j].push_back({Integer(1)});

  for (unsigned m = 0; m < m_max; ++m) {
    // Rows 0..m of T are known; extend T^2..T^k to x-degree m.
    for (unsigned j = 1; j < k; ++j) {
      if (powers[j].size() > m) continue;
      Poly acc(m + 1, 0);
      for (unsigned i = 0; i <= m; ++i) {
        const Poly& a = t.rows[i];
        const Poly& b = powers[j - 1][m - i];
        for (std::size_t x = 0; x < a.size(); ++x) {
          if (a[x] == 0) continue;
          for (std::size_t y = 0; y < b.size(); ++y) {
            if (x + y < acc.size()) acc[x + y] += a[x] * b[y];
          }
        }
      }
      powers[j].push_back(std::move(acc));
    }
    const Poly& conv = powers[k - 1][m];
    std::vector<Integer> row(m + 2, 0);
    for (unsigned l = 0; l <= m + 1; ++l) {
      Integer value = l < conv.size() ? conv[l] : Integer(0);
      value -= t.at(m, l);
      if (l >= 1) value += t.at(m, l - 1);
      row[l] = std::move(value);
    }
    t.rows.push_back(std::move(row));
    powers[0].push_back(t.rows.back());
  }
  return t;
}

Integer fuss_catalan(unsigned k, unsigned m) {
  require_chord_size(k);
  Integer c = binomial(static_cast<long>(k) * m, m);
  Integer result;
  mpz_divexact_ui(result.get_mpz_t(), c.get_mpz_t(), (k - 1) * m + 1);
  return result;
}

CountTable d_table_closed_form(unsigned k, unsigned n_max) {
  require_chord_size(k);
  CountTable t{k, Statistic::short_chords, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    std::vector<Integer> row(n + 1);
    for (unsigned l = 0; l <= n; ++l) row[l] = count_exact_short(k, n, l);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace kchord
