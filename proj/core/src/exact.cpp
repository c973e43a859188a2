#include "kchord/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace kchord {

FactorialTable::FactorialTable(unsigned long bound) : bound_(bound) {
  values_.reserve(bound + 1);
  values_.emplace_back(1);
  for (unsigned long m = 1; m <= bound; ++m) {
    values_.push_back(values_.back() * m);
  }
}

const Integer& FactorialTable::operator()(unsigned long m) const {
  if (m > bound_) {
    throw std::out_of_range("FactorialTable: " + std::to_string(m) +
                            "! exceeds bound " + std::to_string(bound_));
  }
  return values_[m];
}

Integer binomial(long top, unsigned long bottom) {
  Integer result;
  Integer t = top;
  mpz_bin_ui(result.get_mpz_t(), t.get_mpz_t(), bottom);
  return result;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_str(10);
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void require_chord_size(unsigned k) {
  if (k < 2) {
    throw std::invalid_argument("chord size k must be >= 2, got " +
                                std::to_string(k));
  }
}

Integer total_diagrams(unsigned k, unsigned n) {
  require_chord_size(k);
  const unsigned long len = static_cast<unsigned long>(k) * n;
  Integer fact_len, fact_k, fact_n;
  mpz_fac_ui(fact_len.get_mpz_t(), len);
  mpz_fac_ui(fact_k.get_mpz_t(), k);
  mpz_fac_ui(fact_n.get_mpz_t(), n);
  Integer denom;
  mpz_pow_ui(denom.get_mpz_t(), fact_k.get_mpz_t(), n);
  denom *= fact_n;
  Integer result;
  mpz_divexact(result.get_mpz_t(), fact_len.get_mpz_t(), denom.get_mpz_t());
  return result;
}

Integer subpath_choices(unsigned k, long path_len, unsigned j) {
  require_chord_size(k);
  const long top = path_len - static_cast<long>(j) * (k - 1);
  if (top < static_cast<long>(j)) {
    return j == 0 ? Integer(1) : Integer(0);
  }
  return binomial(top, j);
}

Integer count_at_least(unsigned k, unsigned n, unsigned j) {
  if (j > n) return 0;
  const long path_len = static_cast<long>(k) * n;
  return total_diagrams(k, n - j) * subpath_choices(k, path_len, j);
}

Integer count_exact_short(unsigned k, unsigned n, unsigned l) {
  require_chord_size(k);
  if (l > n) return 0;
  const FactorialTable fact(std::max<unsigned long>(k, static_cast<unsigned long>(k) * n + n));
  Integer k_fact = fact(k);
  Integer sum = 0;
  for (unsigned j = l; j <= n; ++j) {
    const unsigned long free_chords = n - j;
    Integer denom;
    mpz_pow_ui(denom.get_mpz_t(), k_fact.get_mpz_t(), free_chords);
    denom *= fact(free_chords) * fact(j - l) * fact(l);
    const Integer& numer = fact(k * free_chords + j);
    Integer term;
    mpz_divexact(term.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    if ((j - l) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Integer count_zero_short(unsigned k, unsigned n) {
  require_chord_size(k);
  const long path_len = static_cast<long>(k) * n;
  Integer sum = 0;
  for (unsigned j = 0; j <= n; ++j) {
    Integer term = total_diagrams(k, n - j) * subpath_choices(k, path_len, j);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Rational mean_short_chords(unsigned k, unsigned n) {
  require_chord_size(k);
  if (n == 0) {
    throw std::invalid_argument("mean_short_chords requires n >= 1");
  }
  const long len = static_cast<long>(k) * n;
  Rational mean(Integer(n) * Integer(len - (k - 1)), binomial(len, k));
  mean.canonicalize();
  return mean;
}

}  // namespace kchord
