#pragma once

// Exact counts of linear k-chord diagrams: totals, inclusion-exclusion
// placement counts, the alternating-sum closed form for d(n, l) and the
// exact mean number of short chords. No floating point anywhere here.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kchord {

using Integer = mpz_class;
using Rational = mpq_class;

/// Memoized factorials 0!..bound!. Immutable once constructed.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned long bound);

  const Integer& operator()(unsigned long m) const;
  unsigned long bound() const { return bound_; }

 private:
  unsigned long bound_;
  std::vector<Integer> values_;
};

/// Generalized binomial coefficient; `top` may be negative
/// (C(-1, 0) = 1, C(t, b) = (-1)^b C(b - t - 1, b) for t < 0).
Integer binomial(long top, unsigned long bottom);

/// Decimal string form used by every text output.
std::string to_decimal(const Integer& value);
/// Lowest-terms form, e.g. "3/2" or "2".
std::string to_string(const Rational& value);

/// num/den in canonical form; mpq_class(num, den) alone is not reduced.
Rational ratio(const Integer& num, const Integer& den);

void require_chord_size(unsigned k);

/// N(k, n) = (kn)! / ((k!)^n n!).
Integer total_diagrams(unsigned k, unsigned n);

/// Ways of choosing j pairwise disjoint k-vertex subpaths of a path with
/// `path_len` vertices: C(path_len - j(k-1), j), zero when that is not a
/// valid choice.
Integer subpath_choices(unsigned k, long path_len, unsigned j);

/// Placements of j marked short chords times completions of the rest:
/// N(k, n-j) * C(kn - j(k-1), j).
///
/// This is the binomial-transform count sum_q C(q, j) d(n, q). A diagram
/// with q short chords is counted C(q, j) times, so this is *not* the
/// number of diagrams having at least j short chords.
Integer count_at_least(unsigned k, unsigned n, unsigned j);

/// d(n, l): diagrams with exactly l short chords, evaluated from the
/// alternating factorial sum. Returns 0 for l > n.
Integer count_exact_short(unsigned k, unsigned n, unsigned l);

/// d(n, 0) via sum_j (-1)^j N(k, n-j) rho_j with rho_j = subpath_choices.
Integer count_zero_short(unsigned k, unsigned n);

/// Mean short-chord count n(kn - (k-1)) / C(kn, k). Requires n >= 1.
Rational mean_short_chords(unsigned k, unsigned n);

}  // namespace kchord
