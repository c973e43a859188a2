#pragma once

// Row-by-row construction of the count triangles from recurrences alone:
//
//   short chords, first form:
//     l d(n,l) = (kn - l(k-1)) d(n-1,l-1) + l(k-1) d(n-1,l)
//   short chords, second form (new chord anchored past the right end):
//     d(n+1,l) = d(n,l-1) + d(n,l) sum_h C(kn-(k-1)l+k-h-1, k-h)
//              + sum_{p=1}^{k-1} C(n,l,p,k) d(n,l+p)
//   non-crossing diagrams by short chords:
//     T(m+1,l) = [x^m y^l] T^k - T(m,l) + T(m,l-1),  T(0,0) = 1

#include "kchord/count_table.hpp"
#include "kchord/exact.hpp"

namespace kchord {

/// First recurrence. It is vacuous at l = 0, so column 0 of every row is
/// seeded from count_zero_short; all other columns come from the recurrence.
CountTable d_table_kp1(unsigned k, unsigned n_max);

/// [x^j y^p] (1 + y - y(1-x)^(1-k))^(-l-1): j identical balls into p chosen
/// bins out of l+p, each bin non-empty and split into k-1 sub-bins.
Integer balls_in_bins_coeff(unsigned j, unsigned p, unsigned l, unsigned k);

/// Coefficient of d(n, l+p) in the second recurrence, 1 <= p <= k-1.
Integer kp2_coefficient(unsigned n, unsigned l, unsigned p, unsigned k);

/// Coefficient of d(n, l) in the second recurrence.
Integer kp2_home_forest_coefficient(unsigned n, unsigned l, unsigned k);

/// Second recurrence, built from the single seed d(0,0) = 1.
CountTable d_table_kp2(unsigned k, unsigned n_max);

/// Non-crossing triangle T(m, l) via iterated k-fold convolution.
CountTable noncrossing_table(unsigned k, unsigned m_max);

/// C(km, m) / ((k-1)m + 1).
Integer fuss_catalan(unsigned k, unsigned m);

/// Closed-form triangle (alternating sum), for cross-checks.
CountTable d_table_closed_form(unsigned k, unsigned n_max);

}  // namespace kchord
