#pragma once

// Limit parameters of the short-chord, component and non-crossing
// distributions, and diagnostics comparing exact finite-n tables to them.

#include <array>
#include <span>
#include <vector>

#include "kchord/count_table.hpp"
#include "kchord/exact.hpp"

namespace kchord {

/// Closed interval with outward-rounded double endpoints.
struct Interval {
  double lo = 0;
  double hi = 0;
};

/// lambda = k! k^(1-k) n^(2-k).
Rational poisson_lambda(unsigned k, unsigned n);

/// sum_l l(l-1)...(l-j+1) row[l] / sum_l row[l]. Throws on a zero row.
Rational factorial_moment(std::span<const Integer> row, unsigned j);

/// Total-variation distance between row / sum(row) and Poisson(lambda),
/// including the Poisson mass beyond the end of the row. The bound is
/// rigorous: e^-lambda and every partial sum are evaluated in MPFR with
/// directed rounding.
Interval poisson_tv_distance(std::span<const Integer> row, const Rational& lambda);

enum class ReportKind { short_poisson, components_poisson, nc_mean };

struct AsymptoticReport {
  unsigned k = 2;
  ReportKind kind = ReportKind::short_poisson;
  std::vector<unsigned> n;
  std::vector<Rational> exact;   // per-n exact statistic
  std::vector<Rational> limit;   // per-n limit value
  std::vector<Interval> error;   // per-n distance to the limit
  bool monotone = false;         // error strictly decreasing, interval-certified
};

/// For each n: exact mean, lambda(k, n), and the TV distance to
/// Poisson(lambda). Short-chord rows come from the second recurrence,
/// component rows from direct coefficient extraction of C_k.
AsymptoticReport poisson_convergence_report(unsigned k, Statistic stat,
                                            std::span<const unsigned> n_values);

/// For each n: exact mean of T(n, .) divided by n against ((k-1)/k)^(k-1).
AsymptoticReport nc_mean_report(unsigned k, std::span<const unsigned> n_values);

struct NormalParameters {
  Rational mean;
  Rational variance;
};

/// mu = ((k-1)/k)^(k-1) n,
/// sigma^2 = ((k-1)/k)^(2k) k/(k-1)^2 (1 - 2k + (k-1)(k/(k-1))^k) n.
NormalParameters nc_mean_variance(unsigned k, unsigned n);

/// Taylor coefficients about y = 1 (powers of y-1) of the characteristic
/// root tau(y) of phi(u) - u phi'(u) = 0, phi(u) = (1+u)^k - (1-y)(1+u),
/// and of rho(y) = tau / phi(tau).
struct CharacteristicExpansion {
  unsigned k = 2;
  std::array<Rational, 3> tau;
  std::array<Rational, 3> rho;
};

/// Undetermined coefficients, order by order; no numeric root finding.
CharacteristicExpansion characteristic_expansion(unsigned k);

/// mu = -rho'/rho, sigma^2 = -rho''/rho - rho'/rho + (rho'/rho)^2, times n.
NormalParameters normal_parameters(const CharacteristicExpansion& e, unsigned n);

}  // namespace kchord
