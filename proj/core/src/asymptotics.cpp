#include "kchord/asymptotics.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

#include "kchord/recurrence.hpp"
#include "kchord/series.hpp"

namespace kchord {

namespace {

constexpr mpfr_prec_t kPrecision = 512;

class Real {
 public:
  Real() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from(const Rational& q, mpfr_rnd_t rnd) {
    Real r;
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(v_, rnd); }

 private:
  mpfr_t v_;
};

Real add(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_sub(r.get(), a.get(), b.get(), rnd);
  return r;
}

Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r;
  mpfr_mul(r.get(), a.get(), b.get(), rnd);
  return r;
}

struct RealInterval {
  Real lo, hi;
};

Rational rational_pow(const Rational& base, unsigned e) {
  Rational result = 1;
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

using RationalSeries = std::vector<Rational>;

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalSeries series_pow(const RationalSeries& a, unsigned e) {
  RationalSeries out(a.size(), 0);
  out[0] = 1;
  for (unsigned i = 0; i < e; ++i) out = series_mul(out, a);
  return out;
}

RationalSeries series_inverse(const RationalSeries& a) {
  if (a[0] == 0) throw std::domain_error("series inverse of zero constant term");
  RationalSeries inv(a.size(), 0);
  inv[0] = 1 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * inv[n - i];
    inv[n] = -acc / a[0];
  }
  return inv;
}

// phi(u) = (1+u)^k + s(1+u) and phi'(u) = k(1+u)^(k-1) + s, with s = y - 1.
RationalSeries phi_of(const RationalSeries& u, unsigned k) {
  RationalSeries one_plus = u;
  one_plus[0] += 1;
  RationalSeries s(u.size(), 0);
  if (s.size() > 1) s[1] = 1;
  RationalSeries out = series_pow(one_plus, k);
  const auto linear = series_mul(s, one_plus);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += linear[i];
  return out;
}

RationalSeries characteristic_residual(const RationalSeries& tau, unsigned k) {
  RationalSeries one_plus = tau;
  one_plus[0] += 1;
  RationalSeries dphi = series_pow(one_plus, k - 1);
  for (auto& c : dphi) c *= k;
  if (dphi.size() > 1) dphi[1] += 1;
  RationalSeries out = phi_of(tau, k);
  const auto correction = series_mul(tau, dphi);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= correction[i];
  return out;
}

}  // namespace

Rational poisson_lambda(unsigned k, unsigned n) {
  require_chord_size(k);
  if (n == 0) throw std::invalid_argument("poisson_lambda requires n >= 1");
  Integer k_fact;
  mpz_fac_ui(k_fact.get_mpz_t(), k);
  Integer k_pow, n_pow;
  mpz_ui_pow_ui(k_pow.get_mpz_t(), k, k - 1);
  mpz_ui_pow_ui(n_pow.get_mpz_t(), n, k - 2);
  Rational lambda(k_fact, k_pow * n_pow);
  lambda.canonicalize();
  return lambda;
}

Rational factorial_moment(std::span<const Integer> row, unsigned j) {
  Integer total = 0, weighted = 0;
  for (std::size_t l = 0; l < row.size(); ++l) {
    total += row[l];
    if (l < j) continue;
    Integer falling = 1;
    for (unsigned i = 0; i < j; ++i) falling *= static_cast<unsigned long>(l - i);
    weighted += falling * row[l];
  }
  if (total <= 0) throw std::invalid_argument("factorial_moment needs a positive row sum");
  Rational m(weighted, total);
  m.canonicalize();
  return m;
}

Interval poisson_tv_distance(std::span<const Integer> row, const Rational& lambda) {
  Integer total = 0;
  for (const auto& c : row) total += c;
  if (total <= 0) throw std::invalid_argument("poisson_tv_distance needs a positive row sum");

  Real neg_lambda_lo = Real::from(-lambda, MPFR_RNDD);
  Real neg_lambda_hi = Real::from(-lambda, MPFR_RNDU);
  Real exp_lo, exp_hi;
  mpfr_exp(exp_lo.get(), neg_lambda_lo.get(), MPFR_RNDD);
  mpfr_exp(exp_hi.get(), neg_lambda_hi.get(), MPFR_RNDU);

  Real sum_lo, sum_hi;          // sum |p_l - pi_l|
  Real mass_lo, mass_hi;        // sum pi_l over the row's support
  Rational weight = 1;          // lambda^l / l!
  for (std::size_t l = 0; l < row.size(); ++l) {
    if (l > 0) weight = weight * lambda / static_cast<unsigned long>(l);
    const Rational p = ratio(row[l], total);
    const Real pi_lo = mul(exp_lo, Real::from(weight, MPFR_RNDD), MPFR_RNDD);
    const Real pi_hi = mul(exp_hi, Real::from(weight, MPFR_RNDU), MPFR_RNDU);
    mass_lo = add(mass_lo, pi_lo, MPFR_RNDD);
    mass_hi = add(mass_hi, pi_hi, MPFR_RNDU);

    const Real diff_lo = sub(Real::from(p, MPFR_RNDD), pi_hi, MPFR_RNDD);
    const Real diff_hi = sub(Real::from(p, MPFR_RNDU), pi_lo, MPFR_RNDU);
    Real abs_lo, abs_hi;
    if (mpfr_sgn(diff_lo.get()) >= 0) {
      abs_lo = diff_lo;
      abs_hi = diff_hi;
    } else if (mpfr_sgn(diff_hi.get()) <= 0) {
      mpfr_neg(abs_lo.get(), diff_hi.get(), MPFR_RNDD);
      mpfr_neg(abs_hi.get(), diff_lo.get(), MPFR_RNDU);
    } else {
      mpfr_neg(abs_hi.get(), diff_lo.get(), MPFR_RNDU);
      mpfr_max(abs_hi.get(), abs_hi.get(), diff_hi.get(), MPFR_RNDU);
    }
    sum_lo = add(sum_lo, abs_lo, MPFR_RNDD);
    sum_hi = add(sum_hi, abs_hi, MPFR_RNDU);
  }
  Real one = Real::from(Rational(1), MPFR_RNDN);
  Real tail_lo = sub(one, mass_hi, MPFR_RNDD);
  Real tail_hi = sub(one, mass_lo, MPFR_RNDU);
  if (mpfr_sgn(tail_lo.get()) < 0) mpfr_set_zero(tail_lo.get(), 1);

  Real tv_lo = add(sum_lo, tail_lo, MPFR_RNDD);
  Real tv_hi = add(sum_hi, tail_hi, MPFR_RNDU);
  mpfr_div_ui(tv_lo.get(), tv_lo.get(), 2, MPFR_RNDD);
  mpfr_div_ui(tv_hi.get(), tv_hi.get(), 2, MPFR_RNDU);
  return {tv_lo.to_double(MPFR_RNDD), tv_hi.to_double(MPFR_RNDU)};
}

namespace {

bool strictly_decreasing(const std::vector<Interval>& errors) {
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (!(errors[i].hi < errors[i - 1].lo)) return false;
  }
  return true;
}

Interval rational_interval(const Rational& q) {
  return {Real::from(q, MPFR_RNDD).to_double(MPFR_RNDD),
          Real::from(q, MPFR_RNDU).to_double(MPFR_RNDU)};
}

}  // namespace

AsymptoticReport poisson_convergence_report(unsigned k, Statistic stat,
                                            std::span<const unsigned> n_values) {
  require_chord_size(k);
  AsymptoticReport report;
  report.k = k;
  if (stat == Statistic::short_chords) {
    report.kind = ReportKind::short_poisson;
  } else if (stat == Statistic::components) {
    report.kind = ReportKind::components_poisson;
  } else {
    throw std::invalid_argument("Poisson reports cover short chords and components only");
  }
  CountTable short_table;
  if (stat == Statistic::short_chords && !n_values.empty()) {
    short_table = d_table_kp2(k, *std::max_element(n_values.begin(), n_values.end()));
  }
  for (unsigned n : n_values) {
    if (n == 0) throw std::invalid_argument("Poisson reports need n >= 1");
    const std::vector<Integer> row =
        stat == Statistic::short_chords ? short_table.rows[n] : components_row(k, n);
    const Rational lambda = poisson_lambda(k, n);
    report.n.push_back(n);
    report.exact.push_back(factorial_moment(row, 1));
    report.limit.push_back(lambda);
    report.error.push_back(poisson_tv_distance(row, lambda));
  }
  report.monotone = strictly_decreasing(report.error);
  return report;
}

AsymptoticReport nc_mean_report(unsigned k, std::span<const unsigned> n_values) {
  require_chord_size(k);
  AsymptoticReport report;
  report.k = k;
  report.kind = ReportKind::nc_mean;
  if (n_values.empty()) return report;
  const auto table =
      noncrossing_table(k, *std::max_element(n_values.begin(), n_values.end()));
  const Rational limit = rational_pow(Rational(k - 1, k), k - 1);
  for (unsigned n : n_values) {
    if (n == 0) throw std::invalid_argument("nc_mean_report needs n >= 1");
    const Rational per_chord = factorial_moment(table.rows[n], 1) / Rational(n);
    report.n.push_back(n);
    report.exact.push_back(per_chord);
    report.limit.push_back(limit);
    report.error.push_back(rational_interval(abs(per_chord - limit)));
  }
  report.monotone = strictly_decreasing(report.error);
  return report;
}

NormalParameters nc_mean_variance(unsigned k, unsigned n) {
  require_chord_size(k);
  const Rational base(k - 1, k);
  const Rational mean = rational_pow(base, k - 1) * n;
  const Rational bracket = Rational(1) - 2 * Rational(k) +
                           Rational(k - 1) * rational_pow(Rational(k, k - 1), k);
  const Rational variance = rational_pow(base, 2 * k) *
                            Rational(k, (k - 1) * (k - 1)) * bracket * n;
  return {mean, variance};
}

CharacteristicExpansion characteristic_expansion(unsigned k) {
  require_chord_size(k);
  constexpr std::size_t order = 2;
  RationalSeries tau(order + 1, 0);
  tau[0] = Rational(1, k - 1);
  if (characteristic_residual(tau, k)[0] != 0) {
    throw std::logic_error("1/(k-1) does not solve the characteristic equation");
  }
  // d/dtau [phi - tau phi'] = -tau phi''(tau) at s = 0.
  const Rational one_plus_tau0 = tau[0] + 1;
  const Rational slope = -tau[0] * Rational(k) * Rational(k - 1) *
                         rational_pow(one_plus_tau0, k - 2);
  for (std::size_t j = 1; j <= order; ++j) {
    tau[j] = 0;
    const Rational rest = characteristic_residual(tau, k)[j];
    tau[j] = -rest / slope;
  }
  const RationalSeries rho = series_mul(tau, series_inverse(phi_of(tau, k)));
  CharacteristicExpansion e;
  e.k = k;
  for (std::size_t i = 0; i <= order; ++i) {
    e.tau[i] = tau[i];
    e.rho[i] = rho[i];
  }
  return e;
}

NormalParameters normal_parameters(const CharacteristicExpansion& e, unsigned n) {
  const Rational d1 = e.rho[1] / e.rho[0];           // rho'(1) / rho(1)
  const Rational d2 = 2 * e.rho[2] / e.rho[0];       // rho''(1) / rho(1)
  return {-d1 * n, (-d2 - d1 + d1 * d1) * n};
}

}  // namespace kchord
