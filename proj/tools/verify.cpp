#include "verify.hpp"

#include "kchord/diagram.hpp"
#include "kchord/exact.hpp"
#include "kchord/recurrence.hpp"
#include "kchord/series.hpp"

namespace kchord::cli {

std::string Mismatch::to_string() const {
  return "MISMATCH stat=" + stat + " k=" + std::to_string(k) + " n=" + std::to_string(n) +
         " " + coordinate + " route_a=" + route_a + " value_a=" + value_a +
         " route_b=" + route_b + " value_b=" + value_b;
}

namespace {

class Checker {
 public:
  Checker(unsigned k, VerifyResult& result) : k_(k), result_(result) {}

  bool failed() const { return result_.mismatch.has_value(); }

  bool equal(const std::string& stat, unsigned n, const std::string& coordinate,
             const std::string& route_a, const Integer& a, const std::string& route_b,
             const Integer& b) {
    if (failed()) return false;
    if (a == b) return true;
    result_.mismatch = Mismatch{stat, k_, n, coordinate, route_a, to_decimal(a),
                                route_b, to_decimal(b)};
    return false;
  }

  bool equal(const std::string& stat, unsigned n, const std::string& coordinate,
             const std::string& route_a, const Rational& a, const std::string& route_b,
             const Rational& b) {
    if (failed()) return false;
    if (a == b) return true;
    result_.mismatch = Mismatch{stat, k_, n, coordinate, route_a, kchord::to_string(a),
                                route_b, kchord::to_string(b)};
    return false;
  }

  bool tables(const std::string& stat, const std::string& index, const CountTable& a,
              const std::string& route_a, const CountTable& b, const std::string& route_b) {
    for (unsigned n = 0; n <= std::max(a.n_max(), b.n_max()); ++n) {
      const auto width = std::max(n < a.rows.size() ? a.rows[n].size() : 0,
                                  n < b.rows.size() ? b.rows[n].size() : 0);
      for (unsigned v = 0; v < width; ++v) {
        if (!equal(stat, n, index + "=" + std::to_string(v), route_a, a.at(n, v), route_b,
                   b.at(n, v))) {
          return false;
        }
      }
    }
    return true;
  }

  void pass(std::string line) {
    if (!failed()) result_.passed.push_back(std::move(line));
  }

 private:
  unsigned k_;
  VerifyResult& result_;
};

CountTable from_series(const BivariateSeries& s, unsigned k, Statistic kind, unsigned n_max) {
  CountTable t{k, kind, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    std::vector<Integer> row(n + 1);
    for (unsigned v = 0; v <= n; ++v) row[v] = s.coeff(n, v);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Integer from_u64(std::uint64_t v) { return Integer(std::to_string(v)); }

}  // namespace

VerifyResult verify_all(unsigned k, unsigned n_max, unsigned threads, std::uint64_t budget) {
  require_chord_size(k);
  VerifyResult result;
  Checker check(k, result);
  const std::string upto = " for n <= " + std::to_string(n_max);

  // Short chords: four analytic routes.
  const auto closed = d_table_closed_form(k, n_max);
  const auto kp1 = d_table_kp1(k, n_max);
  const auto kp2 = d_table_kp2(k, n_max);
  const auto f_series = from_series(F_series(k, n_max), k, Statistic::short_chords, n_max);
  if (check.tables("d", "l", closed, "closed_form", kp1, "kp1") &&
      check.tables("d", "l", closed, "closed_form", kp2, "kp2") &&
      check.tables("d", "l", closed, "closed_form", f_series, "series")) {
    check.pass("d(n,l): closed_form = kp1 = kp2 = series" + upto);
  }
  bool sums_ok = true;
  for (unsigned n = 0; n <= n_max && sums_ok; ++n) {
    sums_ok = check.equal("d_row_sum", n, "sum", "closed_form", closed.row_sum(n), "total",
                          total_diagrams(k, n)) &&
              check.equal("d", n, "l=0", "closed_form", closed.at(n, 0), "zero_short",
                          count_zero_short(k, n));
  }
  if (sums_ok) check.pass("row sums = N(k,n); column 0 = zero-short inclusion-exclusion" + upto);

  bool means_ok = true;
  for (unsigned n = 1; n <= n_max && means_ok; ++n) {
    Integer weighted = 0;
    for (unsigned l = 0; l <= n; ++l) weighted += closed.at(n, l) * l;
    means_ok = check.equal("mean", n, "sum_l", "mean_times_total",
                           mean_short_chords(k, n) * Rational(total_diagrams(k, n)),
                           "weighted_sum", Rational(weighted));
  }
  if (means_ok) check.pass("mean_short_chords * N = sum l d(n,l)" + upto);

  // Components.
  const auto c_series = from_series(C_series(k, n_max), k, Statistic::components, n_max);
  CountTable c_direct{k, Statistic::components, {}};
  for (unsigned n = 0; n <= n_max; ++n) c_direct.rows.push_back(components_row(k, n));
  bool comps_ok = check.tables("c", "q", c_series, "series", c_direct, "extraction");
  for (unsigned n = 0; n <= n_max && comps_ok; ++n) {
    comps_ok = check.equal("c_row_sum", n, "sum", "series", c_series.row_sum(n), "total",
                           total_diagrams(k, n)) &&
               check.equal("c", n, "q=0", "series", c_series.at(n, 0), "closed_form",
                           closed.at(n, 0));
  }
  if (comps_ok) check.pass("c(n,q): series = extraction, row sums and q=0 column" + upto);

  // Non-crossing.
  const auto nc = noncrossing_table(k, n_max);
  const auto nc_series = from_series(T_series(k, n_max, n_max), k,
                                     Statistic::noncrossing_short, n_max);
  bool nc_ok = check.tables("T", "l", nc, "recurrence", nc_series, "series");
  for (unsigned m = 0; m <= n_max && nc_ok; ++m) {
    nc_ok = check.equal("T_row_sum", m, "sum", "recurrence", nc.row_sum(m), "fuss_catalan",
                        fuss_catalan(k, m));
    if (k == 2 && m >= 1) {
      for (unsigned l = 1; l <= m && nc_ok; ++l) {
        Integer narayana = binomial(m, l) * binomial(m, l - 1);
        mpz_divexact_ui(narayana.get_mpz_t(), narayana.get_mpz_t(), m);
        nc_ok = check.equal("T", m, "l=" + std::to_string(l), "recurrence", nc.at(m, l),
                            "narayana", narayana);
      }
    }
  }
  if (nc_ok) {
    check.pass(std::string("T(m,l): recurrence = series, row sums = Fuss-Catalan") +
               (k == 2 ? ", Narayana" : "") + " for m <= " + std::to_string(n_max));
  }

  // Triple statistic.
  std::vector<std::vector<std::vector<Integer>>> triples(n_max + 1);
  bool triple_ok = true;
  for (unsigned n = 0; n <= n_max && triple_ok; ++n) {
    triples[n] = triple_table(k, n);
    Integer all = 0;
    for (unsigned l = 0; l <= n && triple_ok; ++l) {
      Integer marginal = 0;
      for (unsigned m = 0; m <= n; ++m) {
        marginal += triples[n][m][l];
        if (k == 2) {
          triple_ok = triple_ok &&
                      check.equal("triple", n, "m=" + std::to_string(m) + ",l=" +
                                               std::to_string(l),
                                  "series", triples[n][m][l], "k2_closed_form",
                                  triple_count_k2_closed_form(n, l, m));
        }
      }
      all += marginal;
      triple_ok = triple_ok && check.equal("triple_marginal", n, "l=" + std::to_string(l),
                                           "series", marginal, "closed_form", closed.at(n, l));
    }
    triple_ok = triple_ok && check.equal("triple_total", n, "sum", "series", all, "total",
                                         total_diagrams(k, n)) &&
                check.equal("triple", n, "m=" + std::to_string(n), "series",
                            triples[n][n][n], "recurrence", nc.at(n, n));
  }
  if (triple_ok) {
    check.pass(std::string("d(n,l,m): marginals = d(n,l), sums = N(k,n)") +
               (k == 2 ? ", k=2 closed form" : "") + upto);
  }

  // Brute force.
  unsigned oracle_max = 0;
  bool any_oracle = false;
  for (unsigned n = 0; n <= n_max && !check.failed(); ++n) {
    OracleHistograms h;
    try {
      h = oracle_histograms(k, n, threads, budget);
    } catch (const BudgetExceeded& e) {
      result.skipped.push_back("oracle skipped for n=" + std::to_string(n) + ": N(k,n) = " +
                               to_decimal(e.required()) + " exceeds budget " +
                               std::to_string(budget));
      break;
    }
    bool ok = true;
    for (unsigned v = 0; v <= n && ok; ++v) {
      const std::string at = std::to_string(v);
      ok = check.equal("d", n, "l=" + at, "oracle", from_u64(h.short_chords[v]),
                       "closed_form", closed.at(n, v)) &&
           check.equal("c", n, "q=" + at, "oracle", from_u64(h.components[v]), "series",
                       c_series.at(n, v)) &&
           check.equal("T", n, "l=" + at, "oracle", from_u64(h.nc_short[v]), "recurrence",
                       nc.at(n, v));
      for (unsigned m = 0; m <= n && ok; ++m) {
        ok = check.equal("triple", n, "m=" + std::to_string(m) + ",l=" + at, "oracle",
                         from_u64(h.triple[m][v]), "series", triples[n][m][v]);
      }
    }
    if (ok) {
      oracle_max = n;
      any_oracle = true;
    }
  }
  if (any_oracle && !check.failed()) {
    check.pass("oracle = analytic routes on d, c, T, d(n,l,m) for n <= " +
               std::to_string(oracle_max));
  }
  return result;
}

}  // namespace kchord::cli
