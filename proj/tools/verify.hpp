#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kchord::cli {

struct Mismatch {
  std::string stat;         // d, c, T, triple, mean, ...
  unsigned k = 0;
  unsigned n = 0;
  std::string coordinate;   // e.g. "l=2" or "m=3,l=1"
  std::string route_a, value_a;
  std::string route_b, value_b;

  std::string to_string() const;
};

struct VerifyResult {
  std::vector<std::string> passed;    // one line per agreeing check
  std::vector<std::string> skipped;   // e.g. oracle rows over budget
  std::optional<Mismatch> mismatch;   // first disagreement found

  bool ok() const { return !mismatch.has_value(); }
};

/// Cross-checks every route for k at rows 0..n_max: closed form, both
/// recurrences and series for d; series and direct extraction for c;
/// recurrence, series and Fuss-Catalan sums for T; the triple statistic and
/// its marginals; the exact mean; and brute force wherever N(k, n) fits the
/// budget. Stops at the first mismatch.
VerifyResult verify_all(unsigned k, unsigned n_max, unsigned threads, std::uint64_t budget);

}  // namespace kchord::cli
