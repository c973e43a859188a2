#pragma once

#include "kchord/exact.hpp"

#include <string_view>
#include <vector>

namespace kchord {

enum class Statistic { short_chords, components, noncrossing_short };

std::string_view statistic_name(Statistic stat);

/// Triangle of exact counts: rows[n][v] is the number of diagrams of size n
/// (chords) whose statistic equals v. Entries past the end of a row are zero.
struct CountTable {
  unsigned k = 2;
  Statistic kind = Statistic::short_chords;
  std::vector<std::vector<Integer>> rows;

  Integer at(unsigned n, unsigned value) const;
  Integer row_sum(unsigned n) const;
  unsigned n_max() const { return rows.empty() ? 0 : rows.size() - 1; }

  /// Row n with trailing zeros removed (keeps at least one entry).
  std::vector<Integer> trimmed_row(unsigned n) const;
};

/// Entrywise equality, ignoring trailing zeros in rows.
bool same_counts(const CountTable& a, const CountTable& b);

}  // namespace kchord
