#include "kchord/count_table.hpp"

#include <algorithm>

namespace kchord {

std::string_view statistic_name(Statistic stat) {
  switch (stat) {
    case Statistic::short_chords:
      return "short";
    case Statistic::components:
      return "components";
    case Statistic::noncrossing_short:
      return "nc-short";
  }
  return "?";
}

Integer CountTable::at(unsigned n, unsigned value) const {
  if (n >= rows.size() || value >= rows[n].size()) return 0;
  return rows[n][value];
}

Integer CountTable::row_sum(unsigned n) const {
  Integer sum = 0;
  if (n < rows.size()) {
    for (const auto& v : rows[n]) sum += v;
  }
  return sum;
}

std::vector<Integer> CountTable::trimmed_row(unsigned n) const {
  if (n >= rows.size()) return {Integer(0)};
  std::vector<Integer> row = rows[n];
  while (row.size() > 1 && row.back() == 0) row.pop_back();
  if (row.empty()) row.emplace_back(0);
  return row;
}

bool same_counts(const CountTable& a, const CountTable& b) {
  const auto n = std::max(a.rows.size(), b.rows.size());
  for (unsigned i = 0; i < n; ++i) {
    const auto width = std::max(i < a.rows.size() ? a.rows[i].size() : 0,
                                i < b.rows.size() ? b.rows[i].size() : 0);
    for (unsigned v = 0; v < width; ++v) {
      if (a.at(i, v) != b.at(i, v)) return false;
    }
  }
  return true;
}

}  // namespace kchord
