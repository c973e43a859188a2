#include "oeis.hpp"

#include <stdexcept>

#include "kchord/recurrence.hpp"
#include "kchord/series.hpp"

namespace kchord::cli {

const std::vector<OeisSequence>& known_sequences() {
  static const std::vector<OeisSequence> sequences = {
      {"A334056", "linear 3-chord diagrams by short chords", 1},
      {"A334057", "linear 4-chord diagrams by short chords", 1},
      {"A334058", "linear 5-chord diagrams by short chords", 1},
      {"A334059", "linear chord diagrams (k=2) by connected components", 1},
      {"A334060", "linear 3-chord diagrams by connected components", 1},
      {"A334061", "linear 4-chord diagrams by connected components", 1},
      {"A091320", "non-crossing 3-chord diagrams by short chords", 1},
      {"A334062", "non-crossing 4-chord diagrams by short chords", 1},
      {"A334063", "non-crossing 5-chord diagrams by short chords", 1},
      {"A062993", "Fuss-Catalan numbers C(km,m)/((k-1)m+1), one k per slice", 0},
  };
  return sequences;
}

const OeisSequence& find_sequence(const std::string& id) {
  for (const auto& s : known_sequences()) {
    if (s.id == id) return s;
  }
  throw std::invalid_argument("unknown sequence id '" + id + "'");
}

namespace {

struct Source {
  Statistic stat;
  unsigned k;
};

Source source_of(const std::string& id) {
  if (id == "A334056") return {Statistic::short_chords, 3};
  if (id == "A334057") return {Statistic::short_chords, 4};
  if (id == "A334058") return {Statistic::short_chords, 5};
  if (id == "A334059") return {Statistic::components, 2};
  if (id == "A334060") return {Statistic::components, 3};
  if (id == "A334061") return {Statistic::components, 4};
  if (id == "A091320") return {Statistic::noncrossing_short, 3};
  if (id == "A334062") return {Statistic::noncrossing_short, 4};
  if (id == "A334063") return {Statistic::noncrossing_short, 5};
  throw std::invalid_argument("unknown sequence id '" + id + "'");
}

std::vector<Integer> row_terms(Statistic stat, unsigned k, unsigned n) {
  switch (stat) {
    case Statistic::short_chords: {
      std::vector<Integer> row(n + 1);
      for (unsigned l = 0; l <= n; ++l) row[l] = count_exact_short(k, n, l);
      return row;
    }
    case Statistic::components: {
      auto row = components_row(k, n);
      while (row.size() > 1 && row.back() == 0) row.pop_back();
      return row;
    }
    case Statistic::noncrossing_short:
      break;
  }
  throw std::logic_error("row_terms: non-crossing rows come from the table");
}

}  // namespace

std::vector<Integer> oeis_terms(const std::string& id, unsigned slice_k, std::size_t count) {
  find_sequence(id);
  std::vector<Integer> terms;
  if (id == "A062993") {
    require_chord_size(slice_k);
    for (unsigned m = 0; terms.size() < count; ++m) terms.push_back(fuss_catalan(slice_k, m));
    return terms;
  }
  const Source src = source_of(id);
  if (src.stat == Statistic::noncrossing_short) {
    unsigned m_max = 1;
    while (m_max * (m_max + 1) / 2 < count) ++m_max;
    const auto table = noncrossing_table(src.k, m_max);
    for (unsigned m = 1; m <= m_max && terms.size() < count; ++m) {
      for (unsigned l = 1; l <= m && terms.size() < count; ++l) terms.push_back(table.at(m, l));
    }
    return terms;
  }
  for (unsigned n = 1; terms.size() < count; ++n) {
    for (auto& v : row_terms(src.stat, src.k, n)) {
      if (terms.size() == count) break;
      terms.push_back(std::move(v));
    }
  }
  return terms;
}

}  // namespace kchord::cli
