#include "kchord/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "kchord/parallel.hpp"

namespace kchord {

Diagram::Diagram(unsigned k, std::vector<Label> word)
    : k_(k), n_(0), word_(std::move(word)) {
  require_chord_size(k);
  if (word_.size() % k != 0) {
    throw std::invalid_argument("diagram length is not a multiple of k");
  }
  n_ = static_cast<unsigned>(word_.size() / k);
  std::vector<unsigned> count(n_, 0);
  Label next = 0;
  for (Label b : word_) {
    if (b > next || b >= n_) {
      throw std::invalid_argument("word is not in first-occurrence canonical form");
    }
    if (b == next) ++next;
    ++count[b];
  }
  for (unsigned c : count) {
    if (c != k) throw std::invalid_argument("block multiplicity differs from k");
  }
}

Diagram parse_diagram(std::string_view text, unsigned k) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) tokens.emplace_back(token);
    start = comma + 1;
  }
  if (k == 0) {
    if (tokens.empty()) throw std::invalid_argument("cannot infer k from an empty word");
    k = static_cast<unsigned>(std::count(tokens.begin(), tokens.end(), tokens.front()));
  }
  return canonicalize(k, tokens);
}

std::string format_diagram(DiagramView d) {
  std::string out;
  for (std::size_t i = 0; i < d.word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.word[i]);
  }
  return out;
}

namespace {

bool blocks_cross(std::span<const unsigned> a, std::span<const unsigned> b) {
  // Interleaving a < b < a' < b' exists iff the merged order has >= 4 runs.
  std::size_t i = 0, j = 0;
  int runs = 0;
  int last = -1;
  while (i < a.size() || j < b.size()) {
    const int side = (j == b.size() || (i < a.size() && a[i] < b[j])) ? 0 : 1;
    if (side == 0) ++i; else ++j;
    if (side != last) {
      if (++runs >= 4) return true;
      last = side;
    }
  }
  return false;
}

}  // namespace

BlockStats stats(DiagramView d) {
  BlockStats s;
  const unsigned n = d.n, k = d.k;
  if (n == 0) return s;

  std::vector<unsigned> pos(static_cast<std::size_t>(n) * k);
  std::vector<unsigned> fill(n, 0);
  for (unsigned i = 0; i < d.word.size(); ++i) {
    const Label b = d.word[i];
    pos[b * k + fill[b]++] = i;
  }
  auto block = [&](unsigned b) {
    return std::span<const unsigned>(pos.data() + b * k, k);
  };
  auto first = [&](unsigned b) { return pos[b * k]; };
  auto last = [&](unsigned b) { return pos[b * k + k - 1]; };

  // Canonical labels are ordered by first position, so a short block that
  // starts right where the previous block ended is adjacent to it.
  unsigned prev_short_end = ~0u;
  for (unsigned b = 0; b < n; ++b) {
    if (last(b) - first(b) != k - 1) continue;
    ++s.short_chords;
    if (prev_short_end == ~0u || first(b) != prev_short_end + 1) ++s.components;
    prev_short_end = last(b);
  }

  std::vector<char> crossed(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = a + 1; b < n && first(b) < last(a); ++b) {
      if (blocks_cross(block(a), block(b))) {
        ++s.crossing_pairs;
        crossed[a] = crossed[b] = 1;
      }
    }
  }

  // Innermost-outward: every block inside a span is strictly shorter.
  std::vector<unsigned> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](unsigned x, unsigned y) {
    return last(x) - first(x) < last(y) - first(y);
  });
  std::vector<char> noncrossing(n, 0);
  for (unsigned a : order) {
    if (crossed[a]) continue;
    bool ok = true;
    for (unsigned b = a + 1; b < n && first(b) < last(a); ++b) {
      if (!noncrossing[b]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      noncrossing[a] = 1;
      ++s.noncrossing;
    }
  }
  return s;
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps.size());
  for (Step st : steps) out += static_cast<char>(st);
  return out;
}

LatticePath encode_lattice_path(DiagramView d) {
  if (stats(d).noncrossing != d.n) {
    throw std::invalid_argument("lattice path encoding needs a fully non-crossing diagram");
  }
  std::vector<unsigned> remaining(d.n, d.k);
  LatticePath path;
  path.steps.reserve(d.word.size());
  for (Label b : d.word) {
    path.steps.push_back(--remaining[b] == 0 ? Step::down : Step::up);
  }
  return path;
}

unsigned count_short_factors(const LatticePath& path, unsigned k) {
  unsigned count = 0;
  unsigned ups = 0;
  for (Step st : path.steps) {
    if (st == Step::up) {
      ++ups;
    } else {
      if (ups >= k - 1) ++count;
      ups = 0;
    }
  }
  return count;
}

std::vector<Block0Range> block0_ranges(unsigned k, unsigned n) {
  require_chord_size(k);
  std::vector<Block0Range> ranges;
  if (n == 0) {
    ranges.emplace_back();
    return ranges;
  }
  const unsigned len = k * n;
  Block0Range current{0};
  auto extend = [&](auto& self, unsigned from) -> void {
    if (current.size() == k) {
      ranges.push_back(current);
      return;
    }
    const unsigned need = k - static_cast<unsigned>(current.size());
    for (unsigned p = from; p + need <= len; ++p) {
      current.push_back(p);
      self(self, p + 1);
      current.pop_back();
    }
  };
  extend(extend, 1);
  return ranges;
}

BudgetExceeded::BudgetExceeded(const Integer& required, std::uint64_t budget)
    : std::length_error("enumeration needs " + to_decimal(required) +
                        " configurations, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

void check_budget(unsigned k, unsigned n, std::uint64_t budget) {
  const Integer required = total_diagrams(k, n);
  if (required > Integer(std::to_string(budget))) {
    throw BudgetExceeded(required, budget);
  }
}

OracleHistograms::OracleHistograms(unsigned k_, unsigned n_)
    : k(k_), n(n_), short_chords(n_ + 1, 0), components(n_ + 1, 0),
      nc_short(n_ + 1, 0), triple(n_ + 1, std::vector<std::uint64_t>(n_ + 1, 0)) {}

void OracleHistograms::add(const BlockStats& s) {
  ++total;
  ++short_chords[s.short_chords];
  ++components[s.components];
  ++triple[s.noncrossing][s.short_chords];
  if (s.noncrossing == n) ++nc_short[s.short_chords];
}

void OracleHistograms::merge(const OracleHistograms& other) {
  total += other.total;
  for (unsigned i = 0; i <= n; ++i) {
    short_chords[i] += other.short_chords[i];
    components[i] += other.components[i];
    nc_short[i] += other.nc_short[i];
    for (unsigned j = 0; j <= n; ++j) triple[i][j] += other.triple[i][j];
  }
}

OracleHistograms oracle_histograms(unsigned k, unsigned n, unsigned threads,
                                   std::uint64_t budget) {
  require_chord_size(k);
  check_budget(k, n, budget);
  const auto ranges = block0_ranges(k, n);
  std::vector<OracleHistograms> partial(ranges.size(), OracleHistograms(k, n));
  parallel_for(ranges.size(), threads, [&](std::size_t i) {
    auto& h = partial[i];
    enumerate_diagrams_in(k, n, ranges[i],
                          [&](const DiagramView& d) { h.add(stats(d)); });
  });
  OracleHistograms result(k, n);
  for (const auto& h : partial) result.merge(h);
  return result;
}

std::uint64_t oracle_budget_from_env() {
  constexpr std::uint64_t default_budget = 10'000'000;
  const char* env = std::getenv("KCHORD_ORACLE_BUDGET");
  if (env == nullptr || *env == '\0') return default_budget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw std::invalid_argument("KCHORD_ORACLE_BUDGET must be a non-negative integer");
  }
  return value;
}

}  // namespace kchord
