#pragma once

// Linear k-chord diagrams: canonical words, exhaustive enumeration and the
// per-diagram statistics (short chords, components, non-crossing chords).
//
// A diagram of n chords of size k is a word of length kn over 0..n-1 in
// which every label occurs exactly k times and labels are numbered in order
// of first occurrence.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kchord/exact.hpp"

namespace kchord {

using Label = std::uint32_t;

struct DiagramView {
  unsigned k = 2;
  unsigned n = 0;
  std::span<const Label> word;
};

class Diagram {
 public:
  /// Validates that `word` is already canonical.
  Diagram(unsigned k, std::vector<Label> word);

  unsigned k() const { return k_; }
  unsigned n() const { return n_; }
  std::span<const Label> word() const { return word_; }
  DiagramView view() const { return {k_, n_, word_}; }
  operator DiagramView() const { return view(); }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  unsigned k_;
  unsigned n_;
  std::vector<Label> word_;
};

/// Relabels `word` by order of first occurrence. Throws
/// std::invalid_argument when some symbol does not occur exactly k times.
template <class Symbol>
Diagram canonicalize(unsigned k, std::span<const Symbol> word) {
  require_chord_size(k);
  if (word.size() % k != 0) {
    throw std::invalid_argument("word length " + std::to_string(word.size()) +
                                " is not a multiple of k=" + std::to_string(k));
  }
  std::map<Symbol, Label> relabel;
  std::vector<unsigned> multiplicity;
  std::vector<Label> out;
  out.reserve(word.size());
  for (const auto& s : word) {
    auto [it, fresh] = relabel.try_emplace(s, static_cast<Label>(relabel.size()));
    if (fresh) multiplicity.push_back(0);
    ++multiplicity[it->second];
    out.push_back(it->second);
  }
  for (Label b = 0; b < multiplicity.size(); ++b) {
    if (multiplicity[b] != k) {
      throw std::invalid_argument(
          "block " + std::to_string(b) + " occurs " +
          std::to_string(multiplicity[b]) + " times, expected k=" +
          std::to_string(k));
    }
  }
  return Diagram(k, std::move(out));
}

template <class Symbol>
Diagram canonicalize(unsigned k, const std::vector<Symbol>& word) {
  return canonicalize(k, std::span<const Symbol>(word));
}

/// Parses the comma-separated text form ("0,1,0,1"); symbols are arbitrary
/// tokens. With k == 0 the chord size is inferred from the multiplicity of
/// the first symbol.
Diagram parse_diagram(std::string_view text, unsigned k = 0);
std::string format_diagram(DiagramView d);

struct BlockStats {
  unsigned short_chords = 0;
  unsigned components = 0;
  unsigned noncrossing = 0;
  unsigned crossing_pairs = 0;

  friend bool operator==(const BlockStats&, const BlockStats&) = default;
};

/// Short chords occupy k consecutive positions; components are maximal runs
/// of adjacent short chords. Blocks A, B cross iff a < b < a' < b' for some
/// a, a' in A and b, b' in B. A block is non-crossing when no block crosses
/// it and every block inside its span [min, max] is non-crossing as well.
BlockStats stats(DiagramView d);

enum class Step : char { up = 'U', down = 'D' };

/// U = (0, +1), D = (+1, 0).
struct LatticePath {
  std::vector<Step> steps;

  std::string to_string() const;
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

/// Maps each vertex to U unless it is the last vertex of its block (D).
/// Only defined for fully non-crossing diagrams; throws otherwise.
LatticePath encode_lattice_path(DiagramView d);

/// Number of U^(k-1) D factors in the path.
unsigned count_short_factors(const LatticePath& path, unsigned k);

/// Positions of block 0. Position 0 is always first; the remaining k-1
/// positions select one of C(kn-1, k-1) disjoint sub-ranges.
using Block0Range = std::vector<unsigned>;

std::vector<Block0Range> block0_ranges(unsigned k, unsigned n);

namespace detail {

template <class Visitor>
class DiagramFiller {
 public:
  DiagramFiller(unsigned k, unsigned n, Visitor& visit)
      : k_(k), n_(n), word_(static_cast<std::size_t>(k) * n),
        preset_(word_.size(), false), count_(n, 0), visit_(visit) {}

  void preset_block0(const Block0Range& positions) {
    for (unsigned p : positions) {
      word_.at(p) = 0;
      preset_.at(p) = true;
    }
    count_[0] = k_;
    used_ = 1;
  }

  void run() { fill(0); }

 private:
  void fill(std::size_t pos) {
    while (pos < word_.size() && preset_[pos]) ++pos;
    if (pos == word_.size()) {
      visit_(DiagramView{k_, n_, word_});
      return;
    }
    for (Label b = 0; b < used_; ++b) {
      if (count_[b] < k_) {
        word_[pos] = b;
        ++count_[b];
        fill(pos + 1);
        --count_[b];
      }
    }
    if (used_ < n_) {
      const Label b = used_++;
      word_[pos] = b;
      count_[b] = 1;
      fill(pos + 1);
      count_[b] = 0;
      --used_;
    }
  }

  unsigned k_;
  unsigned n_;
  std::vector<Label> word_;
  std::vector<bool> preset_;
  std::vector<unsigned> count_;
  Label used_ = 0;
  Visitor& visit_;
};

}  // namespace detail

/// Visits every canonical diagram of (k, n) once, in lexicographic order of
/// the word. The view passed to the visitor is only valid during the call.
template <class Visitor>
void enumerate_diagrams(unsigned k, unsigned n, Visitor&& visit) {
  require_chord_size(k);
  detail::DiagramFiller<std::remove_reference_t<Visitor>> filler(k, n, visit);
  filler.run();
}

/// Visits the diagrams whose block 0 occupies exactly `range`, in
/// lexicographic order.
template <class Visitor>
void enumerate_diagrams_in(unsigned k, unsigned n, const Block0Range& range,
                           Visitor&& visit) {
  require_chord_size(k);
  if (n == 0) {
    if (!range.empty()) throw std::invalid_argument("n=0 has no block 0");
    detail::DiagramFiller<std::remove_reference_t<Visitor>> filler(k, n, visit);
    filler.run();
    return;
  }
  if (range.size() != k || range.front() != 0) {
    throw std::invalid_argument("block-0 range must hold k positions starting at 0");
  }
  detail::DiagramFiller<std::remove_reference_t<Visitor>> filler(k, n, visit);
  filler.preset_block0(range);
  filler.run();
}

/// Brute-force histograms over all diagrams of one (k, n).
struct OracleHistograms {
  unsigned k = 2;
  unsigned n = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> short_chords;  // [l]
  std::vector<std::uint64_t> components;    // [q]
  std::vector<std::uint64_t> nc_short;      // [l], fully non-crossing only
  std::vector<std::vector<std::uint64_t>> triple;  // [m][l]

  OracleHistograms() = default;
  OracleHistograms(unsigned k, unsigned n);
  void add(const BlockStats& s);
  void merge(const OracleHistograms& other);
};

/// Raised when an exhaustive run would visit more than the configured
/// number of configurations.
class BudgetExceeded : public std::length_error {
 public:
  BudgetExceeded(const Integer& required, std::uint64_t budget);
  const Integer& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  Integer required_;
  std::uint64_t budget_;
};

void check_budget(unsigned k, unsigned n, std::uint64_t budget);

/// Enumerates every diagram of (k, n), split over block-0 sub-ranges.
/// Throws BudgetExceeded if N(k, n) exceeds `budget`.
OracleHistograms oracle_histograms(unsigned k, unsigned n, unsigned threads,
                                   std::uint64_t budget);

/// Default oracle budget (10^7), overridden by KCHORD_ORACLE_BUDGET.
std::uint64_t oracle_budget_from_env();

}  // namespace kchord
