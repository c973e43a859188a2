#include <set>

#include "doctest.h"
#include "kchord/diagram.hpp"
#include "kchord/recurrence.hpp"
#include "naive_oracle.hpp"

using namespace kchord;

TEST_SUITE("diagram") {

TEST_CASE("canonicalize relabels by first occurrence") {
  const std::vector<char> w{'b', 'a', 'a', 'b'};
  CHECK(canonicalize(2, w).word()[0] == 0);
  const auto d = canonicalize(2, w);
  CHECK(std::vector<Label>(d.word().begin(), d.word().end()) == std::vector<Label>{0, 1, 1, 0});
  const std::vector<int> same{0, 0, 0};
  const auto e = canonicalize(3, same);
  CHECK(e.n() == 1);
  CHECK(std::vector<Label>(e.word().begin(), e.word().end()) == std::vector<Label>{0, 0, 0});
}

TEST_CASE("canonicalize rejects bad multiplicities") {
  CHECK_THROWS_AS(canonicalize(2, std::vector<char>{'x', 'x', 'y', 'y', 'y'}), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize(2, std::vector<char>{'x', 'y', 'y', 'y'}), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize(1, std::vector<char>{'x'}), std::invalid_argument);
}

TEST_CASE("Diagram constructor insists on canonical words") {
  CHECK_NOTHROW(Diagram(2, {0, 1, 0, 1}));
  CHECK_THROWS_AS(Diagram(2, {1, 0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram(2, {0, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("parse and format") {
  const auto d = parse_diagram("0,1,0,1");
  CHECK(d.k() == 2);
  CHECK(d.n() == 2);
  CHECK(format_diagram(d) == "0,1,0,1");
  CHECK(format_diagram(parse_diagram("b, a, a, b")) == "0,1,1,0");
  CHECK(parse_diagram("", 3).n() == 0);
  CHECK_THROWS_AS(parse_diagram("0,1,1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram("0,,1"), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  auto count = [](unsigned k, unsigned n) {
    std::uint64_t c = 0;
    enumerate_diagrams(k, n, [&](DiagramView) { ++c; });
    return c;
  };
  CHECK(count(3, 2) == 10);
  CHECK(count(2, 3) == 15);
  CHECK(count(5, 0) == 1);
  for (unsigned k = 2; k <= 4; ++k)
    for (unsigned n = 0; n <= 5 && k * n <= 16; ++n)
      CHECK(Integer(std::to_string(count(k, n))) == total_diagrams(k, n));
}

TEST_CASE("enumeration is lexicographic, canonical and duplicate free") {
  std::vector<std::vector<Label>> seen;
  enumerate_diagrams(3, 3, [&](DiagramView d) {
    seen.emplace_back(d.word.begin(), d.word.end());
    CHECK_NOTHROW(Diagram(3, seen.back()));
  });
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  CHECK(seen.size() == 280);
}

TEST_CASE("block-0 sub-ranges partition the enumeration") {
  for (unsigned k = 2; k <= 4; ++k) {
    for (unsigned n = 1; n <= 4; ++n) {
      std::set<std::vector<Label>> all, from_ranges;
      enumerate_diagrams(k, n, [&](DiagramView d) { all.emplace(d.word.begin(), d.word.end()); });
      std::uint64_t visits = 0;
      const auto ranges = block0_ranges(k, n);
      CHECK(Integer(ranges.size()) == binomial(k * n - 1, k - 1));
      for (const auto& r : ranges) {
        enumerate_diagrams_in(k, n, r, [&](DiagramView d) {
          ++visits;
          from_ranges.emplace(d.word.begin(), d.word.end());
        });
      }
      CHECK(visits == all.size());
      CHECK(from_ranges == all);
    }
  }
}

TEST_CASE("stats examples") {
  CHECK(stats(parse_diagram("0,0,0,1,1,1")) == BlockStats{2, 1, 2, 0});
  CHECK(stats(parse_diagram("0,1,0,1")) == BlockStats{0, 0, 0, 1});
  CHECK(stats(parse_diagram("", 4)) == BlockStats{0, 0, 0, 0});
  // two adjacent short chords, an enclosing chord and two crossing chords
  const auto d = parse_diagram("A,B,B,B,B,C,C,C,C,A,A,A,D,E,D,E,D,E,D,E", 4);
  const auto s = stats(d);
  CHECK(s.short_chords == 2);
  CHECK(s.components == 1);
  CHECK(s.noncrossing == 3);
  CHECK(s.crossing_pairs == 1);
}

TEST_CASE("a block enclosing a crossing is not non-crossing") {
  // 0 spans the crossing pair 1,2; 3 is short and outside
  const auto s = stats(parse_diagram("0,1,2,1,2,0,3,3"));
  CHECK(s.noncrossing == 1);
  CHECK(s.short_chords == 1);
}

TEST_CASE("stats agree with the naive definitions on every small diagram") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n * k <= 12; ++n) {
      naive::for_each_partition(k, n, [&](const naive::Blocks& b) {
        const auto w = naive::word(b, k * n);
        const auto got = stats(DiagramView{static_cast<unsigned>(k), static_cast<unsigned>(n), w});
        const auto want = naive::stats(b);
        REQUIRE(got.short_chords == static_cast<unsigned>(want.short_chords));
        REQUIRE(got.components == static_cast<unsigned>(want.components));
        REQUIRE(got.noncrossing == static_cast<unsigned>(want.noncrossing));
      });
    }
  }
}

TEST_CASE("per-diagram inequalities") {
  for (unsigned k = 2; k <= 4; ++k) {
    for (unsigned n = 0; n <= 5 && k * n <= 15; ++n) {
      enumerate_diagrams(k, n, [&](DiagramView d) {
        const auto s = stats(d);
        REQUIRE(s.components <= s.short_chords);
        REQUIRE(s.short_chords <= s.noncrossing);
        REQUIRE(s.noncrossing <= n);
        if (s.crossing_pairs == 0) REQUIRE(s.noncrossing == n);
      });
    }
  }
}

TEST_CASE("non-crossing set survives block deletion and mirroring") {
  // Deleting a block never costs another block its non-crossing status, and
  // the statistic does not depend on reading direction.
  for (unsigned k = 2; k <= 3; ++k) {
    enumerate_diagrams(k, k == 2 ? 5 : 4, [&](DiagramView d) {
      const auto base = stats(d);
      std::vector<Label> mirrored(d.word.rbegin(), d.word.rend());
      REQUIRE(stats(canonicalize(k, mirrored)) == base);
      for (Label victim = 0; victim < d.n; ++victim) {
        std::vector<Label> rest;
        for (Label x : d.word)
          if (x != victim) rest.push_back(x);
        REQUIRE(stats(canonicalize(k, rest)).noncrossing + 1 >= base.noncrossing);
      }
    });
  }
}

TEST_CASE("lattice path examples") {
  CHECK(encode_lattice_path(parse_diagram("0,0,0,1,1,1")).to_string() == "UUDUUD");
  CHECK(encode_lattice_path(parse_diagram("0,1,1,0")).to_string() == "UUDD");
  CHECK_THROWS_AS(encode_lattice_path(parse_diagram("0,1,0,1")), std::invalid_argument);
  CHECK(encode_lattice_path(parse_diagram("", 3)).to_string().empty());

  std::set<std::string> k2n2;
  enumerate_diagrams(2, 2, [&](DiagramView d) {
    if (stats(d).noncrossing == 2) k2n2.insert(encode_lattice_path(d).to_string());
  });
  CHECK(k2n2 == std::set<std::string>{"UUDD", "UDUD"});
}

namespace {

// Every non-crossing partition of `length` positions into k-blocks, built
// from the block holding the first position. That block's vertices are
// followed by k-1 inner gaps and a tail, each itself non-crossing. Labels
// are local; canonicalize before use.
std::vector<std::vector<unsigned>> noncrossing_words(unsigned k, unsigned length) {
  if (length == 0) return {{}};
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> sizes(k);
  std::function<void(unsigned, unsigned)> split = [&](unsigned part, unsigned left) {
    if (part + 1 == k) {
      sizes[part] = left;
      std::vector<std::vector<std::vector<unsigned>>> fills;
      for (unsigned g : sizes) fills.push_back(noncrossing_words(k, g));
      std::vector<unsigned> word;
      std::function<void(unsigned, unsigned)> glue = [&](unsigned p, unsigned next_label) {
        if (p == k) {
          out.push_back(word);
          return;
        }
        for (const auto& w : fills[p]) {
          const auto mark = word.size();
          word.push_back(0);
          unsigned top = next_label;
          for (unsigned x : w) {
            word.push_back(next_label + x);
            top = std::max(top, next_label + x + 1);
          }
          glue(p + 1, top);
          word.resize(mark);
        }
      };
      glue(0, 1);
      return;
    }
    for (unsigned g = 0; g <= left; g += k) {
      sizes[part] = g;
      split(part + 1, left - g);
    }
  };
  split(0, length - k);
  return out;
}

}  // namespace

TEST_CASE("lattice path is injective with Fuss-Catalan image") {
  for (unsigned k = 2; k <= 4; ++k) {
    for (unsigned n = 0; n <= 6; ++n) {
      const auto words = noncrossing_words(k, k * n);
      std::set<std::vector<Label>> diagrams;
      std::set<LatticePath> image;
      for (const auto& w : words) {
        const auto d = canonicalize(k, w);
        REQUIRE(stats(d).noncrossing == n);
        diagrams.emplace(d.word().begin(), d.word().end());
        const auto p = encode_lattice_path(d);
        REQUIRE(std::count(p.steps.begin(), p.steps.end(), Step::down) == static_cast<long>(n));
        image.insert(p);
      }
      CHECK(diagrams.size() == words.size());
      CHECK(Integer(diagrams.size()) == fuss_catalan(k, n));
      CHECK(image.size() == diagrams.size());
    }
  }
}

TEST_CASE("non-crossing generator agrees with filtering the full enumeration") {
  for (unsigned k = 2; k <= 3; ++k) {
    for (unsigned n = 0; n * k <= 12; ++n) {
      std::set<std::vector<Label>> filtered, generated;
      enumerate_diagrams(k, n, [&](DiagramView d) {
        if (stats(d).noncrossing == n) filtered.emplace(d.word.begin(), d.word.end());
      });
      for (const auto& w : noncrossing_words(k, k * n)) {
        const auto d = canonicalize(k, w);
        generated.emplace(d.word().begin(), d.word().end());
      }
      CHECK(filtered == generated);
    }
  }
}

TEST_CASE("k=2 peaks count short chords") {
  for (unsigned n = 1; n <= 7; ++n) {
    enumerate_diagrams(2, n, [&](DiagramView d) {
      const auto s = stats(d);
      if (s.noncrossing != n) return;
      REQUIRE(count_short_factors(encode_lattice_path(d), 2) == s.short_chords);
    });
  }
}

TEST_CASE("oracle histograms match the naive oracle") {
  for (unsigned k = 2; k <= 4; ++k) {
    for (unsigned n = 0; n * k <= 12; ++n) {
      const auto got = oracle_histograms(k, n, 2, 10'000'000);
      const auto want = naive::histograms(static_cast<int>(k), static_cast<int>(n));
      CHECK(got.total == want.total);
      CHECK(got.short_chords == want.short_chords);
      CHECK(got.components == want.components);
      CHECK(got.nc_short == want.nc_short);
      CHECK(got.triple == want.triple);
    }
  }
}

TEST_CASE("oracle histograms do not depend on thread count") {
  const auto one = oracle_histograms(3, 4, 1, 10'000'000);
  const auto four = oracle_histograms(3, 4, 4, 10'000'000);
  CHECK(one.short_chords == four.short_chords);
  CHECK(one.components == four.components);
  CHECK(one.triple == four.triple);
}

TEST_CASE("oracle budget") {
  CHECK_THROWS_AS(oracle_histograms(3, 6, 1, 1000), BudgetExceeded);
  try {
    check_budget(3, 6, 1000);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == Integer("190590400"));
    CHECK(e.budget() == 1000);
  }
  CHECK_NOTHROW(check_budget(3, 2, 10));
}

}
