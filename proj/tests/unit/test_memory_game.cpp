#include <random>

#include "doctest.h"
#include "kchord/diagram.hpp"
#include "kchord/memory_game.hpp"
#include "kchord/recurrence.hpp"
#include "kchord/series.hpp"
#include "naive_oracle.hpp"

using namespace kchord;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Board& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(static_cast<int>(e.first), static_cast<int>(e.second));
  return out;
}

}  // namespace

TEST_SUITE("memory_game") {

TEST_CASE("board builders") {
  CHECK(make_path(6).vertex_count() == 6);
  CHECK(make_path(6).edge_count() == 5);
  CHECK(make_grid(2, 2).vertex_count() == 4);
  CHECK(make_grid(2, 2).edge_count() == 4);
  CHECK(make_grid(3, 3).edge_count() == 12);
  CHECK(make_torus(3, 4).edge_count() == 24);
  CHECK(make_grid(3, 3).adjacent(0, 1));
  CHECK_FALSE(make_grid(3, 3).adjacent(0, 4));
  CHECK_THROWS_AS(make_torus(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(Board(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Board(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Board(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("board specs") {
  CHECK(parse_board_spec("path:9").edge_count() == 8);
  CHECK(parse_board_spec("grid:2x3").vertex_count() == 6);
  CHECK(parse_board_spec("torus:3x3").edge_count() == 18);
  CHECK_THROWS_AS(parse_board_spec("grid:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_board_spec("ring:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_board_spec("path:x"), std::invalid_argument);
}

TEST_CASE("connected k-subgraph counts") {
  CHECK(connected_k_subgraphs(make_grid(2, 2), 2) == 4);
  CHECK(connected_k_subgraphs(make_grid(3, 3), 3) == 22);
  for (unsigned k = 2; k <= 5; ++k)
    for (unsigned n = 1; n <= 5; ++n) CHECK(connected_k_subgraphs(make_path(k * n), k) == k * n - (k - 1));
}

TEST_CASE("connected k-subgraph counts match subset brute force") {
  std::mt19937_64 rng(77);
  std::vector<Board> boards{make_grid(3, 4), make_grid(4, 4), make_torus(3, 4), make_path(10)};
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned v = 6 + rng() % 8;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < v; ++a)
      for (Vertex b = a + 1; b < v; ++b)
        if (rng() % 3 == 0) edges.emplace_back(a, b);
    boards.emplace_back(v, edges);
  }
  for (const auto& g : boards)
    for (unsigned k = 2; k <= 5; ++k)
      CHECK(connected_k_subgraphs(g, k) ==
            Integer(std::to_string(naive::connected_subsets(static_cast<int>(g.vertex_count()), edge_pairs(g), static_cast<int>(k)))));
}

TEST_CASE("mean polyominoes") {
  CHECK(mean_polyominoes(make_grid(2, 2), 2, 2) == Rational(4, 3));
  for (unsigned k = 2; k <= 4; ++k)
    for (unsigned n = 1; n <= 6; ++n) CHECK(mean_polyominoes(make_path(k * n), k, n) == mean_short_chords(k, n));
  CHECK_THROWS_AS(mean_polyominoes(make_grid(2, 2), 3, 1), std::invalid_argument);
}

TEST_CASE("placement stats on representative boards") {
  // one straight tromino on the top row of a 3x3 grid
  const auto g3 = make_grid(3, 3);
  const std::vector<Label> single{0, 0, 0, 1, 2, 1, 2, 1, 2};
  CHECK(placement_stats(g3, 3, single) == PlacementStats{1, 1});
  // 3x5 grid: two stacked trominoes touch, a third stands apart
  const auto g5 = make_grid(3, 5);
  const std::vector<Label> two_groups{0, 0, 0, 3, 2,  //
                                      1, 1, 1, 4, 2,  //
                                      3, 4, 3, 4, 2};
  CHECK(placement_stats(g5, 3, two_groups) == PlacementStats{3, 2});
  const Placement p(g5, 3, two_groups);
  CHECK(placement_stats(p) == PlacementStats{3, 2});
  CHECK(p.n() == 5);
  CHECK_THROWS_AS(Placement(g3, 3, {0, 0, 0, 1, 1, 1, 2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Placement(g3, 3, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("path boards reduce to diagram statistics") {
  for (unsigned k = 2; k <= 3; ++k) {
    for (unsigned n = 1; n <= 4; ++n) {
      const auto g = make_path(k * n);
      enumerate_diagrams(k, n, [&](DiagramView d) {
        const auto s = stats(d);
        const auto p = placement_stats(g, k, d.word);
        REQUIRE(p.polyominoes == s.short_chords);
        REQUIRE(p.components == s.components);
      });
    }
  }
}

TEST_CASE("exhaustive distribution") {
  const auto h = exhaustive_distribution(make_grid(2, 2), 2, 2);
  CHECK(h.polyomino_marginal() == std::map<unsigned, std::uint64_t>{{0, 1}, {2, 2}});
  CHECK(h.total() == 3);
  CHECK(h.mean_polyominoes() == Rational(4, 3));
  CHECK(exhaustive_distribution(make_grid(3, 3), 3, 3).total() == 280);
  CHECK_THROWS_AS(exhaustive_distribution(make_grid(3, 6), 3, 6, 1000), BudgetExceeded);
}

TEST_CASE("exhaustive marginals on paths equal the count tables") {
  for (unsigned k = 2; k <= 3; ++k) {
    const unsigned n_max = 5;
    const auto d = d_table_kp2(k, n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
      const auto h = exhaustive_distribution(make_path(k * n), k, n, 10'000'000, 2);
      const auto c = components_row(k, n);
      for (const auto& [l, count] : h.polyomino_marginal()) CHECK(Integer(std::to_string(count)) == d.at(n, l));
      for (const auto& [q, count] : h.component_marginal()) CHECK(Integer(std::to_string(count)) == c.at(q));
      CHECK(Integer(std::to_string(h.total())) == total_diagrams(k, n));
    }
  }
}

TEST_CASE("exact mean identity on boards") {
  const std::vector<std::pair<Board, unsigned>> cases{
      {make_grid(2, 2), 2}, {make_grid(2, 3), 2}, {make_grid(3, 4), 2}, {make_grid(3, 3), 3},
      {make_grid(2, 6), 3}, {make_torus(3, 4), 3}, {make_grid(2, 4), 4}, {make_torus(3, 3), 3}};
  for (const auto& [g, k] : cases) {
    const unsigned n = g.vertex_count() / k;
    CHECK(exhaustive_distribution(g, k, n).mean_polyominoes() == mean_polyominoes(g, k, n));
  }
}

TEST_CASE("SplitMix64") {
  SplitMix64 r(1234567);
  CHECK(r.next() == 6457827717110365317ULL);
  CHECK(r.next() == 3203168211198807973ULL);
  CHECK(r.next() == 9817491932198370423ULL);
  SplitMix64 b(9);
  for (int i = 0; i < 1000; ++i) CHECK(b.below(7) < 7);
  CHECK(SplitMix64::derive(5, 0).next() != SplitMix64::derive(5, 1).next());
}

TEST_CASE("sampling is deterministic and thread independent") {
  const auto g = make_grid(3, 4);
  const auto a = sample_placements(g, 2, 6, 5000, 42, 1);
  const auto b = sample_placements(g, 2, 6, 5000, 42, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.histogram == b.histogram);
  CHECK(a.rng == "splitmix64");
  const auto one = sample_placements(g, 2, 6, 1, 7);
  CHECK(one.histogram == sample_placements(g, 2, 6, 1, 7).histogram);
  CHECK(one.samples == 1);
  CHECK(sample_placements(g, 2, 6, 5000, 43).mean != a.mean);
}

TEST_CASE("Monte Carlo estimates bracket exact means") {
  const auto grid = sample_placements(make_grid(2, 2), 2, 2, 100000, 1);
  CHECK(std::fabs(grid.mean - 4.0 / 3.0) < 3 * grid.standard_error);
  const auto path = sample_placements(make_path(6), 3, 2, 100000, 1);
  CHECK(std::fabs(path.mean - 0.4) < 3 * path.standard_error);
  std::uint64_t count = 0;
  for (const auto& [value, c] : path.histogram) count += c;
  CHECK(count == 100000);
}

}
