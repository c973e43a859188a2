#pragma once

// Generalized game of memory: n sets of k matching cards on the vertices of
// a graph. A polyomino is a set whose k vertices induce a connected subgraph.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kchord/diagram.hpp"
#include "kchord/exact.hpp"

namespace kchord {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph.
class Board {
 public:
  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// endpoints out of range.
  Board(unsigned vertex_count, std::vector<Edge> edges);

  unsigned vertex_count() const { return static_cast<unsigned>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Grid dimensions for display, when the board came from make_grid/torus.
  std::optional<std::pair<unsigned, unsigned>> grid_shape;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

Board make_path(unsigned length);
/// rows x cols grid, vertex r*cols + c.
Board make_grid(unsigned rows, unsigned cols);
/// rows x cols torus; both sides must be >= 3 so the graph stays simple.
Board make_torus(unsigned rows, unsigned cols);
Board make_board(unsigned vertex_count, std::vector<Edge> edges);

/// Parses "path:L", "grid:AxB", "torus:AxB".
Board parse_board_spec(const std::string& spec);

/// True iff `vertices` induce a connected subgraph.
bool induces_connected(const Board& g, std::span<const Vertex> vertices);

/// Number r of k-vertex subsets inducing a connected subgraph. Each subset
/// is generated once from its smallest vertex by extension through the
/// exclusive neighborhood.
Integer connected_k_subgraphs(const Board& g, unsigned k);

/// n r / C(kn, k). Throws if the board does not have k n vertices.
Rational mean_polyominoes(const Board& g, unsigned k, unsigned n);

/// Vertex -> block label; each label used exactly k times.
class Placement {
 public:
  Placement(const Board& board, unsigned k, std::vector<Label> assignment);

  const Board& board() const { return *board_; }
  unsigned k() const { return k_; }
  unsigned n() const { return n_; }
  std::span<const Label> assignment() const { return assignment_; }

 private:
  const Board* board_;
  unsigned k_;
  unsigned n_;
  std::vector<Label> assignment_;
};

struct PlacementStats {
  unsigned polyominoes = 0;
  unsigned components = 0;

  friend bool operator==(const PlacementStats&, const PlacementStats&) = default;
};

/// Components are connected components of the subgraph induced by all
/// polyomino-occupied vertices.
PlacementStats placement_stats(const Board& g, unsigned k, std::span<const Label> assignment);
PlacementStats placement_stats(const Placement& p);

/// SplitMix64: output i of stream `seed` is mix(seed + (i+1) * gamma).
class SplitMix64 {
 public:
  static constexpr const char* algorithm = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// Independent stream for (seed, stream).
  static SplitMix64 derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

struct SampleSummary {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string rng = SplitMix64::algorithm;
  double mean = 0;
  double standard_error = 0;
  std::map<unsigned, std::uint64_t> histogram;  // polyomino count -> samples
};

/// Sample i shuffles the vertex list with SplitMix64::derive(seed, i) and
/// cuts it into consecutive k-blocks. Results do not depend on `threads`.
SampleSummary sample_placements(const Board& g, unsigned k, unsigned n,
                                std::uint64_t samples, std::uint64_t seed,
                                unsigned threads = 1);

/// Exact histogram over all set partitions of the vertices into k-blocks,
/// keyed by (polyominoes, components).
struct PlacementHistogram {
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> counts;

  std::uint64_t total() const;
  std::map<unsigned, std::uint64_t> polyomino_marginal() const;
  std::map<unsigned, std::uint64_t> component_marginal() const;
  Rational mean_polyominoes() const;
};

/// Throws BudgetExceeded if N(k, n) > budget.
PlacementHistogram exhaustive_distribution(const Board& g, unsigned k, unsigned n,
                                           std::uint64_t budget = 10'000'000,
                                           unsigned threads = 1);

}  // namespace kchord
