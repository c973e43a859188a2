#include "kchord/memory_game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kchord/parallel.hpp"

namespace kchord {

Board::Board(unsigned vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  if (vertex_count == 0) throw std::invalid_argument("board needs at least one vertex");
  std::set<Edge> seen;
  for (auto& [u, v] : edges_) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    const Edge key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(key.first) + "-" +
                                  std::to_string(key.second));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Board::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Board make_path(unsigned length) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < length; ++v) edges.emplace_back(v, v + 1);
  return Board(length, std::move(edges));
}

Board make_grid(unsigned rows, unsigned cols) {
  std::vector<Edge> edges;
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  Board b(rows * cols, std::move(edges));
  b.grid_shape = std::make_pair(rows, cols);
  return b;
}

Board make_torus(unsigned rows, unsigned cols) {
  if (rows < 3 || cols < 3) {
    throw std::invalid_argument("torus sides must be >= 3");
  }
  std::vector<Edge> edges;
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      edges.emplace_back(v, r * cols + (c + 1) % cols);
      edges.emplace_back(v, ((r + 1) % rows) * cols + c);
    }
  }
  Board b(rows * cols, std::move(edges));
  b.grid_shape = std::make_pair(rows, cols);
  return b;
}

Board make_board(unsigned vertex_count, std::vector<Edge> edges) {
  return Board(vertex_count, std::move(edges));
}

namespace {

unsigned parse_positive(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || v == 0) {
    throw std::invalid_argument("bad board dimension '" + s + "'");
  }
  return static_cast<unsigned>(v);
}

}  // namespace

Board parse_board_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("board spec needs kind:params");
  const std::string kind = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);
  if (kind == "path") return make_path(parse_positive(params));
  const auto x = params.find('x');
  if (x == std::string::npos) throw std::invalid_argument("expected AxB in '" + spec + "'");
  const unsigned a = parse_positive(params.substr(0, x));
  const unsigned b = parse_positive(params.substr(x + 1));
  if (kind == "grid") return make_grid(a, b);
  if (kind == "torus") return make_torus(a, b);
  throw std::invalid_argument("unknown board kind '" + kind + "'");
}

bool induces_connected(const Board& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return true;
  std::vector<char> reached(vertices.size(), 0);
  std::vector<std::size_t> stack{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (!reached[j] && g.adjacent(vertices[i], vertices[j])) {
        reached[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == vertices.size();
}

namespace {

// ESU-style extension: grow from root v using only vertices > v that are
// exclusive neighbors of the newest vertex, so every connected set is built
// along exactly one path.
void extend(const Board& g, unsigned k, Vertex root, std::vector<Vertex>& current,
            std::vector<Vertex> extension, std::vector<char>& in_or_near,
            std::uint64_t& count) {
  if (current.size() == k) {
    ++count;
    return;
  }
  while (!extension.empty()) {
    const Vertex w = extension.back();
    extension.pop_back();
    std::vector<Vertex> next = extension;
    std::vector<Vertex> marked;
    for (Vertex u : g.neighbors(w)) {
      if (u > root && !in_or_near[u]) {
        in_or_near[u] = 1;
        marked.push_back(u);
        next.push_back(u);
      }
    }
    current.push_back(w);
    extend(g, k, root, current, std::move(next), in_or_near, count);
    current.pop_back();
    for (Vertex u : marked) in_or_near[u] = 0;
  }
}

}  // namespace

Integer connected_k_subgraphs(const Board& g, unsigned k) {
  if (k < 1) throw std::invalid_argument("subgraph size must be >= 1");
  std::uint64_t count = 0;
  std::vector<char> in_or_near(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> current{v};
    std::vector<Vertex> extension;
    in_or_near[v] = 1;
    for (Vertex u : g.neighbors(v)) {
      if (u > v) {
        extension.push_back(u);
        in_or_near[u] = 1;
      }
    }
    extend(g, k, v, current, extension, in_or_near, count);
    std::fill(in_or_near.begin(), in_or_near.end(), 0);
  }
  return Integer(std::to_string(count));
}

Rational mean_polyominoes(const Board& g, unsigned k, unsigned n) {
  require_chord_size(k);
  if (g.vertex_count() != static_cast<std::uint64_t>(k) * n) {
    throw std::invalid_argument("board has " + std::to_string(g.vertex_count()) +
                                " vertices, expected k*n = " + std::to_string(k * n));
  }
  Rational mean(Integer(n) * connected_k_subgraphs(g, k),
                binomial(static_cast<long>(k) * n, k));
  mean.canonicalize();
  return mean;
}

Placement::Placement(const Board& board, unsigned k, std::vector<Label> assignment)
    : board_(&board), k_(k), n_(0), assignment_(std::move(assignment)) {
  require_chord_size(k);
  if (assignment_.size() != board.vertex_count() || assignment_.size() % k != 0) {
    throw std::invalid_argument("placement must assign all k*n board vertices");
  }
  n_ = static_cast<unsigned>(assignment_.size() / k);
  std::vector<unsigned> count(n_, 0);
  for (Label b : assignment_) {
    if (b >= n_) throw std::invalid_argument("block label out of range");
    ++count[b];
  }
  for (unsigned c : count) {
    if (c != k) throw std::invalid_argument("every block label must be used k times");
  }
}

PlacementStats placement_stats(const Board& g, unsigned k, std::span<const Label> assignment) {
  const unsigned n = static_cast<unsigned>(assignment.size() / k);
  std::vector<Vertex> members(assignment.size());
  std::vector<unsigned> fill(n, 0);
  for (Vertex v = 0; v < assignment.size(); ++v) {
    const Label b = assignment[v];
    members[b * k + fill[b]++] = v;
  }
  PlacementStats s;
  std::vector<char> occupied(assignment.size(), 0);
  for (unsigned b = 0; b < n; ++b) {
    std::span<const Vertex> block(members.data() + b * k, k);
    if (induces_connected(g, block)) {
      ++s.polyominoes;
      for (Vertex v : block) occupied[v] = 1;
    }
  }
  std::vector<char> seen(assignment.size(), 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < assignment.size(); ++v) {
    if (!occupied[v] || seen[v]) continue;
    ++s.components;
    seen[v] = 1;
    stack.push_back(v);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (occupied[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return s;
}

PlacementStats placement_stats(const Placement& p) {
  return placement_stats(p.board(), p.k(), p.assignment());
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below(0)");
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

SplitMix64 SplitMix64::derive(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 mixer(seed ^ (stream * 0xd1b54a32d192ed03ULL));
  SplitMix64 seeded(mixer.next());
  return seeded;
}

SampleSummary sample_placements(const Board& g, unsigned k, unsigned n,
                                std::uint64_t samples, std::uint64_t seed,
                                unsigned threads) {
  require_chord_size(k);
  if (g.vertex_count() != static_cast<std::uint64_t>(k) * n) {
    throw std::invalid_argument("board size must equal k*n");
  }
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");

  constexpr std::uint64_t chunk = 4096;
  const std::size_t chunks = (samples + chunk - 1) / chunk;
  std::vector<std::map<unsigned, std::uint64_t>> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    std::vector<Vertex> order(g.vertex_count());
    std::vector<Label> assignment(g.vertex_count());
    const std::uint64_t end = std::min<std::uint64_t>(samples, (c + 1) * chunk);
    for (std::uint64_t i = c * chunk; i < end; ++i) {
      auto rng = SplitMix64::derive(seed, i);
      std::iota(order.begin(), order.end(), 0u);
      for (std::size_t j = order.size(); j > 1; --j) {
        std::swap(order[j - 1], order[rng.below(j)]);
      }
      for (std::size_t j = 0; j < order.size(); ++j) assignment[order[j]] = j / k;
      ++partial[c][placement_stats(g, k, assignment).polyominoes];
    }
  });

  SampleSummary out;
  out.samples = samples;
  out.seed = seed;
  for (const auto& h : partial) {
    for (auto [value, count] : h) out.histogram[value] += count;
  }
  long double sum = 0, sum_sq = 0;
  for (auto [value, count] : out.histogram) {
    sum += static_cast<long double>(value) * count;
    sum_sq += static_cast<long double>(value) * value * count;
  }
  const long double mean = sum / samples;
  out.mean = static_cast<double>(mean);
  if (samples > 1) {
    const long double var = (sum_sq - samples * mean * mean) / (samples - 1);
    out.standard_error = static_cast<double>(std::sqrt(std::max<long double>(var, 0) / samples));
  }
  return out;
}

std::uint64_t PlacementHistogram::total() const {
  std::uint64_t t = 0;
  for (const auto& [key, c] : counts) t += c;
  return t;
}

std::map<unsigned, std::uint64_t> PlacementHistogram::polyomino_marginal() const {
  std::map<unsigned, std::uint64_t> m;
  for (const auto& [key, c] : counts) m[key.first] += c;
  return m;
}

std::map<unsigned, std::uint64_t> PlacementHistogram::component_marginal() const {
  std::map<unsigned, std::uint64_t> m;
  for (const auto& [key, c] : counts) m[key.second] += c;
  return m;
}

Rational PlacementHistogram::mean_polyominoes() const {
  Integer weighted = 0;
  for (const auto& [key, c] : counts) {
    weighted += Integer(std::to_string(c)) * key.first;
  }
  Rational mean(weighted, Integer(std::to_string(total())));
  mean.canonicalize();
  return mean;
}

PlacementHistogram exhaustive_distribution(const Board& g, unsigned k, unsigned n,
                                           std::uint64_t budget, unsigned threads) {
  require_chord_size(k);
  if (g.vertex_count() != static_cast<std::uint64_t>(k) * n) {
    throw std::invalid_argument("board size must equal k*n");
  }
  check_budget(k, n, budget);
  // A canonical word assigns vertex i to block word[i]: the same objects as
  // linear diagrams, so the diagram enumerator and its sub-ranges apply.
  const auto ranges = block0_ranges(k, n);
  std::vector<PlacementHistogram> partial(ranges.size());
  parallel_for(ranges.size(), threads, [&](std::size_t i) {
    auto& h = partial[i];
    enumerate_diagrams_in(k, n, ranges[i], [&](const DiagramView& d) {
      const auto s = placement_stats(g, k, d.word);
      ++h.counts[{s.polyominoes, s.components}];
    });
  });
  PlacementHistogram out;
  for (const auto& h : partial) {
    for (const auto& [key, c] : h.counts) out.counts[key] += c;
  }
  return out;
}

}  // namespace kchord
