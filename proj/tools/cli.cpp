#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "formats.hpp"
#include "kchord/asymptotics.hpp"
#include "kchord/diagram.hpp"
#include "kchord/exact.hpp"
#include "kchord/memory_game.hpp"
#include "kchord/recurrence.hpp"
#include "kchord/series.hpp"
#include "oeis.hpp"
#include "verify.hpp"

namespace kchord::cli {

namespace {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TableConfig {
  unsigned k = 3;
  std::string stat = "short";
  unsigned n_max = 6;
  std::string route;
  std::string format = "csv";
  unsigned threads = 1;
  long offset = 1;
  std::string out_path;
};

struct VerifyConfig {
  unsigned k = 3;
  unsigned n_max = 5;
  unsigned threads = 1;
};

struct SeriesConfig {
  unsigned k = 3;
  std::string kind = "F";
  unsigned order = 6;
  std::optional<unsigned> order2;
  std::string out_path;
};

struct OeisConfig {
  std::string id;
  unsigned k = 3;
  std::size_t terms = 30;
  std::optional<long> offset;
  std::string out_path;
};

struct MemoryConfig {
  std::string board;
  std::string board_file;
  unsigned k = 2;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string out_path;
};

struct AsymptConfig {
  unsigned k = 2;
  std::string kind = "short";
  std::vector<unsigned> n{25, 50, 100, 200};
  std::string format = "json";
  std::string out_path;
};

struct StatsConfig {
  std::string word;
  unsigned k = 0;
};

std::string canonical_route(std::string route) {
  std::replace(route.begin(), route.end(), '-', '_');
  return route;
}

Statistic parse_statistic(const std::string& name) {
  if (name == "short") return Statistic::short_chords;
  if (name == "components") return Statistic::components;
  if (name == "nc-short") return Statistic::noncrossing_short;
  throw ConfigError("unknown statistic '" + name + "'");
}

const std::vector<std::string>& routes_for(Statistic stat) {
  static const std::vector<std::string> short_routes{"closed_form", "kp1", "kp2", "series",
                                                     "oracle"};
  static const std::vector<std::string> component_routes{"series", "oracle"};
  static const std::vector<std::string> nc_routes{"recurrence", "series", "oracle"};
  switch (stat) {
    case Statistic::short_chords:
      return short_routes;
    case Statistic::components:
      return component_routes;
    case Statistic::noncrossing_short:
      return nc_routes;
  }
  return short_routes;
}

std::string default_route(Statistic stat) {
  switch (stat) {
    case Statistic::short_chords:
      return "kp2";
    case Statistic::components:
      return "series";
    case Statistic::noncrossing_short:
      return "recurrence";
  }
  return "kp2";
}

CountTable series_table(const BivariateSeries& s, unsigned k, Statistic kind, unsigned n_max) {
  CountTable t{k, kind, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    std::vector<Integer> row(n + 1);
    for (unsigned v = 0; v <= n; ++v) row[v] = s.coeff(n, v);
    t.rows.push_back(std::move(row));
  }
  return t;
}

CountTable oracle_table(unsigned k, Statistic kind, unsigned n_max, unsigned threads) {
  const auto budget = oracle_budget_from_env();
  for (unsigned n = 0; n <= n_max; ++n) check_budget(k, n, budget);
  CountTable t{k, kind, {}};
  for (unsigned n = 0; n <= n_max; ++n) {
    const auto h = oracle_histograms(k, n, threads, budget);
    const auto& src = kind == Statistic::short_chords ? h.short_chords
                      : kind == Statistic::components ? h.components
                                                      : h.nc_short;
    std::vector<Integer> row;
    for (auto c : src) row.emplace_back(std::to_string(c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CountTable build_table(unsigned k, Statistic stat, const std::string& route, unsigned n_max,
                       unsigned threads) {
  if (route == "oracle") return oracle_table(k, stat, n_max, threads);
  switch (stat) {
    case Statistic::short_chords:
      if (route == "closed_form") return d_table_closed_form(k, n_max);
      if (route == "kp1") return d_table_kp1(k, n_max);
      if (route == "kp2") return d_table_kp2(k, n_max);
      return series_table(F_series(k, n_max), k, stat, n_max);
    case Statistic::components:
      return series_table(C_series(k, n_max), k, stat, n_max);
    case Statistic::noncrossing_short:
      if (route == "recurrence") return noncrossing_table(k, n_max);
      return series_table(T_series(k, n_max, n_max), k, stat, n_max);
  }
  throw ConfigError("unsupported route");
}

// Writes to --out when given, else to the command's stream.
template <class Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open '" + path + "' for writing");
  write(file);
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

int cmd_table(const TableConfig& c, std::ostream& out) {
  require_chord_size(c.k);
  const Statistic stat = parse_statistic(c.stat);
  const std::string route = c.route.empty() ? default_route(stat) : canonical_route(c.route);
  const auto& allowed = routes_for(stat);
  if (std::find(allowed.begin(), allowed.end(), route) == allowed.end()) {
    std::string list;
    for (const auto& r : allowed) list += (list.empty() ? "" : ", ") + r;
    throw ConfigError("route '" + route + "' does not apply to stat '" + c.stat +
                      "' (allowed: " + list + ")");
  }
  if (c.format != "csv" && c.format != "json" && c.format != "bfile") {
    throw ConfigError("unknown format '" + c.format + "'");
  }
  const auto table = build_table(c.k, stat, route, c.n_max, c.threads);
  emit(c.out_path, out, [&](std::ostream& os) {
    if (c.format == "csv") {
      write_table_csv(table, os);
    } else if (c.format == "json") {
      write_table_json(table, route, os);
    } else {
      write_bfile(linearize(table), c.offset, os);
    }
  });
  return exit_ok;
}

int cmd_verify(const VerifyConfig& c, std::ostream& out) {
  const auto result = verify_all(c.k, c.n_max, c.threads, oracle_budget_from_env());
  for (const auto& line : result.passed) out << "ok   " << line << '\n';
  for (const auto& line : result.skipped) out << "skip " << line << '\n';
  if (!result.ok()) {
    out << result.mismatch->to_string() << '\n';
    return exit_mismatch;
  }
  out << "all agree\n";
  return exit_ok;
}

int cmd_series(const SeriesConfig& c, std::ostream& out) {
  require_chord_size(c.k);
  const unsigned o2 = c.order2.value_or(c.order);
  BivariateSeries s = [&] {
    if (c.kind == "F") return F_series(c.k, c.order);
    if (c.kind == "C") return C_series(c.k, c.order);
    if (c.kind == "T") return T_series(c.k, c.order, o2);
    if (c.kind == "L") return L_series(c.k, c.order, o2);
    throw ConfigError("unknown series kind '" + c.kind + "' (F, C, T, L)");
  }();
  emit(c.out_path, out, [&](std::ostream& os) { write_series_json(s, c.k, c.kind, os); });
  return exit_ok;
}

int cmd_oeis(const OeisConfig& c, std::ostream& out) {
  const OeisSequence* seq = nullptr;
  try {
    seq = &find_sequence(c.id);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const auto terms = oeis_terms(seq->id, c.k, c.terms);
  emit(c.out_path, out,
       [&](std::ostream& os) { write_bfile(terms, c.offset.value_or(seq->offset), os); });
  return exit_ok;
}

std::string decimal(const Rational& q) {
  std::ostringstream os;
  os << std::setprecision(12) << q.get_d();
  return os.str();
}

int cmd_memory(const MemoryConfig& c, std::ostream& out) {
  require_chord_size(c.k);
  if (c.board.empty() == c.board_file.empty()) {
    throw ConfigError("give exactly one of --board and --board-file");
  }
  const Board board = [&] {
    if (!c.board.empty()) return parse_board_spec(c.board);
    std::ifstream in(c.board_file, std::ios::binary);
    if (!in) throw ConfigError("cannot read board file '" + c.board_file + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return read_board_json(text.str());
  }();
  if (board.vertex_count() == 0 || board.vertex_count() % c.k != 0) {
    throw ConfigError("board has " + std::to_string(board.vertex_count()) +
                      " vertices, not a positive multiple of k=" + std::to_string(c.k));
  }
  const unsigned n = board.vertex_count() / c.k;
  const auto r = connected_k_subgraphs(board, c.k);
  const auto mean = mean_polyominoes(board, c.k, n);
  out << "vertices " << board.vertex_count() << '\n'
      << "edges " << board.edge_count() << '\n'
      << "k " << c.k << '\n'
      << "n " << n << '\n'
      << "connected_subgraphs " << to_decimal(r) << '\n'
      << "mean_polyominoes " << kchord::to_string(mean) << " ~ " << decimal(mean) << '\n';

  if (c.samples > 0) {
    const auto s = sample_placements(board, c.k, n, c.samples, c.seed, c.threads);
    out << "rng " << s.rng << '\n'
        << "seed " << s.seed << '\n'
        << "samples " << s.samples << '\n'
        << std::setprecision(12) << "sample_mean " << s.mean << '\n'
        << "standard_error " << s.standard_error << '\n';
  }
  if (c.exhaustive) {
    const auto h =
        exhaustive_distribution(board, c.k, n, oracle_budget_from_env(), c.threads);
    out << "placements " << h.total() << '\n'
        << "exhaustive_mean " << kchord::to_string(h.mean_polyominoes()) << '\n';
    if (c.out_path.empty()) out << '\n';
    emit(c.out_path, out, [&](std::ostream& os) { write_histogram_csv(h, os); });
  }
  return exit_ok;
}

int cmd_asympt(const AsymptConfig& c, std::ostream& out) {
  require_chord_size(c.k);
  if (c.n.empty()) throw ConfigError("--n needs at least one value");
  if (c.format != "json" && c.format != "csv") {
    throw ConfigError("unknown format '" + c.format + "'");
  }
  AsymptoticReport report;
  if (c.kind == "short") {
    report = poisson_convergence_report(c.k, Statistic::short_chords, c.n);
  } else if (c.kind == "components") {
    report = poisson_convergence_report(c.k, Statistic::components, c.n);
  } else if (c.kind == "nc") {
    report = nc_mean_report(c.k, c.n);
  } else {
    throw ConfigError("unknown report kind '" + c.kind + "' (short, components, nc)");
  }
  emit(c.out_path, out, [&](std::ostream& os) {
    if (c.format == "json") {
      write_report_json(report, os);
    } else {
      write_report_csv(report, os);
    }
  });
  return exit_ok;
}

int cmd_stats(const StatsConfig& c, std::ostream& out) {
  const Diagram d = parse_diagram(c.word, c.k);
  const auto s = stats(d);
  out << "k " << d.k() << '\n'
      << "n " << d.n() << '\n'
      << "short " << s.short_chords << '\n'
      << "components " << s.components << '\n'
      << "noncrossing " << s.noncrossing << '\n'
      << "crossing_pairs " << s.crossing_pairs << '\n';
  if (s.noncrossing == d.n()) out << "lattice_path " << encode_lattice_path(d).to_string() << '\n';
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts for linear k-chord diagrams", "kchord"};
  app.require_subcommand(1);

  TableConfig table;
  auto* table_cmd = app.add_subcommand("table", "Print a count triangle");
  table_cmd->add_option("--k", table.k, "Block size k >= 2")->required();
  table_cmd->add_option("--stat", table.stat, "short | components | nc-short")
      ->check(CLI::IsMember({"short", "components", "nc-short"}));
  table_cmd->add_option("--n-max,--m-max", table.n_max, "Last row");
  table_cmd->add_option("--route", table.route,
                        "closed_form | kp1 | kp2 | series | recurrence | oracle");
  table_cmd->add_option("--format", table.format, "csv | json | bfile");
  table_cmd->add_option("--threads", table.threads, "Oracle worker threads")
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--offset", table.offset, "First b-file index");
  table_cmd->add_option("--out", table.out_path, "Output file (default stdout)");

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every route");
  verify_cmd->add_option("--k", verify.k, "Block size k >= 2")->required();
  verify_cmd->add_option("--n-max", verify.n_max, "Last row");
  verify_cmd->add_option("--threads", verify.threads, "Oracle worker threads")
      ->check(CLI::PositiveNumber);

  SeriesConfig series;
  auto* series_cmd = app.add_subcommand("series", "Dump a truncated generating function");
  series_cmd->add_option("--k", series.k, "Block size k >= 2")->required();
  series_cmd->add_option("--kind", series.kind, "F | C | T | L");
  series_cmd->add_option("--order", series.order, "Truncation order in the first variable");
  series_cmd->add_option("--order2", series.order2,
                         "Truncation order in the second variable (T, L)");
  series_cmd->add_option("--out", series.out_path, "Output file (default stdout)");

  OeisConfig oeis;
  auto* oeis_cmd = app.add_subcommand("oeis", "Write a b-file for a related OEIS entry");
  oeis_cmd->add_option("--id", oeis.id, "Sequence id, e.g. A334056")->required();
  oeis_cmd->add_option("--k", oeis.k, "Slice of A062993");
  oeis_cmd->add_option("--terms", oeis.terms, "Number of terms");
  oeis_cmd->add_option("--offset", oeis.offset, "First index (default: the entry's offset)");
  oeis_cmd->add_option("--out", oeis.out_path, "Output file (default stdout)");

  MemoryConfig memory;
  auto* memory_cmd = app.add_subcommand("memory", "Polyomino statistics on a board");
  memory_cmd->add_option("--board", memory.board, "path:L | grid:AxB | torus:AxB");
  memory_cmd->add_option("--board-file", memory.board_file, "JSON board file");
  memory_cmd->add_option("--k", memory.k, "Tile size k >= 2");
  memory_cmd->add_flag("--exhaustive", memory.exhaustive, "Enumerate every placement");
  memory_cmd->add_option("--samples", memory.samples, "Monte Carlo samples");
  memory_cmd->add_option("--seed", memory.seed, "Sampler seed");
  memory_cmd->add_option("--threads", memory.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  memory_cmd->add_option("--out", memory.out_path, "Histogram CSV file");

  AsymptConfig asympt;
  auto* asympt_cmd = app.add_subcommand("asympt", "Convergence report");
  asympt_cmd->add_option("--k", asympt.k, "Block size k >= 2");
  asympt_cmd->add_option("--kind", asympt.kind, "short | components | nc");
  asympt_cmd->add_option("--n", asympt.n, "Row list, e.g. 25,50,100")->delimiter(',');
  asympt_cmd->add_option("--format", asympt.format, "json | csv");
  asympt_cmd->add_option("--out", asympt.out_path, "Output file (default stdout)");

  StatsConfig stats_config;
  auto* stats_cmd = app.add_subcommand("stats", "Statistics of one diagram");
  stats_cmd->add_option("--word", stats_config.word, "Comma-separated labels, e.g. 0,1,0,1")
      ->required();
  stats_cmd->add_option("--k", stats_config.k, "Block size (default: inferred)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid_config;
  }

  try {
    if (*table_cmd) return cmd_table(table, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*series_cmd) return cmd_series(series, out);
    if (*oeis_cmd) return cmd_oeis(oeis, out);
    if (*memory_cmd) return cmd_memory(memory, out);
    if (*asympt_cmd) return cmd_asympt(asympt, out);
    if (*stats_cmd) return cmd_stats(stats_config, out);
  } catch (const BudgetExceeded& e) {
    err << "kchord: " << e.what() << " (set KCHORD_ORACLE_BUDGET to raise it)\n";
    return exit_budget_exceeded;
  } catch (const std::invalid_argument& e) {
    err << "kchord: " << e.what() << '\n';
    return exit_invalid_config;
  } catch (const std::out_of_range& e) {
    err << "kchord: " << e.what() << '\n';
    return exit_invalid_config;
  }
  return exit_invalid_config;
}

}  // namespace kchord::cli
