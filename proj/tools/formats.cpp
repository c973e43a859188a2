#include "formats.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace kchord::cli {

using nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// Entries of row n that appear in b-files and JSON rows.
std::vector<Integer> presented_row(const CountTable& table, unsigned n) {
  switch (table.kind) {
    case Statistic::short_chords: {
      std::vector<Integer> row(n + 1);
      for (unsigned l = 0; l <= n; ++l) row[l] = table.at(n, l);
      return row;
    }
    case Statistic::components:
      return table.trimmed_row(n);
    case Statistic::noncrossing_short: {
      std::vector<Integer> row;
      for (unsigned l = 1; l <= n; ++l) row.push_back(table.at(n, l));
      return row;
    }
  }
  return {};
}

}  // namespace

void write_table_csv(const CountTable& table, std::ostream& out) {
  out << "n,value,count\n";
  for (unsigned n = 1; n <= table.n_max(); ++n) {
    for (unsigned v = 0; v < table.rows[n].size(); ++v) {
      const auto& c = table.rows[n][v];
      if (c != 0) out << n << ',' << v << ',' << to_decimal(c) << '\n';
    }
  }
}

void write_table_json(const CountTable& table, std::string_view route, std::ostream& out) {
  ordered_json j;
  j["k"] = table.k;
  j["stat"] = std::string(statistic_name(table.kind));
  j["route"] = std::string(route);
  j["first_value"] = table.kind == Statistic::noncrossing_short ? 1 : 0;
  ordered_json rows = ordered_json::array();
  for (unsigned n = 1; n <= table.n_max(); ++n) {
    ordered_json row = ordered_json::array();
    for (const auto& c : presented_row(table, n)) row.push_back(to_decimal(c));
    rows.push_back(ordered_json{{"n", n}, {"counts", row}});
  }
  j["rows"] = rows;
  out << j.dump(2) << '\n';
}

std::vector<Integer> linearize(const CountTable& table) {
  std::vector<Integer> terms;
  for (unsigned n = 1; n <= table.n_max(); ++n) {
    for (auto& c : presented_row(table, n)) terms.push_back(std::move(c));
  }
  return terms;
}

void write_bfile(const std::vector<Integer>& terms, long offset, std::ostream& out) {
  long index = offset;
  for (const auto& t : terms) out << index++ << ' ' << to_decimal(t) << '\n';
}

void write_series_json(const BivariateSeries& s, unsigned k, std::string_view kind,
                       std::ostream& out) {
  ordered_json j;
  j["k"] = k;
  j["kind"] = std::string(kind);
  j["var_names"] = {s.var_names()[0], s.var_names()[1]};
  j["order"] = {s.order1(), s.order2()};
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_decimal(c));
  j["coeffs"] = coeffs;
  out << j.dump() << '\n';
}

std::string_view report_kind_name(ReportKind kind) {
  switch (kind) {
    case ReportKind::short_poisson:
      return "short";
    case ReportKind::components_poisson:
      return "components";
    case ReportKind::nc_mean:
      return "nc";
  }
  return "?";
}

void write_report_json(const AsymptoticReport& report, std::ostream& out) {
  ordered_json j;
  j["k"] = report.k;
  j["kind"] = std::string(report_kind_name(report.kind));
  j["n"] = report.n;
  ordered_json exact = ordered_json::array(), limit = ordered_json::array(),
               errors = ordered_json::array();
  for (std::size_t i = 0; i < report.n.size(); ++i) {
    exact.push_back(to_string(report.exact[i]));
    limit.push_back(to_string(report.limit[i]));
    errors.push_back({format_double(report.error[i].lo), format_double(report.error[i].hi)});
  }
  j["exact"] = exact;
  j["limit"] = limit;
  j["errors"] = errors;
  j["monotone"] = report.monotone;
  out << j.dump(2) << '\n';
}

void write_report_csv(const AsymptoticReport& report, std::ostream& out) {
  out << "n,exact,limit,abs_error\n";
  for (std::size_t i = 0; i < report.n.size(); ++i) {
    out << report.n[i] << ',' << format_double(report.exact[i].get_d()) << ','
        << format_double(report.limit[i].get_d()) << ','
        << format_double(report.error[i].hi) << '\n';
  }
}

void write_histogram_csv(const PlacementHistogram& h, std::ostream& out) {
  out << "polyominoes,components,count\n";
  for (const auto& [key, c] : h.counts) {
    out << key.first << ',' << key.second << ',' << c << '\n';
  }
}

Board read_board_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("board file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
      !j["vertices"].is_number_unsigned() || !j["edges"].is_array()) {
    throw std::invalid_argument("board file needs {\"vertices\": int, \"edges\": [[u,v],...]}");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw std::invalid_argument("board file: every edge must be a pair of vertex ids");
    }
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return make_board(j["vertices"].get<unsigned>(), std::move(edges));
}

void write_board_json(const Board& board, std::ostream& out) {
  ordered_json j;
  j["vertices"] = board.vertex_count();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : board.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  out << j.dump() << '\n';
}

}  // namespace kchord::cli
