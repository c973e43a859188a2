#pragma once

// Text output formats shared by the subcommands. All outputs are UTF-8 with
// LF line endings and contain nothing run-dependent (no timestamps).

#include <ostream>
#include <string_view>
#include <vector>

#include "kchord/asymptotics.hpp"
#include "kchord/count_table.hpp"
#include "kchord/memory_game.hpp"
#include "kchord/series.hpp"

namespace kchord::cli {

/// Header `n,value,count`, one line per nonzero entry, rows n >= 1.
void write_table_csv(const CountTable& table, std::ostream& out);
void write_table_json(const CountTable& table, std::string_view route, std::ostream& out);

/// Row-by-row linearization used for b-files (see oeis_terms).
std::vector<Integer> linearize(const CountTable& table);
void write_bfile(const std::vector<Integer>& terms, long offset, std::ostream& out);

/// {k, kind, var_names, order: [o1, o2], coeffs: row-major decimal strings}
void write_series_json(const BivariateSeries& s, unsigned k, std::string_view kind,
                       std::ostream& out);

std::string_view report_kind_name(ReportKind kind);
/// {k, kind, n, exact, limit, errors, monotone}
void write_report_json(const AsymptoticReport& report, std::ostream& out);
/// n,exact,limit,abs_error
void write_report_csv(const AsymptoticReport& report, std::ostream& out);

/// polyominoes,components,count
void write_histogram_csv(const PlacementHistogram& h, std::ostream& out);

/// Board file: {"vertices": V, "edges": [[u, v], ...]}
Board read_board_json(std::string_view text);
void write_board_json(const Board& board, std::ostream& out);

}  // namespace kchord::cli
