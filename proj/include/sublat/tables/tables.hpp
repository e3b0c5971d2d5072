#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sublat::tables {

/// Inclusive integer range of w.
struct WRange {
  long from = 1;
  long to = 1;
};

/// Parses "a..b" (or a single "a"); throws std::invalid_argument on bad input.
WRange parse_w_range(const std::string& text);

enum class CellKind { Empty, Integer, Real, Text };

struct Cell {
  CellKind kind = CellKind::Empty;
  mpz_class integer;
  double real = 0;
  std::string text;
  /// Non-empty when the value is incomplete, e.g. "uncertified" or "capability".
  std::string flag;

  static Cell of(mpz_class v);
  static Cell of(double v);
  static Cell of(std::string v);
  static Cell empty(std::string flag);
};

struct Column {
  std::string key;     // machine name, used by CSV and JSON
  std::string header;  // human header, used by Markdown
};

struct Row {
  std::string w;  // printed form of w ("7", "9.35")
  std::vector<Cell> cells;
  std::string note;  // why a row is incomplete, empty otherwise
};

struct Table {
  int id = 0;
  std::string title;
  std::vector<Column> columns;  // excluding the leading w column
  std::vector<Row> rows;
  std::vector<std::pair<std::string, std::string>> provenance;  // (file, checksum)
  std::string w_range;
  bool partial = false;  // some cell hit a capability limit
};

struct TableOptions {
  std::optional<WRange> range;
  /// Per-code enumeration budget for the sphere tables; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

/// Default w rows for each table.
WRange default_range(int id);

/// Builds table 1..6; throws std::out_of_range for any other id.
Table build_table(int id, const TableOptions& opts = {});

/// Shortest decimal form of a double that reads back to the same value.
std::string full_precision(double v);
/// Six significant digits, as printed in human formats.
std::string six_digits(double v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);
std::string to_markdown(const Table& t);

}  // namespace sublat::tables
