#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "xilab/bigfloat.hpp"
#include "xilab/report.hpp"

namespace xilab::tools {

enum class ColumnType { text, integer, boolean, real };

using Cell = std::variant<std::string, long, bool, BigReal>;

struct Column {
  std::string name;
  ColumnType type = ColumnType::text;
};

struct Table {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  Table() = default;
  Table(std::string n, std::vector<Column> cols) : name(std::move(n)), columns(std::move(cols)) {}
  // Throws std::logic_error when the row does not match the column types.
  void add_row(std::vector<Cell> row);
};

// One report per run. The first table holds the records; CSV output carries only
// that table, JSON carries everything.
struct Report {
  std::string subcommand;
  long precision_bits = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Table> tables;
  std::vector<std::string> errors;
  bool pass = true;

  Table& table(const std::string& name);
  void add_param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  void fail(std::string error) {
    pass = false;
    errors.push_back(std::move(error));
  }
};

// Columns check, bound, empirical, margin, pass, detail.
Table checks_table();
void add_check(Table& t, const BoundReport& r, const std::string& detail = "");
void add_check(Table& t, const std::string& name, bool pass, const std::string& detail);

// Decimal digits that represent `bits` of mantissa.
int digits_for_bits(long bits);

// Values inside double range become decimal strings at full precision; values
// outside it become {"sign", "log10", "digits"}.
nlohmann::ordered_json real_to_json(const BigReal& x);
BigReal real_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Report& r);
Report from_json(const nlohmann::ordered_json& j);

// RFC 4180: CRLF line ends, fields quoted when they hold a comma, quote or line break.
std::string csv_escape(const std::string& field);
std::string to_csv(const Table& t);

enum class Format { csv, json };

std::string render(const Report& r, Format format);
// path "-" writes to stdout. Throws std::runtime_error naming the path on I/O failure.
void emit_report(const Report& r, Format format, const std::string& path);

}  // namespace xilab::tools
