#include "report_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace xilab::tools {

using nlohmann::ordered_json;

namespace {

const char* type_name(ColumnType t) {
  switch (t) {
    case ColumnType::text: return "text";
    case ColumnType::integer: return "integer";
    case ColumnType::boolean: return "boolean";
    case ColumnType::real: return "real";
  }
  return "text";
}

ColumnType type_from_name(const std::string& s) {
  if (s == "text") return ColumnType::text;
  if (s == "integer") return ColumnType::integer;
  if (s == "boolean") return ColumnType::boolean;
  if (s == "real") return ColumnType::real;
  throw std::runtime_error("unknown column type '" + s + "'");
}

bool matches(const Cell& c, ColumnType t) {
  switch (t) {
    case ColumnType::text: return std::holds_alternative<std::string>(c);
    case ColumnType::integer: return std::holds_alternative<long>(c);
    case ColumnType::boolean: return std::holds_alternative<bool>(c);
    case ColumnType::real: return std::holds_alternative<BigReal>(c);
  }
  return false;
}

// Digits used for reals in this report; 0 means each value's own precision.
thread_local long t_report_bits = 0;

int real_digits(const BigReal& x) {
  return digits_for_bits(t_report_bits > 0 ? t_report_bits : x.precision());
}

BigReal parse_decimal(const std::string& s) {
  BigReal r;
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0) throw std::runtime_error("bad decimal '" + s + "'");
  return r;
}

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  const BigReal& x = std::get<BigReal>(c);
  return x.to_string(real_digits(x));
}

class ReportBits {
 public:
  explicit ReportBits(long bits) : saved_(t_report_bits) { t_report_bits = bits; }
  ~ReportBits() { t_report_bits = saved_; }

 private:
  long saved_;
};

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("table " + name + ": row width mismatch");
  for (size_t i = 0; i < row.size(); ++i) {
    if (!matches(row[i], columns[i].type)) throw std::logic_error("table " + name + ": bad cell for " + columns[i].name);
  }
  rows.push_back(std::move(row));
}

Table& Report::table(const std::string& name) {
  for (auto& t : tables)
    if (t.name == name) return t;
  throw std::logic_error("no table " + name);
}

Table checks_table() {
  return Table("checks", {{"check", ColumnType::text},
                          {"bound", ColumnType::real},
                          {"empirical", ColumnType::real},
                          {"margin", ColumnType::real},
                          {"pass", ColumnType::boolean},
                          {"detail", ColumnType::text}});
}

void add_check(Table& t, const BoundReport& r, const std::string& detail) {
  std::string d = detail;
  for (const auto& [k, v] : r.params) {
    if (!d.empty()) d += "; ";
    d += k + "=" + v;
  }
  BigReal empirical = r.empirical_value ? *r.empirical_value : BigReal::with_precision(r.bound_value.precision());
  if (!r.empirical_value) mpfr_set_nan(empirical.raw());
  t.add_row({r.bound_name, r.bound_value, empirical, r.margin(), r.pass(), d});
}

void add_check(Table& t, const std::string& name, bool pass, const std::string& detail) {
  BigReal nan = BigReal::with_precision(64);
  mpfr_set_nan(nan.raw());
  t.add_row({name, nan, nan, nan, pass, detail});
}

int digits_for_bits(long bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) + 1; }

ordered_json real_to_json(const BigReal& x) {
  if (!x.is_finite() || x.is_zero()) return x.to_string(real_digits(x));
  double l10 = x.log10_abs();
  if (std::fabs(l10) <= 300.0) return x.to_string(real_digits(x));
  int digits = real_digits(x);
  PrecisionScope scope(x.precision() + 64);
  BigReal ax = abs(x);
  BigReal L = log(ax) / log(BigReal(10L));
  BigReal k = floor(L);
  BigReal mant = ax / pow(BigReal(10L), k.to_long());
  // Rounding can carry the mantissa to 10.
  if (mant >= BigReal(10L)) {
    k += BigReal(1L);
    mant /= 10L;
  }
  ordered_json j;
  j["sign"] = x.sign() > 0 ? 1 : -1;
  j["log10"] = L.to_string(20);
  j["digits"] = mant.to_string(digits);
  return j;
}

BigReal real_from_json(const ordered_json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_object()) {
    int sign = j.at("sign").get<int>();
    BigReal L = parse_decimal(j.at("log10").get<std::string>());
    BigReal mant = parse_decimal(j.at("digits").get<std::string>());
    if (mant < BigReal(1L) || !(mant < BigReal(10L))) throw std::runtime_error("mantissa outside [1, 10)");
    BigReal r = mant * pow(BigReal(10L), floor(L).to_long());
    return sign < 0 ? -r : r;
  }
  if (j.is_number()) return BigReal(j.get<double>());
  throw std::runtime_error("expected a real value");
}

ordered_json to_json(const Report& r) {
  ReportBits bits(r.precision_bits);
  ordered_json j;
  j["tool"] = "xilab";
  j["subcommand"] = r.subcommand;
  j["precision_bits"] = r.precision_bits;
  j["pass"] = r.pass;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["errors"] = r.errors;
  ordered_json tables = ordered_json::array();
  for (const auto& t : r.tables) {
    ordered_json jt;
    jt["name"] = t.name;
    ordered_json cols = ordered_json::array();
    for (const auto& c : t.columns) cols.push_back({{"name", c.name}, {"type", type_name(c.type)}});
    jt["columns"] = cols;
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json jr = ordered_json::object();
      for (size_t i = 0; i < row.size(); ++i) {
        const Cell& c = row[i];
        const std::string& key = t.columns[i].name;
        if (const auto* s = std::get_if<std::string>(&c)) jr[key] = *s;
        else if (const auto* n = std::get_if<long>(&c)) jr[key] = *n;
        else if (const auto* b = std::get_if<bool>(&c)) jr[key] = *b;
        else jr[key] = real_to_json(std::get<BigReal>(c));
      }
      rows.push_back(jr);
    }
    jt["rows"] = rows;
    tables.push_back(jt);
  }
  j["tables"] = tables;
  return j;
}

Report from_json(const ordered_json& j) {
  Report r;
  r.subcommand = j.at("subcommand").get<std::string>();
  r.precision_bits = j.at("precision_bits").get<long>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
  r.errors = j.at("errors").get<std::vector<std::string>>();
  PrecisionScope scope(std::max(64L, r.precision_bits) + 16);
  for (const auto& jt : j.at("tables")) {
    Table t;
    t.name = jt.at("name").get<std::string>();
    for (const auto& c : jt.at("columns"))
      t.columns.push_back({c.at("name").get<std::string>(), type_from_name(c.at("type").get<std::string>())});
    for (const auto& jr : jt.at("rows")) {
      std::vector<Cell> row;
      for (const auto& c : t.columns) {
        const auto& v = jr.at(c.name);
        switch (c.type) {
          case ColumnType::text: row.emplace_back(v.get<std::string>()); break;
          case ColumnType::integer: row.emplace_back(v.get<long>()); break;
          case ColumnType::boolean: row.emplace_back(v.get<bool>()); break;
          case ColumnType::real: row.emplace_back(real_from_json(v)); break;
        }
      }
      t.add_row(std::move(row));
    }
    r.tables.push_back(std::move(t));
  }
  return r;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const Table& t) {
  std::string out;
  for (size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_escape(t.columns[i].name);
  out += "\r\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_escape(cell_text(row[i]));
    out += "\r\n";
  }
  return out;
}

std::string render(const Report& r, Format format) {
  if (format == Format::json) return to_json(r).dump(2) + "\n";
  ReportBits bits(r.precision_bits);
  if (r.tables.empty()) return "";
  return to_csv(r.tables.front());
}

void emit_report(const Report& r, Format format, const std::string& path) {
  std::string text = render(r, format);
  if (path == "-" || path.empty()) {
    std::cout << text << std::flush;
    if (!std::cout) throw std::runtime_error("write to standard output failed");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace xilab::tools
