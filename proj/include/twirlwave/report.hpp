#pragma once

// Tabular output: check reports and time series, written as CSV (header row,
// RFC 4180 quoting) or as a JSON object {"metadata": {...}, "rows": [...]}.
// Floating-point values always carry 17 significant digits.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "twirlwave/constants.hpp"
#include "twirlwave/errors.hpp"

namespace twirlwave {

inline constexpr const char* version = "0.1.0";

using Cell = std::variant<std::string, double, std::int64_t, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> metadata;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw invalid_input("row width does not match the header");
    rows.push_back(std::move(row));
  }
};

enum class OutputFormat { csv, json };

[[nodiscard]] inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw invalid_input("output format must be csv or json, got '" + s + "'");
}

[[nodiscard]] inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += static_cast<char>(ch);
        }
    }
  }
  return out + '"';
}

// JSON has no nan/inf; those become null.
inline std::string json_value(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return json_string(*s);
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? format_number(*d) : "null";
  return cell_text(c);
}

}  // namespace detail

/// Header row then data rows, CRLF-free (one '\n' per record).
inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << detail::csv_field(t.columns[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_field(detail::cell_text(row[i]));
    os << '\n';
  }
}

inline void write_json(std::ostream& os, const Table& t) {
  os << "{\n  \"metadata\": {";
  for (std::size_t i = 0; i < t.metadata.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << detail::json_string(t.metadata[i].first) << ": "
       << detail::json_value(t.metadata[i].second);
  }
  os << (t.metadata.empty() ? "},\n" : "\n  },\n");
  os << "  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? ",\n    {" : "\n    {");
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? ", " : "") << detail::json_string(t.columns[i]) << ": " << detail::json_value(t.rows[r][i]);
    os << '}';
  }
  os << (t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

inline void emit(std::ostream& os, const Table& t, OutputFormat f) {
  if (f == OutputFormat::csv)
    write_csv(os, t);
  else
    write_json(os, t);
}

[[nodiscard]] inline std::string emit_string(const Table& t, OutputFormat f) {
  std::ostringstream os;
  emit(os, t, f);
  return os.str();
}

/// One checked quantity. pass requires max_rel_err < tolerance, so a zero
/// tolerance can never pass and a NaN error always fails.
struct Check {
  std::string name;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  Check() = default;
  Check(std::string n, double err, double tol) : name(std::move(n)), max_rel_err(err), tolerance(tol), pass(err < tol) {}
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  UnitSystem unit_system = UnitSystem::natural;

  [[nodiscard]] bool overall() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  [[nodiscard]] Table table() const {
    Table t;
    t.columns = {"name", "max_rel_err", "tolerance", "pass"};
    for (const auto& c : checks) t.add_row({c.name, c.max_rel_err, c.tolerance, c.pass});
    t.metadata = {{"suite", suite},
                  {"overall", overall()},
                  {"seed", static_cast<std::int64_t>(seed)},
                  {"unit_system", std::string(to_string(unit_system))},
                  {"version", std::string(version)}};
    return t;
  }
};

}  // namespace twirlwave
