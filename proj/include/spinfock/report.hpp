#pragma once

// Report rendering. Floats are written with 17 significant digits ("%.17g")
// in both formats so that reruns are byte-identical and values round-trip.

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

namespace spinfock {

using Json = nlohmann::ordered_json;

inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline void write_json(std::ostream& os, const Json& j, int depth, bool pretty = true) {
  const std::string pad = pretty ? std::string(2 * (depth + 1), ' ') : "";
  const std::string close = pretty ? "\n" + std::string(2 * depth, ' ') : "";
  const char* sep = pretty ? ",\n" : ",";
  const char* open_break = pretty ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{" << open_break;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << sep;
        first = false;
        os << pad << Json(key).dump() << (pretty ? ": " : ":");
        write_json(os, value, depth + 1, pretty);
      }
      os << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[" << open_break;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << sep;
        os << pad;
        write_json(os, j[i], depth + 1, pretty);
      }
      os << close << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      os << (std::isfinite(x) ? format_double(x) : "null");
      return;
    }
    default:
      os << j.dump();
  }
}

inline std::string csv_cell(const Json& j) {
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  if (j.is_null()) return "";
  std::ostringstream os;
  write_json(os, j, 0, false);
  return os.str();
}

}  // namespace detail

inline std::string render_json(const Json& report) {
  std::ostringstream os;
  detail::write_json(os, report, 0);
  os << "\n";
  return os.str();
}

/// The report's table (an array of flat objects) as CSV, preceded by one
/// comment line holding the resolved config.
inline std::string render_csv(const Json& report, const std::string& table) {
  std::ostringstream os;
  if (report.contains("config")) {
    os << "# config: ";
    detail::write_json(os, report.at("config"), 0, false);
    os << "\n";
  }
  const Json& rows = report.at(table);
  if (rows.empty()) return os.str();
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      os << (first ? "" : ",") << detail::csv_cell(value);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace spinfock
