#pragma once

#include <algorithm>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "k3acm/serialize.hpp"

// Flattens a command payload into a table for CSV and Markdown output. The
// JSON envelope stays the canonical form; tables carry the same scalar values.

namespace k3acm::cli {

enum class Format { json, csv, markdown };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "markdown" || s == "md") return Format::markdown;
  throw UsageError("unknown format '" + s + "' (json, csv, markdown)");
}

// Nested proof data is only meaningful as JSON.
inline bool json_only_key(const std::string& key) { return key == "trace" || key == "splits" || key == "facts"; }

/// Renders one JSON value as a table cell. Divisor classes collapse to their
/// label, scalar arrays to "a; b; c".
inline std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  if (v.is_object() && v.contains("label") && v.at("label").is_string()) return v.at("label").get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += "; ";
      out += cell(v[i]);
    }
    return out;
  }
  return v.dump();
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Rows come from payload["rows"] when present, else the payload itself (an
/// array of objects, or one object as a single row). A row that is a divisor
/// class becomes a `label,x,y` row.
inline Table tabulate(const json& payload) {
  json rows = payload.is_object() && payload.contains("rows") ? payload.at("rows") : payload;
  if (!rows.is_array()) rows = json::array({rows});
  Table table;
  for (const auto& row : rows) {
    if (!row.is_object()) throw ConsistencyError("table rows must be objects");
    for (const auto& [key, _] : row.items()) {
      if (json_only_key(key)) continue;
      if (std::find(table.header.begin(), table.header.end(), key) == table.header.end()) table.header.push_back(key);
    }
  }
  // Divisor rows read better label-first.
  if (auto it = std::find(table.header.begin(), table.header.end(), "label"); it != table.header.end()) {
    table.header.erase(it);
    table.header.insert(table.header.begin(), "label");
  }
  for (const auto& row : rows) {
    std::vector<std::string> out;
    for (const auto& key : table.header) out.push_back(row.contains(key) ? cell(row.at(key)) : "");
    table.rows.push_back(std::move(out));
  }
  return table;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_csv(const Table& t) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

/// Inverse of render_csv, for round-trip tests and golden diffs.
inline Table parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    any = true;
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  Table t;
  if (records.empty()) return t;
  t.header = std::move(records.front());
  t.rows.assign(std::make_move_iterator(records.begin() + 1), std::make_move_iterator(records.end()));
  return t;
}

inline std::string markdown_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

inline std::string render_markdown(const Table& t) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& fields) {
    out << "|";
    for (const auto& f : fields) out << " " << markdown_field(f) << " |";
    out << "\n";
  };
  line(t.header);
  out << "|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& r : t.rows) line(r);
  return out.str();
}

}  // namespace k3acm::cli
