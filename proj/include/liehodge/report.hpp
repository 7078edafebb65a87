#pragma once

// Deterministic report documents and their text/CSV/JSON renderings.
//
// JSON schema:
//   {"command": str, "params": {str: cell}, "blocks": [
//      {"title": str, "paper_anchor": str, "columns": [str], "rows": [[cell]]}]}
// where a cell is an integer, a string or an array of integers. Numbers are
// always integers; key order and row order are fixed.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "liehodge/errors.hpp"

namespace liehodge {

using Cell = std::variant<std::int64_t, std::string, std::vector<std::int64_t>>;

struct ReportBlock {
  std::string title;
  std::string anchor;  // what the block reproduces
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  friend bool operator==(const ReportBlock&, const ReportBlock&) = default;
};

struct ReportDocument {
  std::string command;
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<ReportBlock> blocks;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

enum class Format { text, csv, json };

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw UsageError("format must be text, csv or json, got '" + std::string(s) + "'");
}

namespace detail {

inline std::string cell_text(const Cell& c, std::string_view list_sep) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  const auto& v = std::get<std::vector<std::int64_t>>(c);
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? std::string(list_sep) : "") + std::to_string(v[k]);
  return out;
}

inline nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return std::get<std::vector<std::int64_t>>(c);
}

inline Cell cell_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::vector<std::int64_t> v;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw UsageError("array cells must contain integers only");
      v.push_back(x.get<std::int64_t>());
    }
    return v;
  }
  throw UsageError("cell must be an integer, string or integer array");
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ReportDocument& doc) {
  nlohmann::ordered_json j;
  j["command"] = doc.command;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.params) j["params"][k] = detail::cell_json(v);
  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : doc.blocks) {
    nlohmann::ordered_json jb;
    jb["title"] = b.title;
    jb["paper_anchor"] = b.anchor;
    jb["columns"] = b.columns;
    jb["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : b.rows) {
      auto jr = nlohmann::ordered_json::array();
      for (const auto& c : row) jr.push_back(detail::cell_json(c));
      jb["rows"].push_back(std::move(jr));
    }
    j["blocks"].push_back(std::move(jb));
  }
  return j;
}

/// Inverse of to_json; rejects documents that do not follow the schema.
inline ReportDocument from_json(const nlohmann::ordered_json& j) {
  auto require = [&](const nlohmann::ordered_json& obj, const char* key) -> const nlohmann::ordered_json& {
    if (!obj.is_object() || !obj.contains(key)) throw UsageError(std::string("report JSON lacks '") + key + "'");
    return obj.at(key);
  };
  ReportDocument doc;
  doc.command = require(j, "command").get<std::string>();
  for (const auto& [k, v] : require(j, "params").items()) doc.params.emplace_back(k, detail::cell_from_json(v));
  for (const auto& jb : require(j, "blocks")) {
    ReportBlock b;
    b.title = require(jb, "title").get<std::string>();
    b.anchor = require(jb, "paper_anchor").get<std::string>();
    b.columns = require(jb, "columns").get<std::vector<std::string>>();
    for (const auto& jr : require(jb, "rows")) {
      std::vector<Cell> row;
      for (const auto& c : jr) row.push_back(detail::cell_from_json(c));
      if (row.size() != b.columns.size()) throw UsageError("row width differs from column count in '" + b.title + "'");
      b.rows.push_back(std::move(row));
    }
    doc.blocks.push_back(std::move(b));
  }
  return doc;
}

inline std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << doc.command;
  for (const auto& [k, v] : doc.params) os << "  " << k << '=' << detail::cell_text(v, ",");
  os << '\n';
  for (const auto& b : doc.blocks) {
    os << '\n' << "== " << b.title << " ==  [" << b.anchor << "]\n";
    std::vector<std::vector<std::string>> cells;
    cells.push_back(b.columns);
    for (const auto& row : b.rows) {
      std::vector<std::string> line;
      for (const auto& c : row) line.push_back(detail::cell_text(c, " "));
      cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(b.columns.size(), 0);
    for (const auto& line : cells)
      for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
    for (const auto& line : cells) {
      std::string out;
      for (std::size_t k = 0; k < line.size(); ++k) {
        out += line[k];
        if (k + 1 < line.size()) out += std::string(width[k] - line[k].size() + 2, ' ');
      }
      os << out << '\n';
    }
  }
  return os.str();
}

/// One section per block: a "# title" line, a header row, then data rows.
/// Integer lists are space separated inside a single field.
inline std::string render_csv(const ReportDocument& doc) {
  std::ostringstream os;
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    const auto& b = doc.blocks[i];
    if (i) os << '\n';
    os << "# " << b.title << '\n';
    for (std::size_t k = 0; k < b.columns.size(); ++k) os << (k ? "," : "") << detail::csv_field(b.columns[k]);
    os << '\n';
    for (const auto& row : b.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << detail::csv_field(detail::cell_text(row[k], " "));
      os << '\n';
    }
  }
  return os.str();
}

inline std::string render(const ReportDocument& doc, Format format) {
  switch (format) {
    case Format::text: return render_text(doc);
    case Format::csv: return render_csv(doc);
    case Format::json: return to_json(doc).dump(2) + "\n";
  }
  return {};
}

}  // namespace liehodge
