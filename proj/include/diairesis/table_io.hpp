#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "diairesis/errors.hpp"
#include "diairesis/predicate_table.hpp"

namespace diairesis {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r");
  if (from == std::string::npos) return {};
  const auto to = s.find_last_not_of(" \t\r");
  return s.substr(from, to - from + 1);
}

inline std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline bool parse_cell(const std::string& raw, const std::string& where) {
  const std::string v = lowercase(trim(raw));
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  throw MalformedInputError("bad cell value '" + raw + "' " + where +
                            " (expected 0, 1, true or false)");
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(trim(field));
  return fields;
}

inline PredicateTable make_table(std::vector<std::string> items,
                                 std::vector<std::string> predicates,
                                 std::vector<std::vector<bool>> rows) {
  try {
    return PredicateTable(std::move(items), std::move(predicates), std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw MalformedInputError(e.what());
  }
}

}  // namespace detail

// CSV items file: header "id,<pred1>,<pred2>,...", one row per item, cells
// in {0, 1, true, false} (case-insensitive).
inline PredicateTable load_items_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw MalformedInputError("empty items file");
  auto header = detail::split_csv_line(line);
  if (header.size() < 2)
    throw MalformedInputError("header needs an id column and at least one predicate");
  if (detail::lowercase(header[0]) != "id")
    throw MalformedInputError("first header column must be 'id', got '" +
                              header[0] + "'");
  const std::vector<std::string> predicates(header.begin() + 1, header.end());

  std::vector<std::string> items;
  std::vector<std::vector<bool>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != header.size())
      throw MalformedInputError("line " + std::to_string(line_no) + " has " +
                                std::to_string(fields.size()) + " fields, expected " +
                                std::to_string(header.size()));
    if (fields[0].empty())
      throw MalformedInputError("line " + std::to_string(line_no) + " has an empty id");
    items.push_back(fields[0]);
    std::vector<bool> row;
    row.reserve(predicates.size());
    for (std::size_t i = 1; i < fields.size(); ++i)
      row.push_back(detail::parse_cell(fields[i],
                                       "on line " + std::to_string(line_no)));
    rows.push_back(std::move(row));
  }
  if (items.empty()) throw MalformedInputError("items file has no rows");
  return detail::make_table(std::move(items), predicates, std::move(rows));
}

// JSON items file: an array of objects, each with an "id" and the same set
// of predicate keys; predicate values may be booleans, 0/1 numbers, or the
// strings accepted by the CSV loader.
inline PredicateTable load_items_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInputError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty())
    throw MalformedInputError("expected a non-empty JSON array of item objects");

  std::vector<std::string> predicates;
  for (const auto& [key, value] : doc.front().items())
    if (key != "id") predicates.push_back(key);
  if (predicates.empty())
    throw MalformedInputError("item objects need at least one predicate key");

  const auto cell_of = [](const nlohmann::json& v, const std::string& where) {
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_number_integer()) {
      const auto n = v.get<int>();
      if (n == 0 || n == 1) return n == 1;
    }
    if (v.is_string()) return detail::parse_cell(v.get<std::string>(), where);
    throw MalformedInputError("bad cell value " + v.dump() + " " + where);
  };

  std::vector<std::string> items;
  std::vector<std::vector<bool>> rows;
  for (const auto& obj : doc) {
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string())
      throw MalformedInputError("every array entry needs a string 'id'");
    const std::string id = obj["id"].get<std::string>();
    if (obj.size() != predicates.size() + 1)
      throw MalformedInputError("item '" + id + "' does not match the predicate set");
    std::vector<bool> row;
    row.reserve(predicates.size());
    for (const auto& p : predicates) {
      if (!obj.contains(p))
        throw MalformedInputError("item '" + id + "' is missing predicate '" + p + "'");
      row.push_back(cell_of(obj[p], "for item '" + id + "'"));
    }
    items.push_back(id);
    rows.push_back(std::move(row));
  }
  return detail::make_table(std::move(items), std::move(predicates), std::move(rows));
}

enum class ItemsFormat { csv, json };

inline PredicateTable load_items_file(const std::string& path, ItemsFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInputError("cannot open items file '" + path + "'");
  return format == ItemsFormat::json ? load_items_json(in) : load_items_csv(in);
}

}  // namespace diairesis
