#pragma once

// Cayley-table files: a JSON document with `order`, `mul` (one string of N
// space-separated indices per row), and optional `generators` and `labels`.
// Identity must be index 0. Loaded tables are fully verified, associativity
// included.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/kernel.hpp"

namespace cayley {

inline nlohmann::ordered_json table_to_json(const GroupTable& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order();
  auto rows = nlohmann::ordered_json::array();
  for (Element a = 0; a < g.order(); ++a) {
    std::string row;
    for (Element b = 0; b < g.order(); ++b) {
      if (b) row += ' ';
      row += std::to_string(g.mul(a, b));
    }
    rows.push_back(std::move(row));
  }
  j["mul"] = std::move(rows);
  j["generators"] = std::vector<Element>(g.generators().begin(), g.generators().end());
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

inline GroupTable table_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("order").get<std::size_t>();
    if (n == 0 || n > kMaxRepresentableOrder)
      throw InputError("table order " + std::to_string(n) + " out of range");
    const auto& rows = j.at("mul");
    if (!rows.is_array() || rows.size() != n)
      throw InputError("`mul` must have exactly `order` rows");
    std::vector<std::uint16_t> mul;
    mul.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<long long> vals;
      if (rows[r].is_string()) {
        std::istringstream in(rows[r].get<std::string>());
        long long v;
        while (in >> v) vals.push_back(v);
        if (!in.eof()) throw InputError("row " + std::to_string(r) + " has a non-integer entry");
      } else {
        vals = rows[r].get<std::vector<long long>>();
      }
      if (vals.size() != n)
        throw InputError("row " + std::to_string(r) + " has " + std::to_string(vals.size()) +
                         " entries, expected " + std::to_string(n));
      for (long long v : vals) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw InputError("row " + std::to_string(r) + " has out-of-range entry " +
                           std::to_string(v));
        mul.push_back(static_cast<std::uint16_t>(v));
      }
    }
    auto assoc = detail::check_associativity(n, mul);
    std::vector<Element> gens;
    if (j.contains("generators")) gens = j["generators"].get<std::vector<Element>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    auto g = GroupTable::from_table(n, std::move(mul), std::move(gens), std::move(labels));
    if (!assoc.ok) throw InputError("invalid group table: " + assoc.first_violation);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed table document: ") + e.what());
  }
}

inline GroupTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open table file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse table file " + path + ": " + e.what());
  }
  return table_from_json(j);
}

inline void save_table(const GroupTable& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write table file " + path);
  out << table_to_json(g).dump(2) << '\n';
}

}  // namespace cayley
