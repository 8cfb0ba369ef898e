#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "matchkit/enumeration.hpp"
#include "matchkit/error.hpp"
#include "matchkit/ferrers.hpp"
#include "matchkit/gentree.hpp"

namespace matchkit {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCsvHeader = "m,w,pattern_set,count";

inline void write_csv(std::ostream& out, const CountTable& t, bool header = true) {
  if (header) out << kCsvHeader << '\n';
  for (const auto& r : t.rows)
    out << t.m << ',' << r.w.str() << ',' << t.pattern_set << ',' << r.count << '\n';
}

/// One parsed CSV line.
struct CsvCount {
  int m = 0;
  DyckWord w;
  std::string pattern_set;
  Count count = 0;
};

/// Reads rows written by write_csv. Blank lines and '#' comments are skipped;
/// the header line is required.
inline std::vector<CsvCount> read_csv(std::istream& in) {
  std::vector<CsvCount> out;
  std::string line;
  bool seen_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      if (line != kCsvHeader)
        throw ParseError("expected CSV header '" + std::string(kCsvHeader) + "'");
      seen_header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 4)
      throw ParseError("line " + std::to_string(lineno) + ": expected 4 columns");
    CsvCount row;
    row.m = detail::parse_int(fields[0], "CSV m column");
    row.w = DyckWord::parse(fields[1]);
    row.pattern_set = fields[2];
    try {
      row.count = std::stoull(fields[3]);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad count");
    }
    if (row.w.semilength() != row.m)
      throw ParseError("line " + std::to_string(lineno) + ": word length != 2m");
    out.push_back(std::move(row));
  }
  if (!seen_header) throw ParseError("missing CSV header");
  return out;
}

inline nlohmann::json to_json(const CountTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) rows.push_back({{"w", r.w.str()}, {"count", r.count}});
  return {{"schema_version", kSchemaVersion},
          {"m", t.m},
          {"pattern_set", t.pattern_set},
          {"rows", rows},
          {"total", t.total()}};
}

inline nlohmann::json to_json(const RelationVerdict& v) {
  auto cell = [](const RelationCell& c) {
    return nlohmann::json{{"m", c.m}, {"w", c.w.str()}, {"a", c.a}, {"b", c.b}};
  };
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : v.cells) cells.push_back(cell(c));
  nlohmann::json j{{"schema_version", kSchemaVersion},
                   {"a", v.a_label},
                   {"b", v.b_label},
                   {"max_m", v.max_m},
                   {"verdict", to_string(v.tag)},
                   {"scope", "checked for m <= " + std::to_string(v.max_m) + " only"},
                   {"cells", cells}};
  j["a_below_witness"] = v.a_below_witness ? cell(*v.a_below_witness) : nlohmann::json();
  j["b_below_witness"] = v.b_below_witness ? cell(*v.b_below_witness) : nlohmann::json();
  return j;
}

/// The leaf bijection G(m,w,M_132) -> G(m,w,C) induced by phi.
inline nlohmann::json to_json(const PhiWitness& p) {
  nlohmann::json leaves = nlohmann::json::array();
  for (const auto& [g, h] : p.leaf_map) leaves.push_back({{"tm", g.str()}, {"tc", h.str()}});
  return {{"schema_version", kSchemaVersion},
          {"w", p.base.str()},
          {"leaf_count", p.leaf_map.size()},
          {"node_pairs", p.pairs.size()},
          {"block_sizes_agree", p.sizes_agree()},
          {"node_bijection", p.node_bijection},
          {"leaves", leaves}};
}

inline nlohmann::json to_json(const Transversal& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (int i = 1; i <= t.shape().m(); ++i) cells.push_back({i, t.column(i)});
  return {{"schema_version", kSchemaVersion},
          {"m", t.shape().m()},
          {"row_order", "bottom-up"},
          {"rows", t.shape().rows()},
          {"cells", cells}};
}

}  // namespace matchkit
