// Copyright 2025 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bfml/binary_function.hpp"
#include "bfml/classes.hpp"
#include "bfml/errors.hpp"
#include "bfml/minors.hpp"
#include "bfml/rank.hpp"
#include "bfml/rational.hpp"
#include "bfml/subset.hpp"

namespace bfml {

using Json = nlohmann::json;

// Documents address subsets by comma-joined, lexicographically sorted labels;
// the empty string is ∅. Tables must be total: every subset key present.

namespace detail {

inline std::string join_sorted(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  std::string key;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) key += ',';
    key += labels[i];
  }
  return key;
}

inline std::string mask_key(const std::vector<std::string>& ground, subset_t mask) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (mask & (subset_t{1} << i)) labels.push_back(ground[i]);
  return join_sorted(std::move(labels));
}

}  // namespace detail

inline std::string subset_key(const BinaryFunction& f, subset_t mask) {
  return detail::mask_key(f.ground_set(), mask);
}

namespace detail {

inline std::vector<std::string> parse_ground_set(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  if (!doc.contains("ground_set") || !doc["ground_set"].is_array())
    throw SchemaError("missing 'ground_set' array");
  std::vector<std::string> ground;
  for (const Json& item : doc["ground_set"]) {
    if (!item.is_string()) throw SchemaError("ground-set labels must be strings");
    std::string label = item.get<std::string>();
    if (label.empty() || label.find(',') != std::string::npos)
      throw SchemaError("label '" + label + "' is empty or contains a comma");
    ground.push_back(std::move(label));
  }
  if (ground.size() > static_cast<std::size_t>(kMaxOrder))
    throw OrderTooLarge("ground set larger than the order cap");
  return ground;
}

// Total lookup of every subset key; missing or extra keys are schema errors.
inline std::vector<std::string> subset_values(const Json& doc,
                                              const std::vector<std::string>& ground) {
  if (!doc.contains("values") || !doc["values"].is_object())
    throw SchemaError("missing 'values' object");
  const Json& values = doc["values"];
  std::size_t size = std::size_t{1} << ground.size();
  std::vector<std::string> out(size);
  for (subset_t m = 0; m < size; ++m) {
    std::string key = mask_key(ground, m);
    auto it = values.find(key);
    if (it == values.end()) throw SchemaError("missing value for subset '" + key + "'");
    if (!it->is_string())
      throw SchemaError("value for subset '" + key + "' must be a string");
    out[m] = it->get<std::string>();
  }
  if (values.size() != size)
    throw SchemaError("'values' has " + std::to_string(values.size()) +
                      " keys; expected " + std::to_string(size));
  return out;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace detail

inline BinaryFunction parse_function(const std::string& text) {
  Json doc = detail::parse_json(text);
  std::vector<std::string> ground = detail::parse_ground_set(doc);
  std::vector<std::string> raw = detail::subset_values(doc, ground);
  std::vector<Rational> table;
  table.reserve(raw.size());
  for (const std::string& s : raw) table.push_back(parse_rational(s));
  return BinaryFunction(std::move(ground), std::move(table));
}

inline Json function_to_json(const BinaryFunction& f) {
  Json values = Json::object();
  for (subset_t m = 0; m <= f.full_set(); ++m)
    values[subset_key(f, m)] = format_rational(f.value(m));
  return Json{{"ground_set", f.ground_set()}, {"values", values}};
}

inline std::string serialize_function(const BinaryFunction& f) {
  return function_to_json(f).dump(2) + "\n";
}

// Integer-valued set function document (the inverse transform's input).
struct RankTable {
  std::vector<std::string> ground_set;
  std::vector<long long> values;  // dense by subset mask
};

inline RankTable parse_rank_table(const std::string& text) {
  Json doc = detail::parse_json(text);
  std::vector<std::string> ground = detail::parse_ground_set(doc);
  std::vector<std::string> raw = detail::subset_values(doc, ground);
  RankTable table{std::move(ground), {}};
  table.values.reserve(raw.size());
  for (const std::string& s : raw) {
    Rational q = parse_rational(s);
    if (!is_integer(q))
      throw NonIntegerRank("rank value " + s + " is not an integer");
    table.values.push_back(static_cast<long long>(q.get_num().get_si()));
  }
  if (table.values[0] != 0) throw SchemaError("rank of ∅ must be 0");
  return table;
}

inline std::string serialize_rank_table(const RankTable& t) {
  Json values = Json::object();
  for (subset_t m = 0; m < t.values.size(); ++m)
    values[detail::mask_key(t.ground_set, m)] = std::to_string(t.values[m]);
  return Json{{"ground_set", t.ground_set}, {"values", values}}.dump(2) + "\n";
}

inline Json rank_value_to_json(const RankValue& rv) {
  Json j{{"ratio", format_rational(rv.ratio())},
         {"numerator", format_rational(rv.numerator)},
         {"denominator", format_rational(rv.denominator)},
         {"approx", rv.approx()}};
  if (rv.integer_log)
    j["log2"] = *rv.integer_log;
  else
    j["log2"] = nullptr;
  return j;
}

inline Json rank_function_to_json(const RankFunction& rf) {
  Json values = Json::object();
  for (subset_t m = 0; m <= rf.full_set(); ++m)
    values[detail::mask_key(rf.ground_set, m)] = rank_value_to_json(rf.at(m));
  return Json{{"ground_set", rf.ground_set}, {"values", values}};
}

// Rows of 0/1 characters; one column per ground element.
inline std::vector<std::vector<int>> parse_gf2_matrix(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw SchemaError("matrix file has no rows");
  std::size_t width = rows[0].size();
  for (const std::string& row : rows) {
    if (row.size() != width) throw SchemaError("matrix rows have differing lengths");
    for (char c : row)
      if (c != '0' && c != '1') throw SchemaError("matrix entries must be 0 or 1");
  }
  std::vector<std::vector<int>> columns(width, std::vector<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) columns[j][i] = rows[i][j] - '0';
  return columns;
}

// One "u v" pair per line.
inline std::vector<std::pair<std::string, std::string>> parse_edge_list(
    const std::string& text) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string u, v, extra;
    if (!(fields >> u)) continue;  // blank line
    if (!(fields >> v) || (fields >> extra))
      throw SchemaError("edge lines must contain exactly two vertex labels: " + line);
    edges.emplace_back(std::move(u), std::move(v));
  }
  return edges;
}

inline Json certificate_to_json(const Certificate& cert) {
  Json evidence = Json::array();
  for (const ElementEvidence& ev : cert.evidence) {
    Json e{{"element", ev.element},
           {"contraction_in_class", ev.contraction_in_class},
           {"deletion_defined", ev.deletion_defined}};
    if (ev.deletion_defined)
      e["deletion_in_class"] = ev.deletion_in_class;
    else
      e["deletion_in_class"] = nullptr;
    evidence.push_back(std::move(e));
  }
  Json violations = Json::array();
  for (const AxiomViolation& v : cert.violations) {
    Json witnesses = Json::array();
    for (subset_t w : v.witnesses) witnesses.push_back(subset_key(cert.subject, w));
    violations.push_back(Json{{"axiom", axiom_name(v.axiom)},
                              {"witnesses", witnesses},
                              {"detail", v.detail}});
  }
  return Json{{"class", cert.class_id.name()},
              {"verdict", verdict_name(cert.verdict)},
              {"subject_in_class", cert.subject_in_class},
              {"subject", function_to_json(cert.subject)},
              {"evidence", evidence},
              {"violations", violations}};
}

inline Json witness_to_json(const BinaryFunction& host, const MinorWitness& w) {
  Json bijection = Json::object();
  for (const auto& [from, to] : w.bijection) bijection[from] = to;
  return Json{{"contract", host.labels_of(w.spec.contract_set)},
              {"delete", host.labels_of(w.spec.delete_set)},
              {"bijection", bijection},
              {"minor", function_to_json(w.result)}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace bfml
