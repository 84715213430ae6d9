// Copyright 2026 The sgd Authors
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

// CSV and JSON encodings of the library's result types.

#pragma once

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sgd/catalog.hpp"
#include "sgd/conjecture.hpp"
#include "sgd/core.hpp"
#include "sgd/distance.hpp"
#include "sgd/matrix.hpp"
#include "sgd/polynomial.hpp"
#include "sgd/spectrum.hpp"

namespace sgd {

using Json = nlohmann::ordered_json;

inline SignedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_edge_list(text.str());
}

inline void write_graph_file(const std::string& path, const SignedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_edge_list(g);
}

/// One matrix row per line, comma separated.
inline std::string matrix_to_csv(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

/// {"order": n, "entries": [[...], ...]}
inline Json matrix_to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    entries.push_back(std::move(row));
  }
  return Json{{"order", m.rows()}, {"entries", std::move(entries)}};
}

inline IntMatrix matrix_from_json(const Json& j) {
  const std::size_t n = j.at("order").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != n) throw std::invalid_argument("matrix JSON: row count differs from order");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i].size() != n) throw std::invalid_argument("matrix JSON: ragged row");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = entries[i][k].get<std::int64_t>();
  }
  return m;
}

/// Coefficient as a JSON integer when it fits in 64 bits, else a decimal string.
inline Json bigint_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return c.convert_to<std::int64_t>();
  }
  return c.str();
}

/// Coefficients, highest degree first.
inline Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.descending()) out.push_back(bigint_to_json(c));
  return out;
}

inline Json spectrum_to_json(const Spectrum& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    const double r = std::round(e.value);
    Json value = std::abs(e.value - r) <= 1e-9 ? Json(static_cast<std::int64_t>(r)) : Json(e.value);
    entries.push_back(Json{{"value", std::move(value)}, {"multiplicity", e.multiplicity}});
  }
  return Json{{"spectrum", std::move(entries)}, {"tolerance", s.tolerance}, {"text", s.to_string()}};
}

inline Json graph_to_json(const SignedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, std::string(1, to_char(e.sign))}));
  return Json{{"order", g.order()}, {"size", g.size()}, {"edges", std::move(edges)}};
}

inline Json witness_to_json(const IncompatibilityWitness& w) {
  return Json{{"pair", Json::array({w.u, w.v})},
              {"distance", w.distance()},
              {"path_pos", w.path_pos},
              {"path_neg", w.path_neg},
              {"cycle", w.cycle},
              {"cycle_length", w.cycle.size()}};
}

inline Json petersen_table_to_json(const PetersenClassTable& t) {
  Json classes = Json::array();
  for (const auto& c : t.classes) {
    classes.push_back(Json{{"label", c.label},
                           {"class_size", c.class_size},
                           {"negative_edges", c.representative.negative_edge_count()},
                           {"representative", graph_to_json(c.representative)},
                           {"char_poly", polynomial_to_json(c.char_poly)},
                           {"char_poly_text", c.char_poly.to_string()}});
  }
  return Json{{"signings", t.signings_processed}, {"classes", std::move(classes)}};
}

inline Json conjecture_result_to_json(const ConjectureSearchResult& r) {
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    candidates.push_back(Json{{"trial", c.trial},
                              {"g1", graph_to_json(c.g1)},
                              {"g2", graph_to_json(c.g2)},
                              {"witness", witness_to_json(c.witness)},
                              {"oracle_confirmed", c.oracle_confirmed}});
  }
  return Json{{"trials", r.trials}, {"pairs_tested", r.pairs_tested}, {"candidates", std::move(candidates)}};
}

}  // namespace sgd
