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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgd/core.hpp"
#include "sgd/distance.hpp"
#include "sgd/parallel.hpp"
#include "sgd/polynomial.hpp"

namespace sgd {

// ---------------------------------------------------------------------------
// Named generators

/// "-+++" -> {-, +, +, +}. Each character must be '+' or '-'.
inline std::vector<Sign> parse_sign_pattern(std::string_view pattern) {
  std::vector<Sign> signs;
  for (char c : pattern) {
    if (c == '+') {
      signs.push_back(Sign::Positive);
    } else if (c == '-') {
      signs.push_back(Sign::Negative);
    } else {
      throw std::invalid_argument(std::string("bad sign character '") + c + "' in pattern");
    }
  }
  return signs;
}

namespace detail {

/// A one-element pattern applies to every edge.
inline std::vector<Sign> expand_pattern(const std::vector<Sign>& pattern, std::size_t edge_count) {
  if (pattern.size() == 1) return std::vector<Sign>(edge_count, pattern.front());
  if (pattern.size() != edge_count) {
    throw std::invalid_argument("sign pattern has length " + std::to_string(pattern.size()) +
                                " but the graph has " + std::to_string(edge_count) + " edges");
  }
  return pattern;
}

}  // namespace detail

/// Path 0-1-...-(n-1); pattern[i] signs edge (i, i+1).
inline SignedGraph make_path(std::size_t n, const std::vector<Sign>& pattern) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  if (n >= 2) {
    const auto signs = detail::expand_pattern(pattern, n - 1);
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, signs[i]});
  }
  return SignedGraph(n, std::move(edges));
}

/// Cycle 0-1-...-(n-1)-0; pattern[i] signs edge (i, i+1 mod n).
inline SignedGraph make_cycle(std::size_t n, const std::vector<Sign>& pattern) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  const auto signs = detail::expand_pattern(pattern, n);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, signs[i]});
  return SignedGraph(n, std::move(edges));
}

inline SignedGraph make_complete(std::size_t n, Sign s) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, s});
  return SignedGraph(n, std::move(edges));
}

/// Outer 5-cycle on 0..4, inner pentagram on 5..9 (5+i ~ 5+(i+2) mod 5),
/// spokes i ~ i+5.
inline SignedGraph make_petersen(Sign s = Sign::Positive) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, s});
    edges.push_back({5 + i, 5 + (i + 2) % 5, s});
    edges.push_back({i, i + 5, s});
  }
  return SignedGraph(10, std::move(edges));
}

/// Petersen graph with canonical edge e (in sorted order) negative iff bit e
/// of `negative_mask` is set.
inline SignedGraph petersen_signing(std::uint32_t negative_mask) {
  const SignedGraph base = make_petersen();
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (negative_mask >> e & 1u) edges[e].sign = Sign::Negative;
  }
  return SignedGraph(10, std::move(edges));
}

inline constexpr std::size_t kPetersenEdges = 15;
inline constexpr std::uint32_t kPetersenSignings = 1u << kPetersenEdges;

// ---------------------------------------------------------------------------
// The six signed Petersen graphs

struct PetersenReference {
  std::string label;
  IntPolynomial char_poly;
};

/// Distance characteristic polynomials of the six switching-isomorphism
/// types of signed Petersen graphs, each verified by exact computation.
inline const std::vector<PetersenReference>& petersen_reference_polynomials() {
  static const std::vector<PetersenReference> table = {
      {"+P", IntPolynomial::from_descending({1, 0, -135, -1080, -3645, -5832, -3645, 0, 0, 0, 0})},
      {"P1", IntPolynomial::from_descending({1, 0, -135, -504, 2851, 15688, -5229, -122256, -157680, 0, 0})},
      {"P2,2", IntPolynomial::from_descending(
                   {1, 0, -135, -216, 5587, 13648, -77957, -220888, 243912, 645984, -308880})},
      {"P2,3", IntPolynomial::from_descending(
                   {1, 0, -135, -184, 6211, 13720, -111981, -295840, 690800, 1968000, 0})},
      {"P3,2", IntPolynomial::from_descending(
                   {1, 0, -135, 40, 6675, -4848, -140725, 195240, 986040, -2613600, 1724976})},
      {"P3,3", IntPolynomial::from_descending(
                   {1, 0, -135, -120, 6435, 6696, -145725, -126000, 1620000, 800000, -7200000})},
  };
  return table;
}

struct PetersenClass {
  std::string label;
  SignedGraph representative;
  std::uint32_t representative_mask = 0;
  IntPolynomial char_poly;
  std::size_t class_size = 0;
};

struct PetersenClassTable {
  std::vector<PetersenClass> classes;  // in reference order: +P, P1, ..., P3,3
  std::size_t signings_processed = 0;
};

namespace detail {

/// Fewer negative edges first; ties go to the sign vector (over canonical
/// edges, '-' before '+') that is lexicographically smaller.
inline bool better_representative(std::uint32_t a, std::uint32_t b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a >> std::countr_zero(diff)) & 1u;
}

struct ClassAccumulator {
  std::size_t count = 0;
  std::uint32_t best_mask = 0;
};

inline IntPolynomial petersen_signing_poly(std::uint32_t mask) {
  const auto d = distance_matrices(petersen_signing(mask));
  if (!(d.max == d.min)) {
    throw std::logic_error("signed Petersen graph with mask " + std::to_string(mask) + " is incompatible");
  }
  return char_poly(d.max);
}

}  // namespace detail

/// Distance characteristic polynomial of every one of the 2^15 signings,
/// grouped by polynomial. Throws std::logic_error unless exactly six
/// groups appear and they match petersen_reference_polynomials().
inline PetersenClassTable enumerate_petersen_signings(std::size_t workers = worker_count()) {
  using Groups = std::map<IntPolynomial, detail::ClassAccumulator>;
  std::vector<Groups> partial(std::max<std::size_t>(1, std::min<std::size_t>(workers, kPetersenSignings)));
  parallel_chunks(
      kPetersenSignings,
      [&](std::size_t begin, std::size_t end, std::size_t worker) {
        auto& groups = partial[worker];
        for (std::size_t m = begin; m < end; ++m) {
          const auto mask = static_cast<std::uint32_t>(m);
          auto& acc = groups[detail::petersen_signing_poly(mask)];
          if (acc.count == 0 || detail::better_representative(mask, acc.best_mask)) acc.best_mask = mask;
          ++acc.count;
        }
      },
      partial.size());

  Groups merged;
  for (const auto& groups : partial)
    for (const auto& [poly, acc] : groups) {
      auto& into = merged[poly];
      if (into.count == 0 || detail::better_representative(acc.best_mask, into.best_mask)) {
        into.best_mask = acc.best_mask;
      }
      into.count += acc.count;
    }

  if (merged.size() != 6) {
    throw std::logic_error("expected 6 distance polynomials over Petersen signings, found " +
                           std::to_string(merged.size()));
  }

  PetersenClassTable table;
  for (const auto& ref : petersen_reference_polynomials()) {
    const auto it = merged.find(ref.char_poly);
    if (it == merged.end()) throw std::logic_error("no signing produced the polynomial of " + ref.label);
    table.classes.push_back({ref.label, petersen_signing(it->second.best_mask), it->second.best_mask,
                             ref.char_poly, it->second.count});
    table.signings_processed += it->second.count;
  }

  // Anchors: all-positive is +P, a single negative edge is P1, all-negative is P3,3.
  const auto label_of = [&](std::uint32_t mask) {
    const auto poly = detail::petersen_signing_poly(mask);
    for (const auto& c : table.classes)
      if (c.char_poly == poly) return c.label;
    return std::string();
  };
  if (label_of(0) != "+P" || label_of(1) != "P1" || label_of(kPetersenSignings - 1) != "P3,3") {
    throw std::logic_error("Petersen class anchors do not match the reference labels");
  }
  return table;
}

}  // namespace sgd
