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

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgd/core.hpp"
#include "sgd/distance.hpp"

namespace sgd {

/// Row-major pairing (i, k) <-> i * second_order + k, matching the block
/// layout of Kronecker products.
class ProductVertexMap {
 public:
  ProductVertexMap(std::size_t first_order, std::size_t second_order)
      : n1_(first_order), n2_(second_order) {}

  std::size_t order() const noexcept { return n1_ * n2_; }
  Vertex flat(Vertex i, Vertex k) const {
    if (i >= n1_ || k >= n2_) throw std::out_of_range("product coordinate out of range");
    return i * n2_ + k;
  }
  std::pair<Vertex, Vertex> pair(Vertex flat_index) const {
    if (flat_index >= order()) throw std::out_of_range("product vertex out of range");
    return {flat_index / n2_, flat_index % n2_};
  }

 private:
  std::size_t n1_;
  std::size_t n2_;
};

/// (i,j) ~ (k,l) iff (i = k and j ~ l) or (j = l and i ~ k); the sign is
/// that of the factor edge whose coordinate changes.
inline SignedGraph cartesian(const SignedGraph& g1, const SignedGraph& g2) {
  const ProductVertexMap map(g1.order(), g2.order());
  std::vector<Edge> edges;
  edges.reserve(g1.order() * g2.size() + g2.order() * g1.size());
  for (Vertex i = 0; i < g1.order(); ++i)
    for (const auto& e : g2.edges()) edges.push_back({map.flat(i, e.u), map.flat(i, e.v), e.sign});
  for (Vertex j = 0; j < g2.order(); ++j)
    for (const auto& e : g1.edges()) edges.push_back({map.flat(e.u, j), map.flat(e.v, j), e.sign});
  return SignedGraph(map.order(), std::move(edges));
}

/// (i,j) ~ (k,l) iff i ~ k, or i = k and j ~ l. The sign comes from the
/// first factor when i != k and from the second factor otherwise.
inline SignedGraph lexicographic(const SignedGraph& g1, const SignedGraph& g2) {
  const ProductVertexMap map(g1.order(), g2.order());
  const std::size_t n2 = g2.order();
  std::vector<Edge> edges;
  edges.reserve(g1.size() * n2 * n2 + g1.order() * g2.size());
  for (const auto& e : g1.edges())
    for (Vertex j = 0; j < n2; ++j)
      for (Vertex l = 0; l < n2; ++l) edges.push_back({map.flat(e.u, j), map.flat(e.v, l), e.sign});
  for (Vertex i = 0; i < g1.order(); ++i)
    for (const auto& e : g2.edges()) edges.push_back({map.flat(i, e.u), map.flat(i, e.v), e.sign});
  return SignedGraph(map.order(), std::move(edges));
}

/// (i,j) ~ (k,l) iff i ~ k and j ~ l, with sign sigma1(ik) * sigma2(jl).
/// May be disconnected.
inline SignedGraph tensor(const SignedGraph& g1, const SignedGraph& g2) {
  const ProductVertexMap map(g1.order(), g2.order());
  std::vector<Edge> edges;
  edges.reserve(2 * g1.size() * g2.size());
  for (const auto& a : g1.edges())
    for (const auto& b : g2.edges()) {
      const Sign s = a.sign * b.sign;
      edges.push_back({map.flat(a.u, b.u), map.flat(a.v, b.v), s});
      edges.push_back({map.flat(a.u, b.v), map.flat(a.v, b.u), s});
    }
  return SignedGraph(map.order(), std::move(edges));
}

/// For connected factors: the tensor product is connected iff at least one
/// factor has an odd cycle. A single-vertex factor has no edges, so its
/// product is edgeless and connected only when it is itself K1.
inline bool tensor_is_connected(const SignedGraph& g1, const SignedGraph& g2) {
  require_connected(g1, "tensor connectivity test");
  require_connected(g2, "tensor connectivity test");
  if (g1.order() == 1 || g2.order() == 1) return g1.order() * g2.order() == 1;
  return has_odd_cycle(g1) || has_odd_cycle(g2);
}

/// Walk length or infinity. Infinity is a separate state, never a large
/// number, so max/min follow extended-integer rules.
class WalkLength {
 public:
  constexpr WalkLength() = default;  // infinity
  constexpr explicit WalkLength(std::size_t length) : length_(length) {}

  static constexpr WalkLength infinity() { return WalkLength(); }

  constexpr bool is_finite() const noexcept { return length_.has_value(); }
  std::size_t value() const {
    if (!length_) throw std::logic_error("infinite walk length has no value");
    return *length_;
  }

  friend constexpr bool operator==(const WalkLength&, const WalkLength&) = default;
  friend constexpr bool operator<(const WalkLength& a, const WalkLength& b) {
    if (!a.length_) return false;
    if (!b.length_) return true;
    return *a.length_ < *b.length_;
  }

  std::string to_string() const { return length_ ? std::to_string(*length_) : "inf"; }

 private:
  std::optional<std::size_t> length_;
};

inline WalkLength max(const WalkLength& a, const WalkLength& b) { return a < b ? b : a; }
inline WalkLength min(const WalkLength& a, const WalkLength& b) { return b < a ? b : a; }

/// Shortest odd and shortest even walk lengths between two vertices.
struct OddEvenDistance {
  WalkLength od;
  WalkLength ed;
};

/// Parity BFS over states (vertex, parity) from one source; entry v holds
/// the odd/even walk lengths from the source to v. Explores at most 2n states.
inline std::vector<OddEvenDistance> odd_even_distances_from(const SignedGraph& g, Vertex source) {
  g.check_vertex(source);
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(2 * n, kUnreachable);  // index 2v + parity
  std::vector<std::size_t> queue{2 * source};
  dist[2 * source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t state = queue[head];
    const Vertex u = state / 2;
    const std::size_t parity = state % 2;
    for (const auto& nb : g.neighbors(u)) {
      const std::size_t next = 2 * nb.vertex + (1 - parity);
      if (dist[next] == kUnreachable) {
        dist[next] = dist[state] + 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<OddEvenDistance> out(n);
  for (Vertex v = 0; v < n; ++v) {
    if (dist[2 * v + 1] != kUnreachable) out[v].od = WalkLength(dist[2 * v + 1]);
    if (dist[2 * v] != kUnreachable) out[v].ed = WalkLength(dist[2 * v]);
  }
  return out;
}

inline OddEvenDistance odd_even_distance(const SignedGraph& g, Vertex u, Vertex v) {
  require_connected(g, "odd/even distance");
  g.check_vertex(v);
  return odd_even_distances_from(g, u)[v];
}

/// Hop distance in tensor(g1, g2) between (u1,u2) and (v1,v2) as
/// min{ max{od1, od2}, max{ed1, ed2} }.
inline std::size_t tensor_distance(const SignedGraph& g1, const SignedGraph& g2,
                                   std::pair<Vertex, Vertex> from, std::pair<Vertex, Vertex> to) {
  if (!tensor_is_connected(g1, g2)) {
    throw DomainError("tensor product disconnected: neither factor has an odd cycle");
  }
  const auto a = odd_even_distance(g1, from.first, to.first);
  const auto b = odd_even_distance(g2, from.second, to.second);
  const WalkLength d = min(max(a.od, b.od), max(a.ed, b.ed));
  return d.value();
}

// ---------------------------------------------------------------------------
// Compatibility theorems as executable checks

/// Both sides of one theorem, evaluated independently.
struct TheoremCheck {
  bool applicable = false;
  bool predicted = false;  // factor-side condition
  bool observed = false;   // product compatibility, by direct computation
  bool iff = true;         // false: only observed => predicted is claimed

  bool holds() const noexcept {
    if (!applicable) return true;
    return iff ? predicted == observed : (!observed || predicted);
  }
};

/// True when every induced 2-path x-y-z of g (x and z non-adjacent) is
/// positive. Uniform-sign graphs always qualify; so does any complete graph.
inline bool induced_two_paths_positive(const SignedGraph& g) {
  for (Vertex y = 0; y < g.order(); ++y) {
    const auto nbrs = g.neighbors(y);
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b)
        if (nbrs[a].sign != nbrs[b].sign && !g.has_edge(nbrs[a].vertex, nbrs[b].vertex)) return false;
  }
  return true;
}

struct ProductTheoremReport {
  /// cartesian(g1,g2) compatible <=> g1 and g2 compatible.
  TheoremCheck cartesian;
  /// The usual statement: g1[g2] compatible <=> g1 compatible and g2 of
  /// uniform sign. Needs g1 to have an edge. The "only if" half is false:
  /// a mixed-sign g2 with no negative induced 2-path (K3 with one negative
  /// edge, say) still gives a compatible product.
  TheoremCheck lexicographic;
  /// g1[g2] compatible <=> g1 compatible and induced_two_paths_positive(g2).
  TheoremCheck lexicographic_exact;
  /// tensor(g1,g2) compatible => g1 and g2 compatible, when connected.
  TheoremCheck tensor;

  /// The three statements in their usual form.
  bool all_hold() const noexcept { return cartesian.holds() && lexicographic.holds() && tensor.holds(); }
};

inline ProductTheoremReport check_product_compatibility_theorems(const SignedGraph& g1,
                                                                 const SignedGraph& g2) {
  require_connected(g1, "product theorem check");
  require_connected(g2, "product theorem check");
  const bool c1 = is_compatible(g1);
  const bool c2 = is_compatible(g2);

  ProductTheoremReport report;
  report.cartesian = {true, c1 && c2, is_compatible(cartesian(g1, g2))};

  if (g1.order() >= 2) {
    const bool observed = is_compatible(lexicographic(g1, g2));
    report.lexicographic = {true, c1 && uniform_sign(g2).has_value(), observed};
    report.lexicographic_exact = {true, c1 && induced_two_paths_positive(g2), observed};
  }

  if (tensor_is_connected(g1, g2)) {
    report.tensor = {true, c1 && c2, is_compatible(tensor(g1, g2)), false};
  }
  return report;
}

}  // namespace sgd
