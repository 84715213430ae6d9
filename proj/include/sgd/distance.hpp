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
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sgd/core.hpp"
#include "sgd/matrix.hpp"

namespace sgd {

/// Hop distance together with the largest and smallest sign over all
/// shortest paths of a vertex pair.
struct PairDistanceSummary {
  std::size_t d = 0;
  Sign sigma_max = Sign::Positive;
  Sign sigma_min = Sign::Positive;

  bool compatible() const noexcept { return sigma_max == sigma_min; }
  std::int64_t d_max() const noexcept { return to_int(sigma_max) * static_cast<std::int64_t>(d); }
  std::int64_t d_min() const noexcept { return to_int(sigma_min) * static_cast<std::int64_t>(d); }

  friend bool operator==(const PairDistanceSummary&, const PairDistanceSummary&) = default;
};

enum class DistanceKind { Max, Min };

namespace detail {
inline constexpr std::uint8_t kHasPositive = 1;
inline constexpr std::uint8_t kHasNegative = 2;

inline std::uint8_t flip_if_negative(std::uint8_t signs, Sign s) {
  if (s == Sign::Positive) return signs;
  return static_cast<std::uint8_t>(((signs & kHasPositive) << 1) | ((signs & kHasNegative) >> 1));
}

inline std::size_t sign_slot(Sign s) { return s == Sign::Positive ? 0 : 1; }
}  // namespace detail

/// Shortest-path DAG from one source with the set of achievable path signs
/// at every vertex, plus one predecessor per achievable sign so that a
/// shortest path of either sign can be recovered.
class SignedBfsTree {
 public:
  SignedBfsTree(const SignedGraph& g, Vertex source)
      : source_(source), dist_(g.order(), kUnreachable), signs_(g.order(), 0) {
    g.check_vertex(source);
    for (auto& p : pred_) p.assign(g.order(), kUnreachable);

    std::vector<Vertex> order;
    order.reserve(g.order());
    dist_[source] = 0;
    signs_[source] = detail::kHasPositive;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (const auto& nb : g.neighbors(order[head])) {
        if (dist_[nb.vertex] == kUnreachable) {
          dist_[nb.vertex] = dist_[order[head]] + 1;
          order.push_back(nb.vertex);
        }
      }
    }

    // BFS order is level order, so every predecessor of `w` (one level up)
    // already holds its final sign set when `w` pulls from it.
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
      const Vertex w = order[idx];
      for (const auto& nb : g.neighbors(w)) {
        const Vertex u = nb.vertex;
        if (dist_[u] + 1 != dist_[w]) continue;
        const std::uint8_t arriving = detail::flip_if_negative(signs_[u], nb.sign);
        for (Sign s : {Sign::Positive, Sign::Negative}) {
          const std::uint8_t bit = s == Sign::Positive ? detail::kHasPositive : detail::kHasNegative;
          if ((arriving & bit) && !(signs_[w] & bit)) pred_[detail::sign_slot(s)][w] = u;
        }
        signs_[w] |= arriving;
      }
    }
  }

  Vertex source() const noexcept { return source_; }
  std::size_t distance(Vertex v) const { return dist_.at(v); }
  bool reachable(Vertex v) const { return dist_.at(v) != kUnreachable; }

  bool has_path_with_sign(Vertex v, Sign s) const {
    return signs_.at(v) & (s == Sign::Positive ? detail::kHasPositive : detail::kHasNegative);
  }

  std::optional<PairDistanceSummary> summary(Vertex v) const {
    if (!reachable(v)) return std::nullopt;
    const bool pos = has_path_with_sign(v, Sign::Positive);
    const bool neg = has_path_with_sign(v, Sign::Negative);
    return PairDistanceSummary{dist_[v], pos ? Sign::Positive : Sign::Negative,
                               neg ? Sign::Negative : Sign::Positive};
  }

  /// A shortest source-v path with the given sign, source first.
  std::optional<std::vector<Vertex>> path_to(const SignedGraph& g, Vertex v, Sign s) const {
    if (!reachable(v) || !has_path_with_sign(v, s)) return std::nullopt;
    std::vector<Vertex> path{v};
    Sign remaining = s;
    while (v != source_) {
      const Vertex u = pred_[detail::sign_slot(remaining)][v];
      remaining = remaining * *g.sign(u, v);
      v = u;
      path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  Vertex source_;
  std::vector<std::size_t> dist_;
  std::vector<std::uint8_t> signs_;
  std::array<std::vector<Vertex>, 2> pred_;
};

/// Per-target summaries from `source`; unreachable targets are nullopt.
inline std::vector<std::optional<PairDistanceSummary>> signed_bfs(const SignedGraph& g, Vertex source) {
  const SignedBfsTree tree(g, source);
  std::vector<std::optional<PairDistanceSummary>> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(tree.summary(v));
  return out;
}

struct DistanceMatrices {
  SignedIntMatrix max;
  SignedIntMatrix min;
};

inline DistanceMatrices distance_matrices(const SignedGraph& g) {
  require_connected(g, "distance matrix");
  const std::size_t n = g.order();
  DistanceMatrices out{SignedIntMatrix(n, n), SignedIntMatrix(n, n)};
  for (Vertex s = 0; s < n; ++s) {
    const auto row = signed_bfs(g, s);
    for (Vertex v = 0; v < n; ++v) {
      out.max(s, v) = row[v]->d_max();
      out.min(s, v) = row[v]->d_min();
    }
  }
  return out;
}

/// D^max or D^min. Throws DomainError on a disconnected graph.
inline SignedIntMatrix distance_matrix(const SignedGraph& g, DistanceKind which) {
  auto both = distance_matrices(g);
  return which == DistanceKind::Max ? std::move(both.max) : std::move(both.min);
}

/// Unordered pairs (u < v) with d_max != d_min, sorted by (distance, u, v).
inline std::vector<std::pair<Vertex, Vertex>> incompatible_pairs(const SignedGraph& g) {
  require_connected(g, "compatibility check");
  std::vector<std::tuple<std::size_t, Vertex, Vertex>> found;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto row = signed_bfs(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!row[v]->compatible()) found.emplace_back(row[v]->d, u, v);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(found.size());
  for (const auto& [d, u, v] : found) pairs.emplace_back(u, v);
  return pairs;
}

inline bool is_compatible(const SignedGraph& g) {
  require_connected(g, "compatibility check");
  for (Vertex u = 0; u < g.order(); ++u) {
    const SignedBfsTree tree(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (tree.has_path_with_sign(v, Sign::Positive) && tree.has_path_with_sign(v, Sign::Negative)) {
        return false;
      }
    }
  }
  return true;
}

/// Two internally disjoint shortest u-v paths of opposite sign; together
/// they close a negative cycle of length 2k with u, v antipodal.
struct IncompatibilityWitness {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> path_pos;
  std::vector<Vertex> path_neg;
  /// u, the interior of path_pos, v, then the interior of path_neg reversed.
  std::vector<Vertex> cycle;

  std::size_t distance() const noexcept { return path_pos.size() - 1; }
};

/// Builds a witness starting from an incompatible pair. If the recovered
/// positive and negative paths meet internally, some segment between two
/// consecutive meeting points carries opposite signs; that segment's end
/// points form a strictly closer incompatible pair and the search recurses
/// there. The returned witness may therefore be for a closer pair than
/// (u, v). Throws std::invalid_argument if (u, v) is compatible.
inline IncompatibilityWitness witness_for_pair(const SignedGraph& g, Vertex u, Vertex v) {
  while (true) {
    const SignedBfsTree tree(g, u);
    auto pos = tree.path_to(g, v, Sign::Positive);
    auto neg = tree.path_to(g, v, Sign::Negative);
    if (!pos || !neg) {
      throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                  " are not an incompatible pair");
    }
    const std::size_t k = pos->size() - 1;
    // Shortest paths from the same source visit a shared vertex at the same
    // index, so meeting points are exactly the indices where they agree.
    std::vector<std::size_t> meets{0};
    for (std::size_t i = 1; i < k; ++i) {
      if ((*pos)[i] == (*neg)[i]) meets.push_back(i);
    }
    meets.push_back(k);

    if (meets.size() == 2) {
      IncompatibilityWitness w{u, v, std::move(*pos), std::move(*neg), {}};
      w.cycle = w.path_pos;
      for (std::size_t i = k - 1; i >= 1; --i) w.cycle.push_back(w.path_neg[i]);
      return w;
    }
    for (std::size_t j = 0; j + 1 < meets.size(); ++j) {
      const auto a = static_cast<std::ptrdiff_t>(meets[j]);
      const auto b = static_cast<std::ptrdiff_t>(meets[j + 1]) + 1;
      const std::vector<Vertex> seg_pos(pos->begin() + a, pos->begin() + b);
      const std::vector<Vertex> seg_neg(neg->begin() + a, neg->begin() + b);
      if (path_sign(g, seg_pos) != path_sign(g, seg_neg)) {
        u = seg_pos.front();
        v = seg_pos.back();
        break;
      }
    }
  }
}

/// Witness at the least distance over all incompatible pairs; nullopt iff
/// the graph is compatible. Throws DomainError on a disconnected graph.
inline std::optional<IncompatibilityWitness> least_incompatible_witness(const SignedGraph& g) {
  const auto pairs = incompatible_pairs(g);
  if (pairs.empty()) return std::nullopt;
  const auto [u, v] = pairs.front();
  auto w = witness_for_pair(g, u, v);
  if (w.u != u || w.v != v) {
    // A closer incompatible pair would contradict the ordering above.
    throw std::logic_error("witness reduction left the least incompatible pair");
  }
  return w;
}

/// K_n whose existing edges keep their sign and whose non-adjacent pairs
/// take sigma_max (resp. sigma_min).
inline SignedGraph associated_complete(const SignedGraph& g, DistanceKind which) {
  if (g.order() < 2) throw std::invalid_argument("associated complete graph needs n >= 2");
  const auto d = distance_matrix(g, which);
  std::vector<Edge> edges;
  edges.reserve(g.order() * (g.order() - 1) / 2);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      edges.push_back({u, v, d(u, v) > 0 ? Sign::Positive : Sign::Negative});
  return SignedGraph(g.order(), std::move(edges));
}

/// Reference summary by exhaustive enumeration of shortest u-v paths.
/// Walks only edges that decrease the hop distance to v and records every
/// sign reached. Exponential in general, hence the order bound.
inline PairDistanceSummary brute_force_summary(const SignedGraph& g, Vertex u, Vertex v,
                                               std::size_t max_order = 12) {
  if (g.order() > max_order) {
    throw std::invalid_argument("brute-force oracle limited to order " + std::to_string(max_order));
  }
  require_connected(g, "brute-force oracle");
  g.check_vertex(u);
  const auto to_target = bfs_distances(g, v);
  bool seen_pos = false;
  bool seen_neg = false;

  struct Frame {
    Vertex at;
    Sign sign;
  };
  std::vector<Frame> stack{{u, Sign::Positive}};
  while (!stack.empty() && !(seen_pos && seen_neg)) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.at == v) {
      (f.sign == Sign::Positive ? seen_pos : seen_neg) = true;
      continue;
    }
    for (const auto& nb : g.neighbors(f.at)) {
      if (to_target[nb.vertex] + 1 == to_target[f.at]) stack.push_back({nb.vertex, f.sign * nb.sign});
    }
  }
  return {to_target[u], seen_pos ? Sign::Positive : Sign::Negative,
          seen_neg ? Sign::Negative : Sign::Positive};
}

}  // namespace sgd
