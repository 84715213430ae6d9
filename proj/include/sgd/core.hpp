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
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace sgd {

using Vertex = std::size_t;

/// Raised when an input violates a mathematical precondition of an
/// operation (disconnected graph, incompatible factor, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by parse_edge_list; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr char to_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

inline Sign sign_from_int(int v) {
  if (v == 1) return Sign::Positive;
  if (v == -1) return Sign::Negative;
  throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(v));
}

/// Accepts "+", "-", "+1", "-1".
inline std::optional<Sign> parse_sign(std::string_view token) {
  if (token == "+" || token == "+1") return Sign::Positive;
  if (token == "-" || token == "-1") return Sign::Negative;
  return std::nullopt;
}

struct Edge {
  Vertex u;
  Vertex v;
  Sign sign;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex;
  Sign sign;
};

/// Simple undirected graph with a +/-1 edge signature on vertices 0..n-1.
///
/// Immutable once constructed. Edges are stored canonically (u < v, sorted),
/// and a dense sign table gives O(1) adjacency lookups; the graphs handled
/// here are small (products of at most a few dozen vertices).
class SignedGraph {
 public:
  /// Validates and canonicalizes. Throws std::invalid_argument on a
  /// self-loop, a duplicate edge, or an endpoint >= n.
  explicit SignedGraph(std::size_t n, std::vector<Edge> edges = {}) : n_(n), table_(n * n, 0) {
    if (n == 0) throw std::invalid_argument("signed graph needs at least one vertex");
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") has an endpoint >= " + std::to_string(n));
      }
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      auto& slot = table_[e.u * n + e.v];
      if (slot != 0) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ")");
      }
      slot = static_cast<std::int8_t>(to_int(e.sign));
      table_[e.v * n + e.u] = slot;
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    edges_ = std::move(edges);

    offsets_.assign(n + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      adjacency_[fill[e.u]++] = {e.v, e.sign};
      adjacency_[fill[e.v]++] = {e.u, e.sign};
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]),
                [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Canonical edge list: u < v, sorted by (u, v).
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(Vertex v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return table_[u * n_ + v] != 0;
  }

  std::optional<Sign> sign(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto s = table_[u * n_ + v];
    if (s == 0) return std::nullopt;
    return static_cast<Sign>(s);
  }

  std::size_t negative_edge_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign == Sign::Negative; }));
  }

  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
    }
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::int8_t> table_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Same underlying graph, every edge sign replaced by `s`.
inline SignedGraph with_uniform_sign(const SignedGraph& g, Sign s) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.sign = s;
  return SignedGraph(g.order(), std::move(edges));
}

/// Returns the sign shared by every edge, or nullopt if signs are mixed.
/// An edgeless graph is reported as Positive.
inline std::optional<Sign> uniform_sign(const SignedGraph& g) {
  if (g.size() == 0) return Sign::Positive;
  const Sign first = g.edges().front().sign;
  for (const auto& e : g.edges()) {
    if (e.sign != first) return std::nullopt;
  }
  return first;
}

// ---------------------------------------------------------------------------
// Edge-list text format

/// Parses the edge-list format: a header line "n m", then m lines "u v s".
/// Lines starting with '#' and blank lines are skipped.
inline SignedGraph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  std::vector<std::int8_t> seen;

  auto tokenize = [](std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
  };
  auto to_index = [&](std::string_view tok) -> std::size_t {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return value;
  };

  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!header) {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n m'");
      header = std::pair{to_index(tokens[0]), to_index(tokens[1])};
      if (header->first == 0) throw ParseError(line_no, "vertex count must be at least 1");
      seen.assign(header->first * header->first, 0);
      continue;
    }
    if (tokens.size() != 3) throw ParseError(line_no, "edge line must be 'u v s'");
    const std::size_t n = header->first;
    const std::size_t u = to_index(tokens[0]);
    const std::size_t v = to_index(tokens[1]);
    const auto s = parse_sign(tokens[2]);
    if (!s) throw ParseError(line_no, "sign must be one of + - +1 -1");
    if (u >= n || v >= n) {
      throw ParseError(line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    auto& slot = seen[std::min(u, v) * n + std::max(u, v)];
    if (slot) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(std::min(u, v)) + " " +
                                    std::to_string(std::max(u, v)));
    }
    slot = 1;
    edges.push_back({u, v, *s});
  }
  if (!header) throw ParseError(line_no, "missing header line 'n m'");
  if (edges.size() != header->second) {
    throw ParseError(line_no, "header declares " + std::to_string(header->second) +
                                  " edges but " + std::to_string(edges.size()) + " were given");
  }
  return SignedGraph(header->first, std::move(edges));
}

/// Canonical form: header, then sorted edges with '+'/'-' signs.
inline std::string serialize_edge_list(const SignedGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << to_char(e.sign) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Switching and balance

using SwitchingFunction = std::vector<Sign>;

/// Edge (u,v,s) becomes (u,v, zeta[u] * s * zeta[v]).
inline SignedGraph switch_signs(const SignedGraph& g, std::span<const Sign> zeta) {
  if (zeta.size() != g.order()) {
    throw std::invalid_argument("switching function has length " + std::to_string(zeta.size()) +
                                ", graph order is " + std::to_string(g.order()));
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.sign = zeta[e.u] * e.sign * zeta[e.v];
  return SignedGraph(g.order(), std::move(edges));
}

struct BalanceCertificate {
  bool balanced = true;
  /// When balanced: a potential with zeta[u] * sigma(uv) * zeta[v] = +1 on
  /// every edge. Its +1 / -1 classes form the Harary bipartition.
  SwitchingFunction potential;
};

inline BalanceCertificate balance_certificate(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<int> zeta(n, 0);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (zeta[root] != 0) continue;
    zeta[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (const auto& [w, s] : g.neighbors(u)) {
        const int want = zeta[u] * to_int(s);
        if (zeta[w] == 0) {
          zeta[w] = want;
          queue.push(w);
        } else if (zeta[w] != want) {
          return {false, {}};
        }
      }
    }
  }
  BalanceCertificate cert;
  cert.potential.reserve(n);
  for (int z : zeta) cert.potential.push_back(sign_from_int(z));
  return cert;
}

inline bool is_balanced(const SignedGraph& g) { return balance_certificate(g).balanced; }

/// Product of edge signs along a cycle given as a vertex sequence
/// (the closing edge back to the first vertex is implied).
inline Sign cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("a cycle needs at least three vertices");
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle repeats a vertex");
  }
  Sign result = Sign::Positive;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    const auto s = g.sign(a, b);
    if (!s) {
      throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) +
                                  ") is not an edge");
    }
    result = result * *s;
  }
  return result;
}

/// Sign of a path given as a vertex sequence. Throws on a non-edge.
inline Sign path_sign(const SignedGraph& g, std::span<const Vertex> path) {
  Sign result = Sign::Positive;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto s = g.sign(path[i], path[i + 1]);
    if (!s) {
      throw std::invalid_argument("(" + std::to_string(path[i]) + "," +
                                  std::to_string(path[i + 1]) + ") is not an edge");
    }
    result = result * *s;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Unsigned structure

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// Hop distances from `source`; kUnreachable for other components.
inline std::vector<std::size_t> bfs_distances(const SignedGraph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (const auto& nb : g.neighbors(u)) {
      if (dist[nb.vertex] == kUnreachable) {
        dist[nb.vertex] = dist[u] + 1;
        queue.push(nb.vertex);
      }
    }
  }
  return dist;
}

inline bool is_connected(const SignedGraph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

inline void require_connected(const SignedGraph& g, std::string_view what) {
  if (!is_connected(g)) throw DomainError(std::string(what) + " requires a connected graph");
}

/// True iff the underlying graph is not 2-colorable.
inline bool has_odd_cycle(const SignedGraph& g) {
  std::vector<int> color(g.order(), -1);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (const auto& nb : g.neighbors(u)) {
        if (color[nb.vertex] == -1) {
          color[nb.vertex] = 1 - color[u];
          queue.push(nb.vertex);
        } else if (color[nb.vertex] == color[u]) {
          return true;
        }
      }
    }
  }
  return false;
}

/// Connected, at least three vertices, and no cut vertex.
inline bool is_two_connected(const SignedGraph& g) {
  const std::size_t n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  // Iterative Tarjan low-link.
  std::vector<std::size_t> disc(n, 0), low(n, 0), child_count(n, 0), parent(n, kUnreachable);
  std::vector<std::size_t> next_edge(n, 0);
  std::size_t timer = 1;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    const auto nbs = g.neighbors(u);
    if (next_edge[u] < nbs.size()) {
      const Vertex w = nbs[next_edge[u]++].vertex;
      if (disc[w] == 0) {
        parent[w] = u;
        ++child_count[u];
        disc[w] = low[w] = timer++;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (parent[u] != kUnreachable) {
      const Vertex p = parent[u];
      low[p] = std::min(low[p], low[u]);
      if (parent[p] != kUnreachable && low[u] >= disc[p]) return false;
    }
  }
  return child_count[0] < 2;
}

/// Every vertex pair is joined by exactly one shortest path. Counts are
/// capped at 2; only uniqueness matters. Disconnected pairs are ignored.
inline bool is_geodetic(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n);
  std::vector<std::uint8_t> count(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::fill(count.begin(), count.end(), 0);
    queue.clear();
    dist[s] = 0;
    count[s] = 1;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (const auto& nb : g.neighbors(u)) {
        const Vertex w = nb.vertex;
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[u] + 1) count[w] = static_cast<std::uint8_t>(std::min(2, count[w] + count[u]));
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (count[v] > 1) return false;
    }
  }
  return true;
}

struct StructuralPredicates {
  bool is_connected = false;
  bool is_two_connected = false;
  bool is_geodetic = false;
  bool has_odd_cycle = false;

  friend bool operator==(const StructuralPredicates&, const StructuralPredicates&) = default;
};

inline StructuralPredicates structural_predicates(const SignedGraph& g) {
  return {is_connected(g), is_two_connected(g), is_geodetic(g), has_odd_cycle(g)};
}

// ---------------------------------------------------------------------------
// Net degree

/// Positive degree minus negative degree.
inline int net_degree(const SignedGraph& g, Vertex v) {
  int total = 0;
  for (const auto& nb : g.neighbors(v)) total += to_int(nb.sign);
  return total;
}

inline bool is_net_regular(const SignedGraph& g) {
  const int first = net_degree(g, 0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (net_degree(g, v) != first) return false;
  }
  return true;
}

}  // namespace sgd
