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

// Distance matrices of graph products assembled from factor matrices by
// Kronecker products, and the spectrum of g[K2].

#pragma once

#include <cstddef>
#include <vector>

#include "sgd/core.hpp"
#include "sgd/distance.hpp"
#include "sgd/matrix.hpp"
#include "sgd/spectrum.hpp"

namespace sgd {

/// Signed adjacency matrix A.
inline IntMatrix adjacency_matrix(const SignedGraph& g) {
  IntMatrix a(g.order(), g.order());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = to_int(e.sign);
    a(e.v, e.u) = to_int(e.sign);
  }
  return a;
}

/// Adjacency of the associated signed complete graph K^{D+-}. An order-1
/// graph gives the 1x1 zero matrix.
inline IntMatrix associated_complete_matrix(const SignedGraph& g) {
  if (g.order() == 1) return IntMatrix(1, 1);
  return adjacency_matrix(associated_complete(g, DistanceKind::Max));
}

namespace detail {

inline void require_compatible_factor(const SignedGraph& g, const char* what) {
  require_connected(g, what);
  if (!is_compatible(g)) throw DomainError(std::string(what) + " requires compatible factors");
}

/// D1 (x) J_n + I_m (x) (2K2 - A2), no hypothesis checks.
inline IntMatrix lexicographic_kronecker_form(const SignedGraph& g1, const SignedGraph& g2) {
  const IntMatrix d1 = distance_matrix(g1, DistanceKind::Max);
  const IntMatrix diagonal_block = std::int64_t{2} * associated_complete_matrix(g2) - adjacency_matrix(g2);
  return kron(d1, IntMatrix::ones(g2.order(), g2.order())) +
         kron(IntMatrix::identity(g1.order()), diagonal_block);
}

}  // namespace detail

/// D(g1 x g2) = D1 (x) (K2 + I) + (K1 + I) (x) D2 for compatible factors.
inline IntMatrix cartesian_distance_formula(const SignedGraph& g1, const SignedGraph& g2) {
  detail::require_compatible_factor(g1, "cartesian distance formula");
  detail::require_compatible_factor(g2, "cartesian distance formula");
  const IntMatrix k1 = associated_complete_matrix(g1) + IntMatrix::identity(g1.order());
  const IntMatrix k2 = associated_complete_matrix(g2) + IntMatrix::identity(g2.order());
  return kron(distance_matrix(g1, DistanceKind::Max), k2) + kron(k1, distance_matrix(g2, DistanceKind::Max));
}

/// True when every non-adjacent pair of g2 has positive shortest-path sign,
/// i.e. K^{D+-}(g2) is +1 off the edges. Inside g1[g2] such a pair is always
/// at signed distance +2 (through a neighbour in the first coordinate), so
/// the diagonal block 2K - A is only right under this condition. Holds for
/// every all-positive g2; an all-negative g2 needs all non-adjacent pairs at
/// even distance.
inline bool lexicographic_blocks_positive(const SignedGraph& g2) {
  const IntMatrix d = distance_matrix(g2, DistanceKind::Max);
  for (Vertex u = 0; u < g2.order(); ++u)
    for (Vertex v = u + 1; v < g2.order(); ++v)
      if (!g2.has_edge(u, v) && d(u, v) < 0) return false;
  return true;
}

/// D(g1[g2]) = D1 (x) J_n + I_m (x) (2K^{D+-}(g2) - A(g2)).
///
/// Requires g1 connected, compatible and of order >= 2, and g2 connected
/// with all edges of one sign and positive non-adjacent shortest-path signs
/// (see lexicographic_blocks_positive). Throws DomainError otherwise.
inline IntMatrix lexicographic_distance_formula(const SignedGraph& g1, const SignedGraph& g2) {
  detail::require_compatible_factor(g1, "lexicographic distance formula");
  if (g1.order() < 2) throw DomainError("lexicographic distance formula requires Σ₁ to have an edge");
  require_connected(g2, "lexicographic distance formula");
  if (!uniform_sign(g2)) {
    throw DomainError("lexicographic formula requires Σ₂ all-positive or all-negative");
  }
  if (!lexicographic_blocks_positive(g2)) {
    throw DomainError(
        "lexicographic formula requires every non-adjacent pair of Σ₂ to have positive "
        "shortest-path sign (an all-negative Σ₂ has a non-adjacent pair at odd distance)");
  }
  return detail::lexicographic_kronecker_form(g1, g2);
}

/// Spectrum of D(g1[K2]) from the spectrum of D(g1): {2λ + s} together with
/// -s of multiplicity m, where s is the sign of the K2 edge.
inline Spectrum lex_k2_spectrum(const SignedGraph& g1, Sign k2_sign, double tol = kDefaultClusterTolerance) {
  detail::require_compatible_factor(g1, "g[K2] spectrum");
  const double s = to_int(k2_sign);
  std::vector<double> values;
  for (double lambda : jacobi_eigenvalues(distance_matrix(g1, DistanceKind::Max).cast<double>())) {
    values.push_back(2.0 * lambda + s);
  }
  values.insert(values.end(), g1.order(), -s);
  return cluster_eigenvalues(std::move(values), tol);
}

}  // namespace sgd
