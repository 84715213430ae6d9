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

// Seeded random signed graphs for property tests and the tensor search.

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "sgd/core.hpp"
#include "sgd/distance.hpp"

namespace sgd {

using Rng = std::mt19937_64;

enum class SigningMode {
  Uniform,       // independent fair signs
  Balanced,      // a switching of the all-positive signature
  Antibalanced,  // a switching of the all-negative signature
};

/// Erdős–Rényi G(n, p) resampled until connected. Throws after
/// `max_attempts` disconnected draws.
inline SignedGraph random_connected_graph(Rng& rng, std::size_t n, double p,
                                          std::size_t max_attempts = 1000) {
  std::bernoulli_distribution coin(p);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v, Sign::Positive});
    SignedGraph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("could not sample a connected graph");
}

inline SwitchingFunction random_switching(Rng& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  SwitchingFunction zeta(n);
  for (auto& z : zeta) z = coin(rng) ? Sign::Negative : Sign::Positive;
  return zeta;
}

/// Re-signs the edges of g according to `mode`.
inline SignedGraph random_signing(Rng& rng, const SignedGraph& g, SigningMode mode) {
  switch (mode) {
    case SigningMode::Uniform: {
      std::bernoulli_distribution coin(0.5);
      std::vector<Edge> edges(g.edges().begin(), g.edges().end());
      for (auto& e : edges) e.sign = coin(rng) ? Sign::Negative : Sign::Positive;
      return SignedGraph(g.order(), std::move(edges));
    }
    case SigningMode::Balanced:
      return switch_signs(with_uniform_sign(g, Sign::Positive), random_switching(rng, g.order()));
    case SigningMode::Antibalanced:
      return switch_signs(with_uniform_sign(g, Sign::Negative), random_switching(rng, g.order()));
  }
  throw std::logic_error("unknown signing mode");
}

inline SigningMode random_signing_mode(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  return static_cast<SigningMode>(pick(rng));
}

/// Connected signed graph with order in [min_n, max_n], edge probability
/// drawn from [0.25, 0.75] and a random signing mode.
inline SignedGraph random_signed_graph(Rng& rng, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.25, 0.75);
  const std::size_t n = order(rng);
  const double p = density(rng);
  return random_signing(rng, random_connected_graph(rng, n, p), random_signing_mode(rng));
}

/// Rejection-samples random_signed_graph until it is compatible.
inline std::optional<SignedGraph> random_compatible_graph(Rng& rng, std::size_t min_n, std::size_t max_n,
                                                          std::size_t max_attempts = 200) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto g = random_signed_graph(rng, min_n, max_n);
    if (is_compatible(g)) return g;
  }
  return std::nullopt;
}

}  // namespace sgd
