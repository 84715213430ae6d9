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

#include <string>
#include <vector>

#include "sgd/sgd.hpp"

namespace testing_support {

using namespace sgd;

inline constexpr Sign P = Sign::Positive;
inline constexpr Sign N = Sign::Negative;

inline SignedGraph graph(std::string_view text) { return parse_edge_list(text); }

inline SignedGraph k2(Sign s) { return make_path(2, {s}); }
inline SignedGraph c4_oneneg() { return make_cycle(4, parse_sign_pattern("-+++")); }

/// Every signing of the underlying graph of g, in mask order.
inline std::vector<SignedGraph> all_signings(const SignedGraph& g) {
  std::vector<SignedGraph> out;
  const std::size_t m = g.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (std::size_t e = 0; e < m; ++e) edges[e].sign = (mask >> e & 1) ? N : P;
    out.emplace_back(g.order(), std::move(edges));
  }
  return out;
}

/// Random connected signed graph whose order lies in [lo, hi].
inline SignedGraph random_graph(Rng& rng, std::size_t lo, std::size_t hi) {
  return random_signed_graph(rng, lo, hi);
}

inline SignedGraph random_compatible(Rng& rng, std::size_t lo, std::size_t hi) {
  while (true) {
    if (auto g = random_compatible_graph(rng, lo, hi)) return *g;
  }
}

inline SignedGraph random_incompatible(Rng& rng, std::size_t lo, std::size_t hi) {
  while (true) {
    auto g = random_signing(rng, random_connected_graph(rng, std::uniform_int_distribution<std::size_t>(lo, hi)(rng), 0.4),
                            SigningMode::Uniform);
    if (!is_compatible(g)) return g;
  }
}

}  // namespace testing_support
