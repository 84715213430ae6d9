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

// Walks through the main entry points on small named graphs.

#include <iostream>

#include "sgd/sgd.hpp"

int main() {
  using namespace sgd;

  // C4 with a single negative edge: the two routes between antipodes disagree.
  const SignedGraph c4 = make_cycle(4, parse_sign_pattern("-+++"));
  std::cout << "C4 compatible: " << std::boolalpha << is_compatible(c4) << '\n';
  if (const auto w = least_incompatible_witness(c4)) {
    std::cout << "  witness pair (" << w->u << ',' << w->v << ") at distance " << w->distance()
              << ", negative cycle of length " << w->cycle.size() << '\n';
  }

  // The all-positive Petersen graph is geodetic, hence compatible.
  const SignedGraph petersen = make_petersen(Sign::Positive);
  const IntMatrix d = distance_matrix(petersen, DistanceKind::Max);
  std::cout << "f(D(+P)) = " << char_poly(d).to_string() << '\n';
  std::cout << "spectrum  " << eig_symmetric(d).to_string() << '\n';

  // Cartesian product distance matrix: Kronecker formula versus BFS.
  const SignedGraph k2neg = make_complete(2, Sign::Negative);
  const SignedGraph k2pos = make_complete(2, Sign::Positive);
  const bool agree = cartesian_distance_formula(k2neg, k2pos) ==
                     distance_matrix(cartesian(k2neg, k2pos), DistanceKind::Max);
  std::cout << "K2- x K2+ formula matches BFS: " << agree << '\n';
  return 0;
}
