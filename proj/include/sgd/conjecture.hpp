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

// Randomized search for compatible factor pairs whose connected tensor
// product is incompatible.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sgd/distance.hpp"
#include "sgd/parallel.hpp"
#include "sgd/products.hpp"
#include "sgd/random.hpp"

namespace sgd {

struct ConjectureSearchOptions {
  std::size_t trials = 1000;
  std::size_t min_n = 2;
  std::size_t max_n = 7;
  std::uint64_t seed = 1;
  /// Rejection budget for drawing one admissible factor pair.
  std::size_t attempts_per_trial = 200;
};

struct ConjectureCandidate {
  std::size_t trial = 0;
  SignedGraph g1;
  SignedGraph g2;
  /// Incompatible pair in tensor(g1, g2).
  IncompatibilityWitness witness;
  /// Exhaustive path enumeration on the witness pair agreed.
  bool oracle_confirmed = false;
};

struct ConjectureSearchResult {
  std::size_t trials = 0;
  std::size_t pairs_tested = 0;  // trials that found an admissible pair
  std::vector<ConjectureCandidate> candidates;
};

namespace detail {

struct TrialOutcome {
  bool tested = false;
  std::optional<ConjectureCandidate> candidate;
};

inline TrialOutcome run_conjecture_trial(const ConjectureSearchOptions& opt, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  Rng rng(seq);
  for (std::size_t attempt = 0; attempt < opt.attempts_per_trial; ++attempt) {
    auto g1 = random_signed_graph(rng, opt.min_n, opt.max_n);
    auto g2 = random_signed_graph(rng, opt.min_n, opt.max_n);
    if (!tensor_is_connected(g1, g2)) continue;
    if (!is_compatible(g1) || !is_compatible(g2)) continue;

    TrialOutcome outcome{true, std::nullopt};
    const SignedGraph product = tensor(g1, g2);
    if (!is_compatible(product)) {
      auto witness = *least_incompatible_witness(product);
      const auto check = brute_force_summary(product, witness.u, witness.v, product.order());
      const bool confirmed = !check.compatible() && check.d == witness.distance();
      outcome.candidate = ConjectureCandidate{trial, std::move(g1), std::move(g2), std::move(witness), confirmed};
    }
    return outcome;
  }
  return {};
}

}  // namespace detail

/// Samples random connected compatible pairs with at least one
/// non-bipartite factor and collects every pair whose tensor product is
/// incompatible. Each trial owns an RNG seeded from (seed, trial), so the
/// result is independent of the worker count; candidates are in trial order.
inline ConjectureSearchResult conjecture_search(const ConjectureSearchOptions& opt,
                                                std::size_t workers = worker_count()) {
  std::vector<detail::TrialOutcome> outcomes(opt.trials);
  parallel_chunks(
      opt.trials,
      [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t t = begin; t < end; ++t) outcomes[t] = detail::run_conjecture_trial(opt, t);
      },
      workers);

  ConjectureSearchResult result;
  result.trials = opt.trials;
  for (auto& o : outcomes) {
    if (o.tested) ++result.pairs_tested;
    if (o.candidate) result.candidates.push_back(std::move(*o.candidate));
  }
  return result;
}

}  // namespace sgd
