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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "support.hpp"

namespace {

using namespace testing_support;

const PetersenClassTable& table() {
  static const PetersenClassTable t = enumerate_petersen_signings();
  return t;
}

std::size_t girth(const SignedGraph& g) {
  std::size_t best = kUnreachable;
  for (const auto& e : g.edges()) {
    // Shortest cycle through e: shortest u-v path avoiding e, plus one.
    std::vector<Edge> rest;
    for (const auto& f : g.edges())
      if (!(f.u == e.u && f.v == e.v)) rest.push_back(f);
    const auto d = bfs_distances(SignedGraph(g.order(), rest), e.u);
    if (d[e.v] != kUnreachable) best = std::min(best, d[e.v] + 1);
  }
  return best;
}

TEST(Generators, Petersen) {
  const auto g = make_petersen();
  EXPECT_EQ(g.order(), 10u);
  EXPECT_EQ(g.size(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3u);
  EXPECT_EQ(girth(g), 5u);
  const auto d = oracle::floyd_warshall(g);
  long diameter = 0;
  for (const auto& row : d)
    for (long x : row) diameter = std::max(diameter, x);
  EXPECT_EQ(diameter, 2);
  EXPECT_TRUE(g.has_edge(0, 5));
  EXPECT_TRUE(g.has_edge(5, 7));
}

TEST(Generators, CycleAndComplete) {
  EXPECT_EQ(make_cycle(4, parse_sign_pattern("-+++")), graph("4 4\n0 1 -\n1 2 +\n2 3 +\n0 3 +"));
  const auto k3 = make_complete(3, N);
  EXPECT_EQ(k3.size(), 3u);
  EXPECT_FALSE(is_balanced(k3));
}

TEST(Generators, BadPatterns) {
  EXPECT_THROW(make_cycle(4, parse_sign_pattern("-+")), std::invalid_argument);
  EXPECT_THROW(parse_sign_pattern("+x"), std::invalid_argument);
  EXPECT_THROW(make_cycle(2, {P}), std::invalid_argument);
  EXPECT_EQ(make_path(1, {}).size(), 0u);
}

TEST(Petersen, EverySigningCompatible) {
  for (std::uint32_t mask = 0; mask < kPetersenSignings; mask += 7) {
    EXPECT_TRUE(is_compatible(petersen_signing(mask)));
  }
}

TEST(Petersen, SixClassesSummingToAllSignings) {
  const auto& t = table();
  ASSERT_EQ(t.classes.size(), 6u);
  EXPECT_EQ(t.signings_processed, 32768u);
  std::size_t total = 0;
  std::set<IntPolynomial> distinct;
  for (const auto& c : t.classes) {
    total += c.class_size;
    distinct.insert(c.char_poly);
  }
  EXPECT_EQ(total, 32768u);
  EXPECT_EQ(distinct.size(), 6u);
}

TEST(Petersen, LabelsAndAnchors) {
  const auto& t = table();
  const std::vector<std::string> labels{"+P", "P1", "P2,2", "P2,3", "P3,2", "P3,3"};
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(t.classes[k].label, labels[k]);
  EXPECT_EQ(t.classes[0].char_poly,
            IntPolynomial::from_descending({1, 0, -135, -1080, -3645, -5832, -3645, 0, 0, 0, 0}));
  EXPECT_EQ(t.classes[5].char_poly,
            IntPolynomial::from_descending(
                {1, 0, -135, -120, 6435, 6696, -145725, -126000, 1620000, 800000, -7200000}));
  EXPECT_EQ(char_poly(distance_matrix(make_petersen(N), DistanceKind::Max)), t.classes[5].char_poly);
  EXPECT_EQ(t.classes[0].representative_mask, 0u);
  EXPECT_EQ(t.classes[1].representative.negative_edge_count(), 1u);
}

TEST(Petersen, RepresentativesHaveMinimumNegativeEdges) {
  std::vector<std::size_t> fewest(6, 99);
  const auto& t = table();
  for (std::uint32_t mask = 0; mask < kPetersenSignings; ++mask) {
    const auto p = char_poly(distance_matrix(petersen_signing(mask), DistanceKind::Max));
    for (std::size_t k = 0; k < 6; ++k)
      if (t.classes[k].char_poly == p)
        fewest[k] = std::min<std::size_t>(fewest[k], std::popcount(mask));
  }
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(t.classes[k].representative.negative_edge_count(), fewest[k]);
}

TEST(Petersen, ClassesClosedUnderSwitching) {
  Rng rng(51);
  for (const auto& c : table().classes) {
    for (int i = 0; i < 20; ++i) {
      const auto s = switch_signs(c.representative, random_switching(rng, 10));
      EXPECT_EQ(char_poly(distance_matrix(s, DistanceKind::Max)), c.char_poly);
    }
  }
}

TEST(Petersen, OnlyAllPositiveAndAllNegativeIntegral) {
  for (const auto& c : table().classes) {
    const auto s = eig_symmetric(distance_matrix(c.representative, DistanceKind::Max));
    EXPECT_EQ(s.is_integral(1e-8), c.label == "+P" || c.label == "P3,3") << c.label << ' ' << s.to_string();
  }
}

TEST(Petersen, ClosedFormsForUniformSignings) {
  const auto two_j_minus_two_i = std::int64_t{2} * IntMatrix::ones(10, 10) - std::int64_t{2} * IntMatrix::identity(10);
  const auto pos = make_petersen(P);
  const auto neg = make_petersen(N);
  EXPECT_EQ(distance_matrix(pos, DistanceKind::Max), two_j_minus_two_i - adjacency_matrix(pos));
  EXPECT_EQ(distance_matrix(neg, DistanceKind::Max), two_j_minus_two_i + std::int64_t{3} * adjacency_matrix(neg));
}

TEST(Petersen, ResultIndependentOfWorkerCount) {
  const auto one = enumerate_petersen_signings(1);
  const auto three = enumerate_petersen_signings(3);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_EQ(one.classes[k].representative_mask, three.classes[k].representative_mask);
    EXPECT_EQ(one.classes[k].class_size, three.classes[k].class_size);
  }
}

}  // namespace
