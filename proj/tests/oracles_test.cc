// Copyright 2026 The Authors.
//
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

#include "tcf/oracles.h"

#include "gtest/gtest.h"
#include "tcf/generators.h"
#include "tcf/sparsity.h"
#include "test_util.h"

namespace tcf {
namespace {

using testing::G;

std::vector<int> DegreesOf(const Multigraph& g, const EdgeSet& h) {
  return SpanningSubgraph(g, h).Degrees();
}

TEST(ToughnessTest, Examples) {
  for (auto order : {EnumerationOrder::kAscending, EnumerationOrder::kDescending}) {
    auto c4 = ComputeToughness(Cycle(4), order);
    ASSERT_TRUE(c4.ok());
    EXPECT_EQ(c4->value, Rational(1));
    EXPECT_EQ(c4->witness.size(), 2u);

    auto pet = ComputeToughness(Petersen(), order);
    ASSERT_TRUE(pet.ok());
    EXPECT_EQ(pet->value, Rational(4, 3));
  }
  auto k6 = ComputeToughness(Complete(6));
  EXPECT_TRUE(k6->infinite);
  EXPECT_TRUE(IsTough(*k6, Rational(1000)));
  EXPECT_FALSE(ComputeToughness(Complete(30)).ok());
}

TEST(ToughnessTest, DisconnectedIsZeroTough) {
  auto t = ComputeToughness(G(4, {{0, 1}, {2, 3}}));
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(t->value, Rational(0));
}

TEST(ToughnessTest, BipartiteUpperBound) {
  // K_{2,4}: removing the small side leaves 4 components, so t = 1/2.
  auto t = ComputeToughness(CompleteMultipartite({2, 4}));
  EXPECT_EQ(t->value, Rational(1, 2));
}

TEST(ComponentBoundTest, FindsViolation) {
  auto check = CheckComponentBound(Path(5), Rational(1, 2), Rational(1));
  ASSERT_TRUE(check.ok());
  EXPECT_FALSE(check->holds);
  auto k5 = CheckComponentBound(Complete(5), Rational(0), Rational(1));
  EXPECT_TRUE(k5->holds);
}

TEST(BruteFactorTest, Examples) {
  FactorQuery q;
  q.spec = DegreeSpec::Uniform(5, {2});
  FactorSearch a = BruteFactor(Complete(5), q);
  ASSERT_TRUE(a.factor.has_value());
  EXPECT_TRUE(StructureChecks(SpanningSubgraph(Complete(5), *a.factor)).connected);

  q.spec = DegreeSpec::Uniform(4, {3});
  q.extra = FactorExtra::kConnected;
  FactorSearch b = BruteFactor(Complete(4), q);
  ASSERT_TRUE(b.factor.has_value());
  EXPECT_EQ(b.factor->size(), 6u);

  q.spec = DegreeSpec::Uniform(10, {2});
  q.extra = FactorExtra::kNone;
  FactorSearch c = BruteFactor(Petersen(), q);
  ASSERT_TRUE(c.factor.has_value());
  EXPECT_EQ(StructureChecks(SpanningSubgraph(Petersen(), *c.factor)).girth, 5);
}

TEST(BruteFactorTest, ProvesNonExistence) {
  FactorQuery q;
  q.spec = DegreeSpec::Uniform(5, {1});  // odd order
  FactorSearch s = BruteFactor(Complete(5), q);
  EXPECT_FALSE(s.factor.has_value());
  EXPECT_TRUE(s.exhausted);

  // The Petersen graph is not Hamiltonian.
  q.spec = DegreeSpec::Uniform(10, {2});
  q.extra = FactorExtra::kConnected;
  FactorSearch p = BruteFactor(Petersen(), q);
  EXPECT_FALSE(p.factor.has_value());
  EXPECT_TRUE(p.exhausted);
}

TEST(BruteFactorTest, ExtrasAndComplement) {
  FactorQuery q;
  q.spec = DegreeSpec::Uniform(6, {2, 3});
  q.extra = FactorExtra::kTwoConnected;
  q.complement_m = 1;
  FactorSearch s = BruteFactor(Complete(6), q);
  ASSERT_TRUE(s.factor.has_value());
  Multigraph k6 = Complete(6);
  EXPECT_TRUE(StructureChecks(SpanningSubgraph(k6, *s.factor)).two_connected);
  EXPECT_TRUE(IsConnected(SpanningSubgraph(k6, k6.AllEdges().Minus(*s.factor))));
  for (int d : DegreesOf(k6, *s.factor)) EXPECT_TRUE(d == 2 || d == 3);
}

TEST(BipartiteIndexTest, Examples) {
  for (auto order : {EnumerationOrder::kAscending, EnumerationOrder::kDescending}) {
    EXPECT_EQ(ComputeBipartiteIndex(Cycle(5), order)->value, 1);
    EXPECT_EQ(ComputeBipartiteIndex(Complete(4), order)->value, 2);
    EXPECT_EQ(ComputeBipartiteIndex(CompleteMultipartite({3, 3}), order)->value, 0);
  }
  EXPECT_TRUE(IsBipartite(Cycle(6)));
  EXPECT_FALSE(IsBipartite(Cycle(7)));
}

TEST(StructureTest, Examples) {
  for (auto order : {EnumerationOrder::kAscending, EnumerationOrder::kDescending}) {
    StructureReport p = StructureChecks(Petersen(), order);
    EXPECT_EQ(p.girth, 5);
    EXPECT_TRUE(p.two_connected);
  }
  StructureReport c4 = StructureChecks(Cycle(4));
  EXPECT_EQ(c4.girth, 4);
  EXPECT_TRUE(c4.two_edge_connected);
  EXPECT_TRUE(c4.components_eulerian);

  StructureReport tree = StructureChecks(Path(5));
  EXPECT_FALSE(tree.girth.has_value());
  EXPECT_FALSE(tree.two_edge_connected);

  // Two triangles sharing a vertex: 2-edge-connected, not 2-connected.
  StructureReport bow = StructureChecks(G(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}));
  EXPECT_TRUE(bow.two_edge_connected);
  EXPECT_FALSE(bow.two_connected);
  // Parallel edges give girth 2.
  EXPECT_EQ(StructureChecks(G(2, {{0, 1}, {0, 1}})).girth, 2);
}

TEST(BruteTcFactorTest, Examples) {
  EXPECT_TRUE(*BruteTcFactorExists(Complete(4), {}, {2, 2, 2, 2}, 1));
  EXPECT_FALSE(*BruteTcFactorExists(Cycle(5), {}, {2, 2, 2, 2, 2}, 2));
  EXPECT_FALSE(*BruteTcFactorExists(G(4, {{0, 1}, {2, 3}}), {}, {3, 3, 3, 3}, 1));
  // A star needs its center to have degree 3.
  Multigraph star = G(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_FALSE(*BruteTcFactorExists(star, {}, {2, 1, 1, 1}, 1));
  EXPECT_TRUE(*BruteTcFactorExists(star, {}, {3, 1, 1, 1}, 1));
}

TEST(MaxCappedSparseSupersetTest, MatchesHandCount) {
  // K_4 with caps 2: a Hamiltonian path has 3 edges.
  EXPECT_EQ(*MaxCappedSparseSuperset(Complete(4), {}, {2, 2, 2, 2}, 1), 3);
  // Two triangles: at most a spanning forest of 4 edges.
  Multigraph two = G(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(*MaxCappedSparseSuperset(two, {}, std::vector<int>(6, 2), 1), 4);
}

TEST(MatchingConstructionTest, MatchingRaisesBipartiteIndex) {
  // K_6 with F the union of two edge-disjoint spanning trees.
  Multigraph k6 = Complete(6);
  auto trees = SpanningTreePacking(k6, 2);
  ASSERT_TRUE(trees.has_value());
  const EdgeSet f = (*trees)[0].Union((*trees)[1]);
  auto r = Lemma52Construction(k6, f, 2);
  ASSERT_TRUE(r.ok()) << r.status();
  ASSERT_EQ(r->outcome, Lemma52Result::Outcome::kFound) << r->detail;
  EXPECT_EQ(r->matching.size(), 1u);
  auto bi = ComputeBipartiteIndex(SpanningSubgraph(k6, f.Union(r->matching)));
  EXPECT_GE(bi->value, 1);

  auto trivial = Lemma52Construction(k6, {}, 1);
  ASSERT_TRUE(trivial.ok());
  EXPECT_TRUE(trivial->matching.empty());
}

}  // namespace
}  // namespace tcf
