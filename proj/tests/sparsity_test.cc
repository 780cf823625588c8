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

#include "tcf/sparsity.h"

#include "gtest/gtest.h"
#include "tcf/generators.h"
#include "tcf/oracles.h"
#include "test_util.h"

namespace tcf {
namespace {

using testing::G;
using testing::Id;

TEST(IsSparseTest, Examples) {
  EXPECT_FALSE(IsSparse(Complete(3), 1));
  EXPECT_TRUE(IsSparse(Complete(4), 2));
  EXPECT_FALSE(IsSparse(G(2, {{0, 1}, {0, 1}}), 1));
}

TEST(IsSparseTest, ViolatingSetIsDense) {
  Multigraph g = G(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  SparsityVerdict v = CheckSparse(g, 1);
  ASSERT_FALSE(v.sparse);
  EXPECT_GT(EdgesWithin(g, v.violating_set),
            static_cast<int>(v.violating_set.size()) - 1);
}

TEST(PebbleGameTest, PebbleInvariant) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % 3;
    Multigraph g = RandomMultigraph(7, 25, rng);
    PebbleGame game(7, m);
    for (const Edge& e : g.edges()) {
      game.TryInsert(e.u, e.v);
      EXPECT_EQ(game.free_pebbles() + game.accepted(), m * 7);
    }
    EXPECT_GE(game.free_pebbles(), m);
  }
}

TEST(OmegaTest, Examples) {
  // A forest with three components.
  Multigraph forest = G(6, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(Omega(forest, 1), 3);
  EXPECT_EQ(Omega(Path(5), 2), 6);
  EXPECT_EQ(Omega(Multigraph(), 1), 0);
  EXPECT_EQ(Omega(Multigraph(), 3), 0);
  EXPECT_EQ(OmegaBySubsets(Path(5), 2), 6);
}

TEST(TcComponentsTest, Examples) {
  EXPECT_EQ(TreeConnectedComponents(Complete(4), 2).omega, 2);
  EXPECT_EQ(TreeConnectedComponents(Cycle(4), 1).omega, 1);
  EXPECT_EQ(TreeConnectedComponents(G(3, {}), 1).omega, 3);
  EXPECT_EQ(TreeConnectedComponents(Path(4), 2).blocks.blocks.size(), 4u);
}

TEST(TreeConnectedTest, Examples) {
  EXPECT_TRUE(IsTreeConnected(Complete(4), 2));
  EXPECT_TRUE(IsTreeConnected(Path(6), 1));
  EXPECT_FALSE(IsTreeConnected(Cycle(5), 2));
  EXPECT_TRUE(IsMinimallyTreeConnected(Path(5), 1));
  EXPECT_TRUE(IsMinimallyTreeConnected(Complete(4), 2));
  Multigraph k4plus = G(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 1}});
  EXPECT_FALSE(IsMinimallyTreeConnected(k4plus, 2));
}

TEST(MaximalSparseExtensionTest, Examples) {
  auto a = MaximalSparseExtension(Complete(4), {}, 1);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(a->size(), 3u);
  EXPECT_TRUE(IsTreeConnected(SpanningSubgraph(Complete(4), *a), 1));

  auto b = MaximalSparseExtension(Complete(4), {}, 2);
  EXPECT_EQ(b->size(), 6u);

  auto c = MaximalSparseExtension(Complete(3), {}, 1, std::vector<int>{1, 1, 1});
  EXPECT_EQ(c->size(), 1u);

  // F must itself be sparse.
  Multigraph tri = Complete(3);
  EXPECT_FALSE(MaximalSparseExtension(tri, tri.AllEdges(), 1).ok());
}

TEST(SparsifyTest, Examples) {
  Multigraph p = Path(4);
  EXPECT_EQ(SparsifyTcComponents(p, 1), p.AllEdges());

  EdgeSet tree = SparsifyTcComponents(Complete(4), 1);
  EXPECT_EQ(tree.size(), 3u);
  EXPECT_TRUE(IsTreeConnected(SpanningSubgraph(Complete(4), tree), 1));

  Multigraph k4plus = G(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 1}});
  EdgeSet basis = SparsifyTcComponents(k4plus, 2);
  EXPECT_EQ(basis.size(), 6u);
  EXPECT_TRUE(IsTreeConnected(SpanningSubgraph(k4plus, basis), 2));
}

TEST(SparsifyTest, KeepsComponentsAndSparsity) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 2;
    Multigraph g = RandomMultigraph(6, 14, rng);
    EdgeSet s = SparsifyTcComponents(g, m);
    Multigraph h = SpanningSubgraph(g, s);
    EXPECT_TRUE(IsSparseBySubsets(h, m));
    EXPECT_EQ(TreeConnectedComponents(h, m).blocks.blocks,
              TreeConnectedComponents(g, m).blocks.blocks);
  }
}

TEST(SpanningTreePackingTest, Examples) {
  auto k4 = SpanningTreePacking(Complete(4), 2);
  ASSERT_TRUE(k4.has_value());
  ASSERT_EQ(k4->size(), 2u);
  for (const EdgeSet& t : *k4) {
    EXPECT_TRUE(IsTreeConnected(SpanningSubgraph(Complete(4), t), 1));
  }
  EXPECT_TRUE((*k4)[0].Minus((*k4)[1]) == (*k4)[0]);

  auto tree = SpanningTreePacking(Path(5), 1);
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ((*tree)[0], Path(5).AllEdges());

  EXPECT_FALSE(SpanningTreePacking(Cycle(5), 2).has_value());
  EXPECT_TRUE(HasTreePackingBySearch(Complete(4), 2));
  EXPECT_FALSE(HasTreePackingBySearch(Cycle(5), 2));
}

// The pebble game against the subset definitions.
TEST(SparsityPropertyTest, PebbleAgreesWithSubsets) {
  Rng rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 3;
    const int n = 2 + trial % 6;
    Multigraph g = RandomMultigraph(n, UniformInt(rng, 0, 3 * n), rng);
    EXPECT_EQ(IsSparse(g, m), IsSparseBySubsets(g, m));
    EXPECT_EQ(Omega(g, m), OmegaBySubsets(g, m));
    EXPECT_EQ(TreeConnectedComponents(g, m).blocks.blocks,
              TcComponentsBySubsets(g, m).blocks);
    EXPECT_EQ(IsTreeConnected(g, m), IsTreeConnectedByPartitions(g, m));
  }
}

// Omega of a sparse graph is m n - |E|.
TEST(SparsityPropertyTest, OmegaOfSparseGraph) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 3;
    Multigraph g = RandomMultigraph(6, 14, rng);
    auto basis = MaximalSparseExtension(g, {}, m, std::nullopt, rng());
    ASSERT_TRUE(basis.ok());
    Multigraph h = SpanningSubgraph(g, *basis);
    EXPECT_EQ(Omega(h, m), m * 6 - static_cast<int>(basis->size()));
    // A basis spans: Omega is unchanged.
    EXPECT_EQ(Omega(h, m), Omega(g, m));
  }
}

TEST(SparsityPropertyTest, OmegaMonotoneUnderEdgeAddition) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 2;
    Multigraph g = RandomMultigraph(6, 12, rng);
    const EdgeSet all = g.AllEdges();
    std::vector<EdgeId> sub;
    for (EdgeId id : all) {
      if (rng() % 2) sub.push_back(id);
    }
    EXPECT_GE(Omega(SpanningSubgraph(g, EdgeSet(sub)), m), Omega(g, m));
  }
}

}  // namespace
}  // namespace tcf
