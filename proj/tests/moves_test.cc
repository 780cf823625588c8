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

#include "tcf/moves.h"

#include "gtest/gtest.h"
#include "tcf/generators.h"
#include "tcf/oracles.h"
#include "tcf/sparsity.h"
#include "test_util.h"

namespace tcf {
namespace {

using testing::G;
using testing::Id;

TEST(AddMoveTest, Examples) {
  Multigraph p4 = Path(4);  // 0-1-2-3
  const EdgeSet f{Id(p4, 0, 1), Id(p4, 2, 3)};
  EXPECT_EQ(Omega(SpanningSubgraph(p4, f), 1), 2);
  auto out = AddMove(p4, f, Id(p4, 1, 2), 1);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(Omega(SpanningSubgraph(p4, *out), 1), 1);

  Multigraph k3 = Complete(3);
  auto single = AddMove(k3, {}, 0, 1);
  ASSERT_TRUE(single.ok());
  EXPECT_EQ(single->size(), 1u);
}

TEST(AddMoveTest, MergesComponents) {
  // A triangle block with a spanning tree plus an isolated edge block.
  Multigraph g = G(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {2, 3}});
  const EdgeSet f{0, 1, 3};
  auto out = AddMove(g, f, 4, 1);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(TreeConnectedComponents(SpanningSubgraph(g, *out), 1).omega, 1);
}

TEST(AddMoveTest, RejectsEdgeInsideComponent) {
  Multigraph k3 = Complete(3);
  const EdgeSet path{Id(k3, 0, 1), Id(k3, 1, 2)};
  EXPECT_FALSE(AddMove(k3, path, Id(k3, 0, 2), 1).ok());
}

TEST(MinimalTcSubgraphTest, Examples) {
  Multigraph p5 = Path(5);
  auto q = MinimalTcSubgraph(p5, p5.AllEdges(), 1, 3, 1);
  ASSERT_TRUE(q.ok());
  EXPECT_EQ(q->vertices, (VertexSet{1, 2, 3}));
  EXPECT_EQ(q->edges, (EdgeSet{Id(p5, 1, 2), Id(p5, 2, 3)}));

  Multigraph k4 = Complete(4);
  auto whole = MinimalTcSubgraph(k4, k4.AllEdges(), 0, 1, 2);
  ASSERT_TRUE(whole.ok());
  EXPECT_EQ(whole->vertices.size(), 4u);
  EXPECT_EQ(whole->edges.size(), 6u);

  auto point = MinimalTcSubgraph(p5, p5.AllEdges(), 2, 2, 1);
  ASSERT_TRUE(point.ok());
  EXPECT_EQ(point->vertices, (VertexSet{2}));
  EXPECT_TRUE(point->edges.empty());
}

TEST(ExchangeMoveTest, Examples) {
  Multigraph tri = Complete(3);
  const EdgeSet path{Id(tri, 0, 1), Id(tri, 1, 2)};
  auto out = ExchangeMove(tri, path, Id(tri, 0, 2), Id(tri, 0, 1), 1);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(*out, (EdgeSet{Id(tri, 1, 2), Id(tri, 0, 2)}));

  // K_4 with a parallel copy of 01 in the host.
  Multigraph host = G(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 1}});
  const EdgeSet k4{0, 1, 2, 3, 4, 5};
  auto twin = ExchangeMove(host, k4, 6, 0, 2);
  ASSERT_TRUE(twin.ok());
  EXPECT_EQ(*twin, (EdgeSet{1, 2, 3, 4, 5, 6}));

  Multigraph kk = Complete(4);
  const EdgeSet star{Id(kk, 0, 1), Id(kk, 0, 2), Id(kk, 0, 3)};
  auto rotated = ExchangeMove(kk, star, Id(kk, 1, 2), Id(kk, 0, 1), 1);
  ASSERT_TRUE(rotated.ok());
  EXPECT_TRUE(IsTreeConnected(SpanningSubgraph(kk, *rotated), 1));
}

TEST(ExchangeMoveTest, RejectsEdgeOutsideQ) {
  Multigraph p = G(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  const EdgeSet tree{0, 1, 2};
  // Q for xy = 02 is the path 0-1-2; the edge 23 is outside it.
  EXPECT_FALSE(ExchangeMove(p, tree, 3, 2, 1).ok());
}

TEST(RegionSwapMoveTest, Examples) {
  Multigraph k4 = Complete(4);
  const EdgeSet a{Id(k4, 0, 1), Id(k4, 1, 2), Id(k4, 2, 3)};
  const EdgeSet b{Id(k4, 0, 2), Id(k4, 0, 3), Id(k4, 1, 3)};
  EXPECT_EQ(*RegionSwapMove(k4, a, a, {0, 1, 2, 3}, 1), a);
  EXPECT_EQ(*RegionSwapMove(k4, a, b, {2}, 1), a);
  EXPECT_EQ(*RegionSwapMove(k4, a, b, {0, 1, 2, 3}, 1), b);
}

TEST(RegionSwapMoveTest, RejectsNonTreeConnectedRegion) {
  Multigraph k4 = Complete(4);
  const EdgeSet a{Id(k4, 0, 1), Id(k4, 2, 3)};
  EXPECT_FALSE(RegionSwapMove(k4, a, a, {0, 1, 2, 3}, 1).ok());
}

// Every accepted move keeps F sparse, by the subset oracle.
TEST(MovePropertyTest, RandomMovesStaySparse) {
  Rng rng(17);
  int applied = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 1 + trial % 2;
    Multigraph g = RandomMultigraph(6, 16, rng);
    auto f = MaximalSparseExtension(g, {}, m, std::nullopt, rng());
    ASSERT_TRUE(f.ok());
    std::vector<EdgeId> out;
    for (const Edge& e : g.edges()) {
      if (!f->contains(e.id)) out.push_back(e.id);
    }
    if (out.empty()) continue;
    const EdgeId xy = out[rng() % out.size()];
    const Edge& e = g.edge(xy);
    auto q = MinimalTcSubgraph(g, *f, e.u, e.v, m);
    ASSERT_TRUE(q.ok());
    if (q->edges.empty()) continue;
    const EdgeId gone = q->edges.members()[rng() % q->edges.size()];
    auto next = ExchangeMove(g, *f, xy, gone, m);
    ASSERT_TRUE(next.ok()) << next.status();
    EXPECT_TRUE(IsSparseBySubsets(SpanningSubgraph(g, *next), m));
    ++applied;
  }
  EXPECT_GT(applied, 100);
}

TEST(MoveTraceTest, RecordsKindAndEdges) {
  Multigraph p4 = Path(4);
  Move move;
  auto out = AddMove(p4, {Id(p4, 0, 1)}, Id(p4, 2, 3), 1, {}, &move);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(move.kind, MoveKind::kAdd);
  EXPECT_EQ(move.added, std::vector<EdgeId>{Id(p4, 2, 3)});
  EXPECT_EQ(ToJson(move)["kind"], "add");
}

}  // namespace
}  // namespace tcf
