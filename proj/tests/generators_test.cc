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

#include "tcf/generators.h"

#include "gtest/gtest.h"
#include "tcf/io.h"
#include "tcf/oracles.h"

namespace tcf {
namespace {

TEST(FamiliesTest, Sizes) {
  EXPECT_EQ(Complete(7).num_edges(), 21);
  EXPECT_EQ(CompleteMultipartite({2, 2, 2}).num_edges(), 12);
  Multigraph c = Circulant(10, {1, 2});
  EXPECT_EQ(c.num_edges(), 20);
  for (int d : c.Degrees()) EXPECT_EQ(d, 4);
  EXPECT_EQ(Circulant(6, {3}).num_edges(), 3);
  EXPECT_EQ(Petersen().num_edges(), 15);
  EXPECT_EQ(Cycle(5).num_edges(), 5);
  EXPECT_EQ(Path(5).num_edges(), 4);
}

TEST(FamiliesTest, NearRegularDegrees) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    Multigraph g = RandomNearRegular(9, 4, rng);
    for (int d : g.Degrees()) EXPECT_LE(d, 4);
  }
}

TEST(PlantedTest, WitnessIsATwoFactor) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 8;
    Generated gen = PlantedTwoFactor(n, 0.3, 5, rng);
    ASSERT_EQ(static_cast<int>(gen.planted.size()), n);
    Multigraph f = SpanningSubgraph(gen.graph, gen.planted);
    for (int d : f.Degrees()) EXPECT_EQ(d, 2);
    const StructureReport s = StructureChecks(f);
    EXPECT_GE(s.girth.value_or(0), 5);
  }
}

TEST(GenerateTest, DeterministicPerSeed) {
  auto a = Generate("gnp", {"9", "0.5"}, 17);
  auto b = Generate("gnp", {"9", "0.5"}, 17);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(FormatEdgeList(a->graph), FormatEdgeList(b->graph));
}

TEST(GenerateTest, BadParameters) {
  EXPECT_FALSE(Generate("complete", {}, 1).ok());
  EXPECT_FALSE(Generate("complete", {"x"}, 1).ok());
  EXPECT_FALSE(Generate("gnp", {"5", "1.5"}, 1).ok());
  EXPECT_FALSE(Generate("hypercube", {"3"}, 1).ok());
  EXPECT_TRUE(Generate("multipartite", {"1,2,3"}, 1).ok());
}

TEST(RngTest, UniformIntInRange) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const int x = UniformInt(rng, -2, 3);
    EXPECT_GE(x, -2);
    EXPECT_LE(x, 3);
  }
}

}  // namespace
}  // namespace tcf
