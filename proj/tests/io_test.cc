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

#include "tcf/io.h"

#include "gtest/gtest.h"
#include "tcf/generators.h"
#include "tcf/rational.h"

namespace tcf {
namespace {

TEST(EdgeListTest, RoundTrip) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Multigraph g = RandomMultigraph(7, 15, rng);
    const std::string text = FormatEdgeList(g);
    auto back = ParseEdgeList(text);
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(FormatEdgeList(*back), text);
  }
}

TEST(EdgeListTest, CommentsAndBlankLines) {
  auto g = ParseEdgeList("# triangle\n3 3\n\n0 1\n1 2\n# chord\n0 2\n");
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(g->num_edges(), 3);
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  auto bad = ParseEdgeList("3 2\n0 1\n1 x\n");
  ASSERT_FALSE(bad.ok());
  EXPECT_NE(std::string(bad.status().message()).find("line 3"), std::string::npos)
      << bad.status();
  EXPECT_FALSE(ParseEdgeList("3 2\n0 1\n").ok());      // too few edges
  EXPECT_FALSE(ParseEdgeList("2 1\n0 0\n").ok());      // loop
  EXPECT_FALSE(ParseEdgeList("2 1\n0 5\n").ok());      // out of range
}

TEST(Graph6Test, KnownEncodings) {
  auto k4 = ParseGraph6("C~");
  ASSERT_TRUE(k4.ok()) << k4.status();
  EXPECT_EQ(k4->num_vertices(), 4);
  EXPECT_EQ(k4->num_edges(), 6);
  EXPECT_EQ(*FormatGraph6(Complete(4)), "C~");
  auto pet = ParseGraph6(">>graph6<<" + *FormatGraph6(Petersen()));
  ASSERT_TRUE(pet.ok());
  EXPECT_EQ(pet->num_edges(), 15);
}

TEST(Graph6Test, RejectsMultigraphs) {
  auto g = Multigraph::Build(2, {{0, 1}, {0, 1}});
  EXPECT_FALSE(FormatGraph6(*g).ok());
}

TEST(Graph6Test, RoundTripRandom) {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    Multigraph g = RandomGnp(1 + i % 12, 0.4, rng);
    auto text = FormatGraph6(g);
    ASSERT_TRUE(text.ok());
    auto back = ParseGraph6(*text);
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(*FormatGraph6(*back), *text);
  }
}

TEST(JsonTest, MultigraphRoundTrip) {
  Multigraph g = Petersen();
  auto back = MultigraphFromJson(ToJson(g));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(ToJson(*back), ToJson(g));
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(ToString(*ParseRational("8/6")), "4/3");
  EXPECT_EQ(ToString(*ParseRational("3")), "3");
  EXPECT_FALSE(ParseRational("1/0").ok());
  EXPECT_FALSE(ParseRational("x").ok());
  EXPECT_EQ(Floor(Rational(-1, 2)), -1);
}

}  // namespace
}  // namespace tcf
