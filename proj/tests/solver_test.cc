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

#include "tcf/solver.h"

#include "gtest/gtest.h"
#include "tcf/generators.h"
#include "tcf/oracles.h"
#include "tcf/sparsity.h"
#include "test_util.h"

namespace tcf {
namespace {

using testing::G;
using testing::Id;

std::vector<int> Deg(const Multigraph& g, const EdgeSet& h) {
  return SpanningSubgraph(g, h).Degrees();
}

Multigraph TwoTriangles() {
  return G(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

TEST(TotalExcessTest, Examples) {
  Multigraph c4 = Cycle(4);
  EXPECT_EQ(TotalExcess(c4, c4.AllEdges(), {3, 3, 3, 3}), 0);
  Multigraph k3 = Complete(3);
  EXPECT_EQ(TotalExcess(k3, k3.AllEdges(), {1, 1, 1}), 3);
  Multigraph star = G(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(TotalExcess(star, star.AllEdges(), {2, 2, 2, 2}), 1);
}

TEST(SolveExtensionTest, HamiltonianPathInK4) {
  SolveInstance inst{Complete(4), {}, {2, 2, 2, 2}, 1};
  auto r = SolveExtension(inst);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->omega, 1);
  EXPECT_EQ(r->optimal, Optimality::kProved);
  for (int d : Deg(inst.g, r->h)) EXPECT_LE(d, 2);
}

TEST(SolveExtensionTest, DisconnectedHostIsProvedOptimal) {
  SolveInstance inst{TwoTriangles(), {}, std::vector<int>(6, 2), 1};
  auto r = SolveExtension(inst);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->omega, 2);
  EXPECT_EQ(r->optimal, Optimality::kProved);
}

TEST(SolveExtensionTest, FiveCycleInK5) {
  Multigraph k5 = Complete(5);
  EdgeSet c5;
  for (int i = 0; i < 5; ++i) c5.insert(Id(k5, i, (i + 1) % 5));
  // Sparsified F is a Hamiltonian path; the caps allow one chord per vertex.
  auto ext = ExtendFactor(k5, c5, std::vector<int>(5, 1), 1);
  ASSERT_TRUE(ext.ok()) << ext.status();
  EXPECT_EQ(ext->solve.omega, 1);
  EXPECT_TRUE(c5.IsSubsetOf(ext->h));
  for (int d : Deg(k5, ext->h)) EXPECT_TRUE(d == 2 || d == 3);
}

TEST(SolveExtensionTest, RejectsDenseFactor) {
  Multigraph k3 = Complete(3);
  SolveInstance inst{k3, k3.AllEdges(), {0, 0, 0}, 1};
  auto r = SolveExtension(inst);
  EXPECT_EQ(r.status().code(), absl::StatusCode::kInvalidArgument);
}

TEST(SolveExtensionTest, SameSeedSameResult) {
  Rng rng(3);
  Multigraph g = RandomGnp(7, 0.6, rng);
  SolveInstance inst{g, {}, std::vector<int>(7, 1), 1};
  SolverOptions options;
  options.seed = 99;
  auto a = SolveExtension(inst, options);
  auto b = SolveExtension(inst, options);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(ToJson(*a), ToJson(*b));
}

// Raising h pointwise never raises the optimum Omega.
TEST(SolverPropertyTest, MonotoneInH) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + trial % 2;
    Multigraph g = RandomMultigraph(5, 10, rng);
    std::vector<int> h(5), higher(5);
    for (int v = 0; v < 5; ++v) {
      h[v] = UniformInt(rng, 0, 2);
      higher[v] = h[v] + UniformInt(rng, 0, 1);
    }
    auto lo = SolveExtension({g, {}, h, m});
    auto hi = SolveExtension({g, {}, higher, m});
    ASSERT_TRUE(lo.ok() && hi.ok());
    ASSERT_EQ(lo->optimal, Optimality::kProved);
    ASSERT_EQ(hi->optimal, Optimality::kProved);
    EXPECT_LE(hi->omega, lo->omega);
  }
}

// Results are always sparse, inside the caps and contain F.
TEST(SolverPropertyTest, SoundOutput) {
  Rng rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    const int m = 1 + trial % 2;
    Multigraph g = RandomMultigraph(6, 14, rng);
    auto f = MaximalSparseExtension(g, {}, m, std::vector<int>(6, 1), rng());
    std::vector<int> h(6);
    for (int& x : h) x = UniformInt(rng, 0, 2);
    SolveInstance inst{g, *f, h, m};
    auto r = SolveExtension(inst);
    ASSERT_TRUE(r.ok()) << r.status();
    EXPECT_TRUE(IsSparseBySubsets(SpanningSubgraph(g, r->h), m));
    EXPECT_TRUE(f->IsSubsetOf(r->h));
    EXPECT_EQ(TotalExcess(g, r->h, inst.Caps()), 0);
    EXPECT_EQ(r->omega, OmegaBySubsets(SpanningSubgraph(g, r->h), m));
  }
}

TEST(CertificateTest, EmptySetWhenTreeConnected) {
  SolveInstance inst{Complete(4), {}, {2, 2, 2, 2}, 1};
  auto r = SolveExtension(inst);
  auto cert = ExtractCertificate(inst, r->h);
  ASSERT_TRUE(cert.ok());
  EXPECT_TRUE(cert->s.empty());
  EXPECT_TRUE(cert->valid());
}

TEST(CertificateTest, SaturatedCutVertex) {
  // A star with center cap 2 cannot reach all three leaves.
  Multigraph star = G(4, {{0, 1}, {0, 2}, {0, 3}});
  SolveInstance inst{star, {}, {2, 1, 1, 1}, 1};
  auto r = SolveExtension(inst);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->omega, 2);
  auto cert = ExtractCertificate(inst, r->h);
  ASSERT_TRUE(cert.ok());
  EXPECT_TRUE(cert->valid());
  EXPECT_TRUE(cert->s.contains(0));
}

TEST(ConditionTest, EmptySetReducesToOmegaOfG) {
  auto two = CheckCondition34(TwoTriangles(), {}, std::vector<int>(6, 2), 1,
                              CheckMode::kExact);
  ASSERT_TRUE(two.ok());
  EXPECT_FALSE(two->holds);
  ASSERT_TRUE(two->witness.has_value());
  EXPECT_TRUE(two->witness->empty());

  auto k4 = CheckCondition34(Complete(4), {}, {2, 2, 2, 2}, 1, CheckMode::kExact);
  ASSERT_TRUE(k4.ok());
  EXPECT_TRUE(k4->holds);
  EXPECT_EQ(k4->subsets, 16);
}

TEST(ConditionTest, MinTermFormOnK6) {
  XiParams p;
  p.c = Rational(2);
  p.xi.assign(6, Rational(1));
  auto r = CheckCondition36(Complete(6), {}, std::vector<int>(6, 2), 1, p);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->holds);
  EXPECT_EQ(r->subsets, 64);

  // With F empty, xi = 0 violates the component condition at once.
  p.xi.assign(6, Rational(0));
  auto bad = CheckCondition36(Complete(6), {}, std::vector<int>(6, 2), 1, p);
  ASSERT_TRUE(bad.ok());
  EXPECT_FALSE(bad->holds);
}

TEST(ConditionTest, XiValidation) {
  Multigraph k4 = Complete(4);
  XiParams p;
  p.c = Rational(2);
  p.xi.assign(4, Rational(0));
  // F empty: each singleton needs xi >= m.
  EXPECT_EQ(CheckXi(k4, {}, 1, p).code(), absl::StatusCode::kFailedPrecondition);
  p.xi.assign(4, Rational(1));
  EXPECT_TRUE(CheckXi(k4, {}, 1, p).ok());
  p.xi.assign(4, Rational(2));
  EXPECT_EQ(CheckXi(k4, {}, 1, p).code(), absl::StatusCode::kInvalidArgument);
}

TEST(ConditionTest, LargeComponents) {
  Multigraph k5 = Complete(5);
  EdgeSet c5;
  for (int i = 0; i < 5; ++i) c5.insert(Id(k5, i, (i + 1) % 5));
  EXPECT_TRUE(CheckLargeComponents(k5, c5, 1, Rational(5)).ok());
  EXPECT_FALSE(CheckLargeComponents(k5, c5, 1, Rational(6)).ok());
  EXPECT_FALSE(CheckLargeComponents(k5, c5, 1, Rational(2)).ok());
}

TEST(OneVertexFixedTest, FiveCycleInK5) {
  Multigraph k5 = Complete(5);
  EdgeSet c5;
  for (int i = 0; i < 5; ++i) c5.insert(Id(k5, i, (i + 1) % 5));
  auto r = SolveTheorem41(k5, c5, 1, Rational(5), 0);
  ASSERT_TRUE(r.ok()) << r.status();
  const std::vector<int> d = Deg(k5, r->h);
  EXPECT_EQ(d[0], 2);
  for (int x : d) EXPECT_TRUE(x == 2 || x == 3);
  EXPECT_TRUE(c5.IsSubsetOf(r->h));
  EXPECT_TRUE(IsConnected(SpanningSubgraph(k5, r->h)));
}

TEST(OneVertexFixedTest, SpanningTreeFactorIsKept) {
  Multigraph k5 = Complete(5);
  EdgeSet star{Id(k5, 0, 1), Id(k5, 0, 2), Id(k5, 0, 3), Id(k5, 0, 4)};
  auto r = SolveTheorem41(k5, star, 1, Rational(5), 1);
  ASSERT_TRUE(r.ok()) << r.status();
  const std::vector<int> d = Deg(k5, r->h);
  EXPECT_EQ(d[1], 1);
  EXPECT_EQ(d[0], 4);
}

TEST(DoublingTest, SevenCycleInK7) {
  Multigraph k7 = Complete(7);
  EdgeSet c7;
  for (int i = 0; i < 7; ++i) c7.insert(Id(k7, i, (i + 1) % 7));
  auto r = SolveTheorem48(k7, c7, Rational(7));
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_TRUE(c7.IsSubsetOf(r->h));
  for (int x : Deg(k7, r->h)) EXPECT_TRUE(x == 2 || x == 3);
  EXPECT_TRUE(StructureChecks(SpanningSubgraph(k7, r->h)).two_edge_connected);
}

TEST(DoublingTest, TwoFiveCyclesInK10) {
  Multigraph k10 = Complete(10);
  EdgeSet f;
  for (int i = 0; i < 5; ++i) {
    f.insert(Id(k10, i, (i + 1) % 5));
    f.insert(Id(k10, 5 + i, 5 + (i + 1) % 5));
  }
  auto r = SolveTheorem48(k10, f, Rational(5));
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_TRUE(StructureChecks(SpanningSubgraph(k10, r->h)).two_edge_connected);
  for (int x : Deg(k10, r->h)) EXPECT_TRUE(x == 2 || x == 3);
}

TEST(DoublingTest, RejectsShortCycles) {
  Multigraph k6 = Complete(6);
  EdgeSet two_triangles{Id(k6, 0, 1), Id(k6, 1, 2), Id(k6, 0, 2),
                        Id(k6, 3, 4), Id(k6, 4, 5), Id(k6, 3, 5)};
  auto r = SolveTheorem48(k6, two_triangles, Rational(5));
  EXPECT_EQ(r.status().code(), absl::StatusCode::kFailedPrecondition);
}

}  // namespace
}  // namespace tcf
