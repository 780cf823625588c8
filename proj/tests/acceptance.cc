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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Counts, seeds and time limits are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "tcf/generators.h"
#include "tcf/io.h"
#include "tcf/moves.h"
#include "tcf/oracles.h"
#include "tcf/solver.h"
#include "tcf/sparsity.h"
#include "tcf/verifier.h"

namespace tcf {
namespace {

// Time limits in seconds.
constexpr double kSparsityLimit = 120;
constexpr double kLemmaLimit = 60;
constexpr double kSuiteLimit = 30 * 60;
constexpr double kConstructionLimit = 10;

constexpr int kRandomSparsityGraphs = 1000;
constexpr int kRandomPackingGraphs = 3000;
constexpr int kMovesPerKind = 10'000;
constexpr int kLemmaInstances = 1000;
constexpr int kSolverInstances = 500;
constexpr int kCertificateInstances = 200;
constexpr int kSuiteMinimum = 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Show(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", seconds);
  return buf;
}

// All labeled simple graphs on n vertices, by edge mask.
Multigraph FromMask(int n, uint32_t mask) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return *Multigraph::Build(n, edges);
}

EdgeSet CycleIn(const Multigraph& g, int n) {
  EdgeSet out;
  for (int i = 0; i < n; ++i) {
    const VertexId u = i, v = (i + 1) % n;
    for (const Edge& e : g.edges()) {
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
        out.insert(e.id);
        break;
      }
    }
  }
  return out;
}

EdgeSet RandomSubsetOf(const EdgeSet& s, Rng& rng) {
  std::vector<EdgeId> out;
  for (EdgeId e : s) {
    if (rng() % 2) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

VertexSet RandomVertexSet(int n, Rng& rng) {
  std::vector<VertexId> out;
  for (int v = 0; v < n; ++v) {
    if (rng() % 2) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

EdgeSet RandomSparse(const Multigraph& g, int m, Rng& rng) {
  return RandomSubsetOf(*MaximalSparseExtension(g, {}, m, std::nullopt, rng()), rng);
}

Outcome SparsityEquivalence() {
  const auto start = Clock::now();
  int checked = 0, disagree = 0;
  for (int n = 1; n <= 6; ++n) {
    const uint32_t masks = 1u << (n * (n - 1) / 2);
    for (uint32_t mask = 0; mask < masks; ++mask) {
      const Multigraph g = FromMask(n, mask);
      for (int m = 1; m <= 3; ++m) {
        disagree += IsSparse(g, m) != IsSparseBySubsets(g, m);
        ++checked;
      }
    }
  }
  Rng rng(101);
  for (int i = 0; i < kRandomSparsityGraphs; ++i) {
    const int n = UniformInt(rng, 2, 9);
    const int m = 1 + i % 3;
    const Multigraph g = RandomMultigraph(n, UniformInt(rng, 0, 3 * n), rng);
    disagree += IsSparse(g, m) != IsSparseBySubsets(g, m);
    ++checked;
  }
  const double t = Seconds(start);
  return {disagree == 0 && t < kSparsityLimit,
          absl::StrCat(checked, " checks, ", disagree, " disagreements, ",
                       Show(t))};
}

Outcome PackingDuality() {
  int checked = 0, disagree = 0;
  auto check = [&](const Multigraph& g) {
    for (int m = 1; m <= 2; ++m) {
      const bool tc = Omega(g, m) == m;
      disagree += tc != SpanningTreePacking(g, m).has_value();
      ++checked;
    }
  };
  for (int n = 1; n <= 6; ++n) {
    const uint32_t masks = 1u << (n * (n - 1) / 2);
    for (uint32_t mask = 0; mask < masks; ++mask) check(FromMask(n, mask));
  }
  Rng rng(202);
  for (int i = 0; i < kRandomPackingGraphs; ++i) {
    check(RandomMultigraph(7, UniformInt(rng, 6, 21), rng));
  }
  for (const auto& entry : std::filesystem::directory_iterator(TCF_CORPUS_DIR)) {
    if (entry.path().extension() == ".json") continue;
    auto g = ReadGraphFile(entry.path().string());
    if (g.ok() && g->num_vertices() <= 7) check(*g);
  }
  return {disagree == 0,
          absl::StrCat(checked, " checks, ", disagree, " disagreements")};
}

Outcome ExchangeSafety() {
  Rng rng(303);
  int applied[3] = {0, 0, 0};
  int violations = 0;
  int64_t attempts = 0;
  while ((applied[0] < kMovesPerKind || applied[1] < kMovesPerKind ||
          applied[2] < kMovesPerKind) &&
         attempts < 50LL * kMovesPerKind) {
    ++attempts;
    const int n = UniformInt(rng, 3, 7);
    const int m = 1 + static_cast<int>(rng() % 2);
    const Multigraph g = RandomMultigraph(n, UniformInt(rng, n, 4 * n), rng);
    const EdgeSet f = RandomSparse(g, m, rng);
    auto record = [&](int kind, const absl::StatusOr<EdgeSet>& out) {
      if (!out.ok() || applied[kind] >= kMovesPerKind) return;
      ++applied[kind];
      violations += !IsSparseBySubsets(SpanningSubgraph(g, *out), m);
    };
    // Add: an edge joining two m-tree-connected components.
    const EdgeId e = static_cast<EdgeId>(rng() % g.num_edges());
    if (!f.contains(e)) record(0, AddMove(g, f, e, m));
    // Exchange: xy outside F, removed edge from the minimal subgraph Q.
    const EdgeSet full = *MaximalSparseExtension(g, f, m, std::nullopt, rng());
    if (!f.contains(e)) {
      const Edge& xy = g.edge(e);
      auto q = MinimalTcSubgraph(g, full, xy.u, xy.v, m);
      if (q.ok() && !q->edges.empty() && !full.contains(e)) {
        const EdgeId gone = q->edges.members()[rng() % q->edges.size()];
        record(1, ExchangeMove(g, full, e, gone, m));
      }
    }
    // Region swap: X an m-tree-connected component of F.
    const TcPartition parts = TreeConnectedComponents(SpanningSubgraph(g, full), m);
    const auto& blocks = parts.blocks.blocks;
    const VertexSet x(blocks[rng() % blocks.size()]);
    const EdgeSet f0 = *MaximalSparseExtension(g, {}, m, std::nullopt, rng());
    record(2, RegionSwapMove(g, full, f0, x, m));
  }
  const bool enough = applied[0] >= kMovesPerKind && applied[1] >= kMovesPerKind &&
                      applied[2] >= kMovesPerKind;
  return {enough && violations == 0,
          absl::StrCat("add ", applied[0], ", exchange ", applied[1],
                       ", region swap ", applied[2], "; ", violations,
                       " violations")};
}

Outcome LemmaIdentities() {
  const auto start = Clock::now();
  Rng rng(404);
  int fail[3] = {0, 0, 0};
  static const Rational kC[] = {Rational(3, 2), Rational(2), Rational(3),
                                Rational(5)};
  for (int i = 0; i < kLemmaInstances; ++i) {
    const int n = UniformInt(rng, 2, 8);
    const int m = 1 + i % 3;
    const Multigraph g = RandomMultigraph(n, UniformInt(rng, n, 4 * n), rng);
    const EdgeSet h = *MaximalSparseExtension(g, {}, m, std::nullopt, rng());
    const TheoremReport r33 = VerifyLemma33(g, h, RandomSubsetOf(h, rng),
                                            RandomVertexSet(n, rng), m);
    fail[2] += r33.conclusion != ConclusionStatus::kPass;

    const EdgeSet f = RandomSparse(g, m, rng);
    const VertexSet s = RandomVertexSet(n, rng);
    fail[0] += VerifyLemma31(g, f, s, m).conclusion != ConclusionStatus::kPass;

    XiParams p;
    p.c = kC[rng() % 4];
    p.xi = MinimalXi(g, f, m, p.c);
    fail[1] += VerifyLemma32(g, f, s, m, p).conclusion != ConclusionStatus::kPass;
  }
  const double t = Seconds(start);
  return {fail[0] + fail[1] + fail[2] == 0 && t < kLemmaLimit,
          absl::StrCat(kLemmaInstances, " instances each; failures: comparison ",
                       fail[0], ", xi comparison ", fail[1], ", identity ",
                       fail[2], "; ", Show(t))};
}

Outcome SolverCompleteness() {
  Rng rng(505);
  int positives = 0, misses = 0;
  int64_t drawn = 0;
  while (positives < kSolverInstances && drawn < 100LL * kSolverInstances) {
    ++drawn;
    const int n = UniformInt(rng, 2, 6);
    const int m = 1 + static_cast<int>(rng() % 2);
    const Multigraph g = RandomMultigraph(n, UniformInt(rng, n, 4 * n), rng);
    const EdgeSet f = RandomSparse(g, m, rng);
    std::vector<int> h(n);
    for (int& x : h) x = UniformInt(rng, 0, 2);
    const SolveInstance inst{g, f, h, m};
    absl::StatusOr<bool> exists = BruteTcFactorExists(g, f, inst.Caps(), m);
    if (!exists.ok() || !*exists) continue;
    ++positives;
    SolverOptions options;
    options.restarts = 20;
    options.seed = rng();
    absl::StatusOr<SolveResult> r = SolveExtension(inst, options);
    misses += !r.ok() || r->omega != m;
  }
  return {positives >= kSolverInstances && misses == 0,
          absl::StrCat(positives, " solvable instances, ", misses, " misses")};
}

Outcome CertificateValidity() {
  Rng rng(606);
  int optimal = 0, failures = 0;
  int64_t drawn = 0;
  while (optimal < kCertificateInstances && drawn < 50LL * kCertificateInstances) {
    ++drawn;
    const int n = UniformInt(rng, 3, 6);
    CaseParams p;
    p.m = 1 + static_cast<int>(rng() % 2);
    p.seed = rng();
    const Multigraph g = RandomMultigraph(n, UniformInt(rng, n, 4 * n), rng);
    absl::StatusOr<TheoremReport> r = VerifyEndToEnd("T2.4", g, p);
    if (!r.ok()) {
      ++failures;
      continue;
    }
    // Not-run means the solver fell short of the brute-force optimum.
    if (r->conclusion == ConclusionStatus::kNotRun) continue;
    ++optimal;
    failures += r->conclusion != ConclusionStatus::kPass;
  }
  return {optimal >= kCertificateInstances && failures == 0,
          absl::StrCat(optimal, " verified-optimal instances, ", failures,
                       " failures")};
}

Outcome TheoremSuite() {
  const auto start = Clock::now();
  int instances = 0, alerts = 0;
  std::vector<std::string> ids;
  uint64_t seed = 707;
  for (const SuiteEntry& e : StandardSuite()) {
    absl::StatusOr<SearchSummary> s =
        CounterexampleSearch(e.id, e.generator, e.count, seed++, 1, nullptr, false);
    if (!s.ok()) {
      return {false, absl::StrCat(e.id, "/", e.generator, ": ", s.status().ToString())};
    }
    instances += s->instances;
    alerts += s->red_alerts;
    if (ids.empty() || ids.back() != e.id) ids.push_back(e.id);
  }
  const double t = Seconds(start);
  return {alerts == 0 && instances >= kSuiteMinimum && t < kSuiteLimit &&
              ids.size() == InScopeIds().size(),
          absl::StrCat(instances, " instances over ", ids.size(), " cases, ",
                       alerts, " red alerts, ", Show(t))};
}

Outcome NamedValues() {
  std::vector<std::string> bad;
  for (auto order : {EnumerationOrder::kAscending, EnumerationOrder::kDescending}) {
    auto c4 = ComputeToughness(Cycle(4), order);
    if (!c4.ok() || c4->value != Rational(1)) bad.push_back("toughness(C4)");
    auto pet = ComputeToughness(Petersen(), order);
    if (!pet.ok() || pet->value != Rational(4, 3)) bad.push_back("toughness(Petersen)");
    auto bi = ComputeBipartiteIndex(Complete(4), order);
    if (!bi.ok() || bi->value != 2) bad.push_back("bi(K4)");
    if (StructureChecks(Petersen(), order).girth != 5) bad.push_back("girth(Petersen)");
  }
  std::string detail = bad.empty() ? "all four values agree in both orders" : "wrong:";
  for (const std::string& b : bad) absl::StrAppend(&detail, " ", b);
  return {bad.empty(), detail};
}

bool TwoThreeFactor(const Multigraph& g, const EdgeSet& h) {
  for (int d : SpanningSubgraph(g, h).Degrees()) {
    if (d != 2 && d != 3) return false;
  }
  return true;
}

// Both planted cycles are already valid answers, so each path is also run on
// two disjoint 5-cycles in K_10, where the solver has to add edges.
EdgeSet TwoFiveCycles(const Multigraph& k10) {
  EdgeSet out;
  for (const Edge& e : k10.edges()) {
    const int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    const bool same = (a < 5) == (b < 5);
    if (same && (b - a == 1 || b - a == 4)) out.insert(e.id);
  }
  return out;
}

struct Built {
  bool ok = false;
  double seconds = 0;
};

template <typename Solve>
Built Check(const Multigraph& g, const EdgeSet& f, bool two_edge_connected,
            Solve solve) {
  const auto start = Clock::now();
  auto r = solve();
  Built b;
  b.seconds = Seconds(start);
  if (!r.ok()) return b;
  const StructureReport s = StructureChecks(SpanningSubgraph(g, r->h));
  b.ok = f.IsSubsetOf(r->h) && TwoThreeFactor(g, r->h) &&
         (two_edge_connected ? s.two_edge_connected : s.connected) &&
         b.seconds < kConstructionLimit;
  return b;
}

Outcome Constructions() {
  const Multigraph k5 = Complete(5), k7 = Complete(7), k10 = Complete(10);
  const EdgeSet c5 = CycleIn(k5, 5), c7 = CycleIn(k7, 7), two = TwoFiveCycles(k10);
  const Built a = Check(k5, c5, false,
                        [&] { return SolveTheorem41(k5, c5, 1, Rational(5), 0); });
  const Built b = Check(k7, c7, true, [&] { return SolveTheorem48(k7, c7, Rational(7)); });
  const Built c = Check(k10, two, false,
                        [&] { return SolveTheorem41(k10, two, 1, Rational(5), 0); });
  const Built d = Check(k10, two, true,
                        [&] { return SolveTheorem48(k10, two, Rational(5)); });
  auto say = [](const Built& x) {
    return absl::StrCat(x.ok ? "ok" : "FAILED", " (", Show(x.seconds), ")");
  };
  return {a.ok && b.ok && c.ok && d.ok,
          absl::StrCat("K5+C5 connected {2,3}-factor ", say(a),
                       "; K7+C7 2-edge-connected {2,3}-factor ", say(b),
                       "; K10+2C5 connected ", say(c), ", 2-edge-connected ",
                       say(d))};
}

}  // namespace
}  // namespace tcf

int main() {
  using tcf::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 sparsity oracle equivalence", tcf::SparsityEquivalence},
      {"2 omega/packing duality", tcf::PackingDuality},
      {"3 exchange safety", tcf::ExchangeSafety},
      {"4 lemma identities", tcf::LemmaIdentities},
      {"5 solver completeness", tcf::SolverCompleteness},
      {"6 certificate validity", tcf::CertificateValidity},
      {"7 theorem suite", tcf::TheoremSuite},
      {"8 named oracle values", tcf::NamedValues},
      {"9 concrete constructions", tcf::Constructions},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const Outcome o = run();
    all &= o.pass;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
