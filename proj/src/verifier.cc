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

#include "tcf/verifier.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <thread>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "tcf/io.h"
#include "tcf/moves.h"
#include "tcf/oracles.h"
#include "tcf/sparsity.h"

namespace tcf {
namespace {

using json = nlohmann::json;

std::vector<int> DegreesIn(const Multigraph& g, const EdgeSet& h) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId id : h) {
    const Edge& e = g.edge(id);
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::string Describe(const VertexSet& s) {
  return absl::StrCat("{", absl::StrJoin(s.members(), ","), "}");
}

EdgeSet RandomSubset(const Multigraph& g, double prob, Rng& rng) {
  std::vector<EdgeId> ids;
  for (const Edge& e : g.edges()) {
    if (Bernoulli(rng, prob)) ids.push_back(e.id);
  }
  return EdgeSet(std::move(ids));
}

EdgeSet RandomSparse(const Multigraph& g, int m, double prob, Rng& rng,
                     const std::optional<std::vector<int>>& caps = std::nullopt) {
  const EdgeSet pool = RandomSubset(g, prob, rng);
  return *MaximalSparseExtension(SpanningSubgraph(g, pool), EdgeSet(), m, caps,
                                 rng());
}

VertexSet RandomVertices(int n, Rng& rng) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (Bernoulli(rng, 0.5)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool IsSimple(const Multigraph& g) {
  return Simplify(g).num_edges() == g.num_edges();
}

bool ContainsAll(const Multigraph& g, const EdgeSet& f) {
  return std::all_of(f.begin(), f.end(),
                     [&](EdgeId id) { return g.has_edge(id); });
}

// Edges of the host between the two sides of the bitmask.
EdgeSet CrossEdges(const Multigraph& g, uint64_t mask) {
  std::vector<EdgeId> ids;
  for (const Edge& e : g.edges()) {
    if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) ids.push_back(e.id);
  }
  return EdgeSet(std::move(ids));
}

bool PackingTc(const Multigraph& g, const EdgeSet& h, int m) {
  if (m <= 0) return true;
  if (g.num_vertices() == 0) return false;
  return SpanningTreePacking(SpanningSubgraph(g, h), m).has_value();
}

struct FactorGoal {
  std::vector<std::vector<int>> allowed;
  EdgeSet required;
  FactorExtra extra = FactorExtra::kNone;
  int m = 1;
  int complement_m = 0;
};

std::vector<std::vector<int>> Window(const std::vector<int>& lo, int width) {
  std::vector<std::vector<int>> out(lo.size());
  for (size_t v = 0; v < lo.size(); ++v) {
    for (int d = lo[v]; d <= lo[v] + width; ++d) out[v].push_back(d);
  }
  return out;
}

std::vector<std::vector<int>> Pair(const std::vector<int>& x, int gap) {
  std::vector<std::vector<int>> out(x.size());
  for (size_t v = 0; v < x.size(); ++v) out[v] = {x[v], x[v] + gap};
  return out;
}

// Empty when h meets the goal; otherwise the first violated requirement.
// Tree-connectivity is decided by matroid partitioning, 2-(edge-)
// connectivity by the structural oracle.
std::string CheckFactor(const Multigraph& g, const EdgeSet& h,
                        const FactorGoal& goal) {
  if (!ContainsAll(g, h)) return "factor uses an edge outside G";
  if (!goal.required.IsSubsetOf(h)) return "factor misses a required edge";
  const std::vector<int> deg = DegreesIn(g, h);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& ok = goal.allowed[v];
    if (!std::binary_search(ok.begin(), ok.end(), deg[v])) {
      return absl::StrCat("vertex ", v, " has degree ", deg[v]);
    }
  }
  const Multigraph hg = SpanningSubgraph(g, h);
  switch (goal.extra) {
    case FactorExtra::kNone:
      break;
    case FactorExtra::kConnected:
      if (!StructureChecks(hg).connected) return "factor is disconnected";
      break;
    case FactorExtra::kTreeConnected:
      if (!PackingTc(g, h, goal.m)) {
        return absl::StrCat("factor is not ", goal.m, "-tree-connected");
      }
      break;
    case FactorExtra::kTwoEdgeConnected:
      if (!StructureChecks(hg).two_edge_connected) {
        return "factor is not 2-edge-connected";
      }
      break;
    case FactorExtra::kTwoConnected:
      if (!StructureChecks(hg).two_connected) return "factor is not 2-connected";
      break;
  }
  if (goal.complement_m > 0 &&
      !PackingTc(g, g.AllEdges().Minus(h), goal.complement_m)) {
    return absl::StrCat("complement is not ", goal.complement_m,
                        "-tree-connected");
  }
  return "";
}

FactorSearch SearchFactor(const Multigraph& g, const FactorGoal& goal,
                          int64_t budget) {
  FactorQuery q;
  q.spec.allowed = goal.allowed;
  q.extra = goal.extra;
  q.m = goal.m;
  q.complement_m = goal.complement_m;
  q.required = goal.required;
  q.node_limit = budget;
  return BruteFactor(g, q);
}

// A factor with d_F = f except possibly one vertex at f + 1. The second
// member is that vertex, or -1.
std::optional<std::pair<EdgeSet, VertexId>> NearFactor(const Multigraph& g,
                                                       const std::vector<int>& f,
                                                       int64_t budget) {
  const int n = g.num_vertices();
  const int sum = std::accumulate(f.begin(), f.end(), 0);
  FactorGoal goal;
  goal.allowed.resize(n);
  for (VertexId v = 0; v < n; ++v) goal.allowed[v] = {f[v]};
  if (sum % 2 == 0) {
    FactorSearch s = SearchFactor(g, goal, budget);
    if (s.factor) return std::make_pair(*s.factor, -1);
    return std::nullopt;
  }
  for (VertexId u = 0; u < n; ++u) {
    goal.allowed[u] = {f[u] + 1};
    FactorSearch s = SearchFactor(g, goal, budget);
    if (s.factor) return std::make_pair(*s.factor, u);
    goal.allowed[u] = {f[u]};
  }
  return std::nullopt;
}

struct Run {
  const Multigraph& g;
  CaseParams p;
  Rng rng;
  TheoremReport rep;

  int n() const { return g.num_vertices(); }
};

// Structural preconditions; never assumed.
bool Require(Run& r, bool holds, const std::string& why) {
  if (holds) return true;
  r.rep.hypothesis = HypothesisStatus::kFail;
  r.rep.conclusion = ConclusionStatus::kNotRun;
  r.rep.mode = "gate";
  r.rep.detail = why;
  return false;
}

// Quantitative conditions (toughness, order, component bounds); assumed
// when requested.
bool Gate(Run& r, bool holds, const std::string& why) {
  if (holds) {
    if (r.rep.hypothesis != HypothesisStatus::kAssumed) {
      r.rep.hypothesis = HypothesisStatus::kPass;
    }
    return true;
  }
  if (r.p.assume_hypothesis) {
    r.rep.hypothesis = HypothesisStatus::kAssumed;
    r.rep.detail = absl::StrCat("assumed: ", why);
    return true;
  }
  return Require(r, false, why);
}

void Pass(Run& r, const std::string& mode) {
  r.rep.conclusion = ConclusionStatus::kPass;
  r.rep.mode = mode;
}

void Fail(Run& r, const std::string& mode, const std::string& why) {
  r.rep.conclusion = ConclusionStatus::kFail;
  r.rep.mode = mode;
  r.rep.detail = r.rep.detail.empty() ? why : absl::StrCat(r.rep.detail, "; ", why);
}

void Note(Run& r, const std::string& what) {
  r.rep.detail = r.rep.detail.empty() ? what : absl::StrCat(r.rep.detail, "; ", what);
}

absl::StatusOr<bool> Tough(const Multigraph& g, const Rational& t, json* out) {
  absl::StatusOr<Toughness> tough = ComputeToughness(g);
  if (!tough.ok()) return tough.status();
  *out = ToJson(*tough);
  return IsTough(*tough, t);
}

// Checks a constructed factor, or falls back to the factor oracle when the
// construction did not deliver one.
void ConcludeFactor(Run& r, const Multigraph& host,
                    const absl::StatusOr<EdgeSet>& built,
                    const FactorGoal& goal) {
  if (built.ok()) {
    r.rep.witness["factor"] = ToJson(*built);
    const std::string why = CheckFactor(host, *built, goal);
    if (why.empty()) {
      Pass(r, "construction");
    } else {
      Fail(r, "construction", why);
    }
    return;
  }
  if (built.status().code() != absl::StatusCode::kAborted &&
      built.status().code() != absl::StatusCode::kResourceExhausted &&
      built.status().code() != absl::StatusCode::kNotFound) {
    Fail(r, "construction", std::string(built.status().message()));
    return;
  }
  Note(r, absl::StrCat("construction: ", built.status().message()));
  FactorSearch s = SearchFactor(host, goal, r.p.oracle_budget);
  if (s.factor) {
    r.rep.witness["factor"] = ToJson(*s.factor);
    const std::string why = CheckFactor(host, *s.factor, goal);
    if (why.empty()) {
      Pass(r, "oracle");
    } else {
      Fail(r, "oracle", why);
    }
  } else if (s.exhausted) {
    Fail(r, "oracle", "no factor with the required properties exists");
  } else {
    r.rep.conclusion = ConclusionStatus::kNotRun;
    r.rep.mode = "oracle";
    Note(r, "factor search budget exhausted");
  }
}

// --- Moves -----------------------------------------------------------------

void ConcludeSparse(Run& r, const absl::StatusOr<EdgeSet>& out) {
  if (!out.ok()) {
    Fail(r, "construction", std::string(out.status().message()));
    return;
  }
  r.rep.witness["factor"] = ToJson(*out);
  const Multigraph h = SpanningSubgraph(r.g, *out);
  const bool sparse = r.n() <= kSubsetOracleLimit ? IsSparseBySubsets(h, r.p.m)
                                                  : IsSparse(h, r.p.m);
  if (sparse) {
    Pass(r, "oracle");
  } else {
    Fail(r, "oracle", "result is not sparse");
  }
}

absl::Status CaseAdd(Run& r) {
  const int m = r.p.m;
  const EdgeSet f = r.p.factor ? *r.p.factor : RandomSparse(r.g, m, 0.5, r.rng);
  r.rep.witness["F"] = ToJson(f);
  if (!Require(r, ContainsAll(r.g, f) && IsSparse(SpanningSubgraph(r.g, f), m),
               "F is not a sparse factor")) {
    return absl::OkStatus();
  }
  const std::vector<int> block =
      TreeConnectedComponents(SpanningSubgraph(r.g, f), m).blocks.BlockIndex(r.n());
  std::optional<EdgeId> e = r.p.edge;
  if (!e) {
    std::vector<EdgeId> pool;
    for (const Edge& x : r.g.edges()) {
      if (!f.contains(x.id) && block[x.u] != block[x.v]) pool.push_back(x.id);
    }
    if (!pool.empty()) e = pool[r.rng() % pool.size()];
  }
  if (!Require(r, e && r.g.has_edge(*e) && !f.contains(*e) &&
                      block[r.g.edge(*e).u] != block[r.g.edge(*e).v],
               "no edge of G - F joins two components of F")) {
    return absl::OkStatus();
  }
  r.rep.hypothesis = HypothesisStatus::kPass;
  r.rep.witness["e"] = *e;
  ConcludeSparse(r, AddMove(r.g, f, *e, m));
  return absl::OkStatus();
}

absl::Status CaseExchange(Run& r) {
  const int m = r.p.m;
  const EdgeSet f = r.p.factor ? *r.p.factor : RandomSparse(r.g, m, 0.8, r.rng);
  r.rep.witness["F"] = ToJson(f);
  if (!Require(r, ContainsAll(r.g, f) && IsSparse(SpanningSubgraph(r.g, f), m),
               "F is not a sparse factor")) {
    return absl::OkStatus();
  }
  const std::vector<int> block =
      TreeConnectedComponents(SpanningSubgraph(r.g, f), m).blocks.BlockIndex(r.n());
  std::optional<EdgeId> xy = r.p.edge;
  if (!xy) {
    std::vector<EdgeId> pool;
    for (const Edge& x : r.g.edges()) {
      if (!f.contains(x.id)) pool.push_back(x.id);
    }
    if (!pool.empty()) xy = pool[r.rng() % pool.size()];
  }
  if (!Require(r, xy && r.g.has_edge(*xy) && !f.contains(*xy),
               "no edge in G - F")) {
    return absl::OkStatus();
  }
  const Edge& added = r.g.edge(*xy);
  if (!Require(r, block[added.u] == block[added.v],
               "the ends of xy lie in different components, so no Q exists")) {
    return absl::OkStatus();
  }
  absl::StatusOr<TcSubgraph> q = MinimalTcSubgraph(r.g, f, added.u, added.v, m);
  if (!q.ok()) return q.status();
  r.rep.witness["Q"] = {{"vertices", ToJson(q->vertices)},
                        {"edges", ToJson(q->edges)}};
  // Q must be tree-connected and lose x ~ y when any other vertex goes.
  const Multigraph fg = SpanningSubgraph(r.g, f);
  bool minimal = IsTreeConnected(
      InducedSubgraph(SpanningSubgraph(r.g, q->edges), q->vertices), m);
  for (VertexId w : q->vertices) {
    if (w == added.u || w == added.v) continue;
    std::vector<VertexId> rest;
    for (VertexId v : q->vertices) {
      if (v != w) rest.push_back(v);
    }
    const VertexSet x(rest);
    const Multigraph sub = InducedSubgraph(fg, x);
    const std::vector<int> b =
        TreeConnectedComponents(sub, m).blocks.BlockIndex(sub.num_vertices());
    const auto at = [&](VertexId v) {
      return static_cast<int>(std::lower_bound(rest.begin(), rest.end(), v) -
                              rest.begin());
    };
    if (b[at(added.u)] == b[at(added.v)]) minimal = false;
  }
  if (!Require(r, minimal, "Q is not a minimal tree-connected subgraph")) {
    return absl::OkStatus();
  }
  std::optional<EdgeId> e = r.p.removed;
  if (!e && !q->edges.empty()) {
    e = q->edges.members()[r.rng() % q->edges.size()];
  }
  if (!Require(r, e && q->edges.contains(*e), "e is not an edge of Q")) {
    return absl::OkStatus();
  }
  r.rep.hypothesis = HypothesisStatus::kPass;
  r.rep.witness["xy"] = *xy;
  r.rep.witness["e"] = *e;
  ConcludeSparse(r, ExchangeMove(r.g, f, *xy, *e, m));
  return absl::OkStatus();
}

absl::Status CaseRegionSwap(Run& r) {
  const int m = r.p.m;
  const EdgeSet f = r.p.factor ? *r.p.factor : RandomSparse(r.g, m, 0.8, r.rng);
  const EdgeSet f0 = r.p.other ? *r.p.other : RandomSparse(r.g, m, 0.8, r.rng);
  r.rep.witness["F"] = ToJson(f);
  r.rep.witness["F0"] = ToJson(f0);
  if (!Require(r,
               ContainsAll(r.g, f) && ContainsAll(r.g, f0) &&
                   IsSparse(SpanningSubgraph(r.g, f), m) &&
                   IsSparse(SpanningSubgraph(r.g, f0), m),
               "F or F0 is not a sparse factor")) {
    return absl::OkStatus();
  }
  VertexSet x;
  if (r.p.s) {
    x = *r.p.s;
  } else {
    const auto blocks =
        TreeConnectedComponents(SpanningSubgraph(r.g, f), m).blocks.blocks;
    if (!blocks.empty()) x = VertexSet(blocks[r.rng() % blocks.size()]);
  }
  r.rep.witness["X"] = ToJson(x);
  const bool tc =
      !x.empty() && IsTreeConnected(InducedSubgraph(SpanningSubgraph(r.g, f), x), m);
  if (!Require(r, tc, "F[X] is not tree-connected")) return absl::OkStatus();
  r.rep.hypothesis = HypothesisStatus::kPass;
  ConcludeSparse(r, RegionSwapMove(r.g, f, f0, x, m));
  return absl::OkStatus();
}

// --- Certificate -----------------------------------------------------------

std::vector<int> RandomH(int n, int hi, Rng& rng) {
  std::vector<int> h(n);
  for (int& x : h) x = UniformInt(rng, 0, hi);
  return h;
}

absl::Status CaseCertificate(Run& r) {
  const int m = r.p.m;
  const int n = r.n();
  const EdgeSet f = r.p.factor ? *r.p.factor : RandomSparse(r.g, m, 0.4, r.rng);
  const std::vector<int> h = r.p.h.empty() ? RandomH(n, 2, r.rng) : r.p.h;
  r.rep.witness["F"] = ToJson(f);
  r.rep.witness["h"] = h;
  if (!Require(r, static_cast<int>(h.size()) == n,
               "h needs one value per vertex")) {
    return absl::OkStatus();
  }
  if (!Require(r,
               ContainsAll(r.g, f) && IsSparse(SpanningSubgraph(r.g, f), m) &&
                   std::all_of(h.begin(), h.end(), [](int x) { return x >= 0; }),
               "F is not sparse or h is negative")) {
    return absl::OkStatus();
  }
  r.rep.hypothesis = HypothesisStatus::kPass;
  SolveInstance inst{r.g, f, h, m};
  SolverOptions options = r.p.solver;
  options.seed = r.p.seed;
  absl::StatusOr<SolveResult> solved = SolveExtension(inst, options);
  if (!solved.ok()) return solved.status();
  absl::StatusOr<int> best = MaxCappedSparseSuperset(r.g, f, inst.Caps(), m);
  if (!best.ok()) return best.status();
  r.rep.witness["H"] = ToJson(solved->h);
  if (*best != static_cast<int>(solved->h.size())) {
    r.rep.conclusion = ConclusionStatus::kNotRun;
    r.rep.mode = "construction";
    Note(r, absl::StrCat("solver reached ", solved->h.size(), " edges, optimum ",
                         *best));
    return absl::OkStatus();
  }
  absl::StatusOr<Certificate> cert = ExtractCertificate(inst, solved->h);
  if (!cert.ok()) return cert.status();
  r.rep.witness["certificate"] = ToJson(*cert);
  // Both conditions re-evaluated with the subset oracle.
  const Multigraph hg = SpanningSubgraph(r.g, solved->h);
  const bool c1 = OmegaBySubsets(StripExcept(r.g, cert->s, f), m) ==
                  OmegaBySubsets(StripExcept(hg, cert->s, f), m);
  const std::vector<int> caps = inst.Caps();
  const std::vector<int> deg = DegreesIn(r.g, solved->h);
  bool c2 = true;
  for (VertexId v : cert->s) c2 &= deg[v] == caps[v];
  if (c1 && c2) {
    Pass(r, "construction");
  } else {
    Fail(r, "construction",
         absl::StrCat("certificate S = ", Describe(cert->s), " violates ",
                      c1 ? "saturation" : "the Omega equality"));
  }
  return absl::OkStatus();
}

// --- Comparison lemmas -----------------------------------------------------

Rational RandomC(Rng& rng) {
  static const Rational kChoices[] = {Rational(3, 2), Rational(2), Rational(5, 2),
                                      Rational(3),    Rational(4), Rational(7)};
  return kChoices[rng() % 6];
}

absl::Status CaseLemma31(Run& r) {
  const EdgeSet f = r.p.factor ? *r.p.factor : RandomSubset(r.g, 0.5, r.rng);
  const VertexSet s = r.p.s ? *r.p.s : RandomVertices(r.n(), r.rng);
  if (!ContainsAll(r.g, f)) return absl::InvalidArgumentError("F not in G");
  r.rep = [&] {
    TheoremReport out = VerifyLemma31(r.g, f, s, r.p.m);
    out.id = r.rep.id;
    out.instance = r.rep.instance;
    return out;
  }();
  return absl::OkStatus();
}

absl::Status CaseLemma32(Run& r) {
  const EdgeSet f = r.p.factor ? *r.p.factor : RandomSubset(r.g, 0.5, r.rng);
  const VertexSet s = r.p.s ? *r.p.s : RandomVertices(r.n(), r.rng);
  if (!ContainsAll(r.g, f)) return absl::InvalidArgumentError("F not in G");
  XiParams xp;
  xp.c = r.p.c ? *r.p.c : RandomC(r.rng);
  xp.xi = r.p.xi ? *r.p.xi : MinimalXi(r.g, f, r.p.m, xp.c);
  TheoremReport out = VerifyLemma32(r.g, f, s, r.p.m, xp);
  out.id = r.rep.id;
  out.instance = r.rep.instance;
  r.rep = std::move(out);
  return absl::OkStatus();
}

absl::Status CaseLemma33(Run& r) {
  const int m = r.p.m;
  const EdgeSet h = r.p.other ? *r.p.other : RandomSparse(r.g, m, 0.7, r.rng);
  EdgeSet f;
  if (r.p.factor) {
    f = *r.p.factor;
  } else {
    std::vector<EdgeId> ids;
    for (EdgeId id : h) {
      if (Bernoulli(r.rng, 0.5)) ids.push_back(id);
    }
    f = EdgeSet(std::move(ids));
  }
  const VertexSet s = r.p.s ? *r.p.s : RandomVertices(r.n(), r.rng);
  TheoremReport out = VerifyLemma33(r.g, h, f, s, m);
  out.id = r.rep.id;
  out.instance = r.rep.instance;
  r.rep = std::move(out);
  return absl::OkStatus();
}

// --- Extension theorems ----------------------------------------------------

// Runs the extension and decides the conclusion: an m-tree-connected H
// containing F with d_H <= h + d_F.
void ConcludeExtension(Run& r, const EdgeSet& f, const std::vector<int>& h,
                       int max_degree_override = -1) {
  const int m = r.p.m;
  const int n = r.n();
  const std::vector<int> df = DegreesIn(r.g, f);
  FactorGoal goal;
  goal.allowed.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    const int cap = max_degree_override >= 0 ? max_degree_override : h[v] + df[v];
    for (int d = 0; d <= cap; ++d) goal.allowed[v].push_back(d);
  }
  goal.required = f;
  goal.extra = FactorExtra::kTreeConnected;
  goal.m = m;
  SolverOptions options = r.p.solver;
  options.seed = r.p.seed;
  absl::StatusOr<Extension> ext = ExtendFactor(r.g, f, h, m, options);
  if (!ext.ok()) {
    Fail(r, "construction", std::string(ext.status().message()));
    return;
  }
  r.rep.witness["solver"] = {{"omega", ext->solve.omega},
                             {"optimal", OptimalityName(ext->solve.optimal)},
                             {"restarts", ext->solve.restarts_used}};
  if (ext->solve.omega == m) {
    ConcludeFactor(r, r.g, ext->h, goal);
    return;
  }
  // The solver stopped early; decide the reduced instance exhaustively.
  Note(r, absl::StrCat("solver stopped at Omega = ", ext->solve.omega));
  std::vector<int> caps = DegreesIn(r.g, ext->sparse_f);
  for (VertexId v = 0; v < n; ++v) caps[v] += h[v];
  absl::StatusOr<bool> exists =
      BruteTcFactorExists(r.g, ext->sparse_f, caps, m, r.p.oracle_budget);
  if (!exists.ok()) {
    r.rep.conclusion = ConclusionStatus::kNotRun;
    r.rep.mode = "oracle";
    Note(r, std::string(exists.status().message()));
  } else if (*exists) {
    Pass(r, "oracle");
  } else {
    Fail(r, "oracle", "no tree-connected extension within the caps exists");
  }
}

bool HValid(Run& r, const std::vector<int>& h) {
  return Require(r,
                 static_cast<int>(h.size()) == r.n() &&
                     std::all_of(h.begin(), h.end(), [](int x) { return x >= 0; }),
                 "h must be a nonnegative value per vertex");
}

absl::Status CaseCondition34(Run& r) {
  const int m = r.p.m;
  const EdgeSet f = r.p.factor ? *r.p.factor : RandomSubset(r.g, 0.3, r.rng);
  const std::vector<int> h = r.p.h.empty() ? RandomH(r.n(), 2, r.rng) : r.p.h;
  r.rep.witness["F"] = ToJson(f);
  r.rep.witness["h"] = h;
  if (!Require(r, ContainsAll(r.g, f), "F not in G") || !HValid(r, h)) {
    return absl::OkStatus();
  }
  const bool exact = r.n() <= r.p.exact_limit;
  auto cond = CheckCondition34(r.g, f, h, m,
                               exact ? CheckMode::kExact : CheckMode::kBounded,
                               r.p.exact_limit);
  if (!cond.ok()) return cond.status();
  r.rep.witness["condition"] = ToJson(*cond);
  if (!Gate(r, cond->holds,
            absl::StrCat(exact ? "" : "bounded ", "condition fails at S = ",
                         cond->witness ? Describe(*cond->witness) : ""))) {
    return absl::OkStatus();
  }
  ConcludeExtension(r, f, h);
  return absl::OkStatus();
}

absl::Status CaseLinearForest(Run& r, const Rational& slope) {
  const int m = r.p.m;
  const int n = r.n();
  EdgeSet f;
  if (r.p.factor) {
    f = *r.p.factor;
  } else {
    std::vector<int> caps(n);
    for (int& c : caps) c = UniformInt(r.rng, 0, 2 * m);
    f = RandomSparse(r.g, m, 0.6, r.rng, caps);
  }
  r.rep.witness["F"] = ToJson(f);
  if (!Require(r, ContainsAll(r.g, f), "F not in G")) return absl::OkStatus();
  const std::vector<int> df = DegreesIn(r.g, f);
  const int delta = df.empty() ? 0 : *std::max_element(df.begin(), df.end());
  if (!Require(r, delta <= 2 * m, "F has a vertex of degree above 2m")) {
    return absl::OkStatus();
  }
  if (r.rep.id == "C3.5" &&
      !Require(r, IsSparse(SpanningSubgraph(r.g, f), m), "F is not sparse")) {
    return absl::OkStatus();
  }
  if (r.rep.id == "C3.8" && !Require(r, IsSimple(r.g), "G is not simple")) {
    return absl::OkStatus();
  }
  auto bound = CheckOmegaBound(r.g, m, slope, Rational(m));
  if (!bound.ok()) return bound.status();
  r.rep.witness["condition"] = ToJson(*bound);
  if (!Gate(r, bound->holds,
            absl::StrCat("Omega bound fails at S = ",
                         bound->witness ? Describe(*bound->witness) : ""))) {
    return absl::OkStatus();
  }
  std::vector<int> h(n);
  for (VertexId v = 0; v < n; ++v) h[v] = 2 * m + 1 - df[v];
  ConcludeExtension(r, f, h, 2 * m + 1);
  return absl::OkStatus();
}

absl::Status CaseCondition36(Run& r) {
  const int m = r.p.m;
  const EdgeSet f = r.p.factor ? *r.p.factor : RandomSubset(r.g, 0.4, r.rng);
  const std::vector<int> h = r.p.h.empty() ? RandomH(r.n(), 2, r.rng) : r.p.h;
  r.rep.witness["F"] = ToJson(f);
  r.rep.witness["h"] = h;
  if (!Require(r, ContainsAll(r.g, f), "F not in G") || !HValid(r, h)) {
    return absl::OkStatus();
  }
  static const Rational kChoices[] = {Rational(2), Rational(5, 2), Rational(3),
                                      Rational(4)};
  XiParams xp;
  xp.c = r.p.c ? *r.p.c : kChoices[r.rng() % 4];
  if (!Require(r, xp.c >= 2, "c must be at least 2")) return absl::OkStatus();
  xp.xi = r.p.xi ? *r.p.xi : MinimalXi(r.g, f, m, xp.c);
  std::vector<std::string> xi_text;
  for (const Rational& x : xp.xi) xi_text.push_back(ToString(x));
  r.rep.witness["c"] = ToString(xp.c);
  r.rep.witness["xi"] = xi_text;
  if (absl::Status s = CheckXi(r.g, f, m, xp); !s.ok()) {
    if (s.code() != absl::StatusCode::kFailedPrecondition) return s;
    Require(r, false, std::string(s.message()));
    return absl::OkStatus();
  }
  auto cond = CheckCondition36(r.g, f, h, m, xp);
  if (!cond.ok()) return cond.status();
  r.rep.witness["condition"] = ToJson(*cond);
  if (!Gate(r, cond->holds,
            absl::StrCat("condition fails at S = ",
                         cond->witness ? Describe(*cond->witness) : ""))) {
    return absl::OkStatus();
  }
  ConcludeExtension(r, f, h);
  return absl::OkStatus();
}

absl::Status CaseCondition37(Run& r) {
  const int m = r.p.m;
  const EdgeSet f = r.p.factor ? *r.p.factor : RandomSubset(r.g, 0.6, r.rng);
  const std::vector<int> h = r.p.h.empty() ? RandomH(r.n(), 2, r.rng) : r.p.h;
  const Rational c = r.p.c ? *r.p.c : Rational(2 * m + 1);
  r.rep.witness["F"] = ToJson(f);
  r.rep.witness["h"] = h;
  r.rep.witness["c"] = ToString(c);
  if (!Require(r, ContainsAll(r.g, f), "F not in G") || !HValid(r, h)) {
    return absl::OkStatus();
  }
  if (absl::Status s = CheckLargeComponents(r.g, f, m, c); !s.ok()) {
    Require(r, false, std::string(s.message()));
    return absl::OkStatus();
  }
  auto cond = CheckCondition37(r.g, h, m, c);
  if (!cond.ok()) return cond.status();
  r.rep.witness["condition"] = ToJson(*cond);
  if (!Gate(r, cond->holds,
            absl::StrCat("condition fails at S = ",
                         cond->witness ? Describe(*cond->witness) : ""))) {
    return absl::OkStatus();
  }
  ConcludeExtension(r, f, h);
  return absl::OkStatus();
}

// --- One-vertex-fixed extension and its corollaries ------------------------

PipelineOptions InnerOptions(const Run& r) {
  PipelineOptions opts;
  opts.check_hypothesis = false;
  opts.solver = r.p.solver;
  opts.solver.seed = r.p.seed;
  return opts;
}

// Largest c (capped at 64) meeting the component condition, or 2m + 1 if
// none does.
Rational FavorableC(const Multigraph& g, const EdgeSet& f, int m) {
  const Multigraph fg = SpanningSubgraph(g, f);
  Rational best(64);
  for (const auto& block : TreeConnectedComponents(fg, m).blocks.blocks) {
    const VertexSet comp(block);
    const Rational ratio(BoundaryDegree(fg, comp), 2 * m);
    if (ratio >= 1) continue;
    best = std::min(best, (static_cast<int>(comp.size()) - ratio) / (1 - ratio));
  }
  return std::max(best, Rational(2 * m + 1));
}

EdgeSet PackingUnion(const Multigraph& g, int m) {
  std::vector<EdgeId> ids;
  if (auto trees = SpanningTreePacking(g, m)) {
    for (const EdgeSet& t : *trees) ids.insert(ids.end(), t.begin(), t.end());
  }
  return EdgeSet(std::move(ids));
}

absl::Status CaseOneVertexFixed(Run& r) {
  const int m = r.p.m;
  const int n = r.n();
  const EdgeSet f = r.p.factor ? *r.p.factor : PackingUnion(r.g, m);
  const Rational c = r.p.c ? *r.p.c : FavorableC(r.g, f, m);
  const VertexId u = r.p.u.value_or(0);
  r.rep.witness["F"] = ToJson(f);
  r.rep.witness["c"] = ToString(c);
  r.rep.witness["u"] = u;
  if (!Require(r, n >= 1 && u >= 0 && u < n && ContainsAll(r.g, f),
               "bad F or u")) {
    return absl::OkStatus();
  }
  if (absl::Status s = CheckLargeComponents(r.g, f, m, c); !s.ok()) {
    Require(r, false, std::string(s.message()));
    return absl::OkStatus();
  }
  auto bound = CheckComponentBound(r.g, (c - 2 * m) / (2 * m * (c - 1)), Rational(1));
  if (!bound.ok()) return bound.status();
  if (!Gate(r, bound->holds,
            absl::StrCat("component bound fails at S = ", Describe(bound->witness)))) {
    return absl::OkStatus();
  }
  const std::vector<int> df = DegreesIn(r.g, f);
  FactorGoal goal;
  goal.allowed = Window(df, 1);
  goal.allowed[u] = {df[u]};
  goal.required = f;
  goal.extra = FactorExtra::kTreeConnected;
  goal.m = m;
  auto built = SolveTheorem41(r.g, f, m, c, u, InnerOptions(r));
  ConcludeFactor(r, r.g,
                 built.ok() ? absl::StatusOr<EdgeSet>(built->h)
                            : absl::StatusOr<EdgeSet>(built.status()),
                 goal);
  return absl::OkStatus();
}

std::vector<int> ConstantF(int n, int value) { return std::vector<int>(n, value); }

// Extends the near-f-factor F to a tree-connected {f, f+1}-factor through
// the one-vertex-fixed construction with c = a + 1.
void ExtendNearFactor(Run& r, const Multigraph& host,
                      const std::optional<std::pair<EdgeSet, VertexId>>& near,
                      const std::vector<int>& f, int a, bool require_f) {
  FactorGoal goal;
  goal.allowed = Pair(f, 1);
  goal.extra = FactorExtra::kTreeConnected;
  goal.m = r.p.m;
  if (!near) {
    ConcludeFactor(r, host, absl::NotFoundError("no near f-factor exists"), goal);
    return;
  }
  r.rep.witness["F"] = ToJson(near->first);
  if (require_f) goal.required = near->first;
  const VertexId u = near->second >= 0 ? near->second : 0;
  auto built = SolveTheorem41(host, near->first, r.p.m, Rational(a + 1), u,
                              InnerOptions(r));
  ConcludeFactor(r, host,
                 built.ok() ? absl::StatusOr<EdgeSet>(built->h)
                            : absl::StatusOr<EdgeSet>(built.status()),
                 goal);
}

absl::Status CaseNearFactorExtension(Run& r) {
  const int m = r.p.m;
  const int n = r.n();
  const int a = r.p.a > 0 ? r.p.a : 2 * m;
  const std::vector<int> f = r.p.f.empty() ? ConstantF(n, a) : r.p.f;
  r.rep.witness["f"] = f;
  r.rep.witness["a"] = a;
  if (!Require(r, static_cast<int>(f.size()) == n, "f needs one value per vertex") ||
      !Require(r, IsSimple(r.g), "G is not simple") ||
      !Require(r, a >= 2 * m && std::all_of(f.begin(), f.end(),
                                            [&](int x) { return x >= a; }),
               "need f >= a >= 2m")) {
    return absl::OkStatus();
  }
  std::optional<std::pair<EdgeSet, VertexId>> near;
  if (r.p.factor) {
    const std::vector<int> d = DegreesIn(r.g, *r.p.factor);
    VertexId raised = -1;
    bool ok = ContainsAll(r.g, *r.p.factor);
    for (VertexId v = 0; v < n && ok; ++v) {
      if (d[v] == f[v]) continue;
      if (d[v] == f[v] + 1 && raised < 0) {
        raised = v;
      } else {
        ok = false;
      }
    }
    if (ok) near = std::make_pair(*r.p.factor, raised);
  } else {
    near = NearFactor(r.g, f, r.p.oracle_budget);
  }
  if (!Require(r, near.has_value(), "G has no near f-factor F")) {
    return absl::OkStatus();
  }
  auto bound = CheckComponentBound(r.g, Rational(a + 1 - 2 * m, 2 * m * a), Rational(1));
  if (!bound.ok()) return bound.status();
  if (!Gate(r, bound->holds,
            absl::StrCat("component bound fails at S = ", Describe(bound->witness)))) {
    return absl::OkStatus();
  }
  ExtendNearFactor(r, r.g, near, f, a, true);
  return absl::OkStatus();
}

absl::Status CaseToughFF1(Run& r) {
  const int m = r.p.m;
  const int n = r.n();
  const int b = r.p.b > 0 ? r.p.b : 2 * m;
  const std::vector<int> f = r.p.f.empty() ? ConstantF(n, 2 * m) : r.p.f;
  r.rep.witness["f"] = f;
  r.rep.witness["b"] = b;
  if (!Require(r, static_cast<int>(f.size()) == n, "f needs one value per vertex") ||
      !Require(r, std::all_of(f.begin(), f.end(),
                              [&](int x) { return x >= 2 * m && x <= b; }),
               "need 2m <= f <= b")) {
    return absl::OkStatus();
  }
  json tough;
  auto ok = Tough(r.g, Rational(b * b), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, n >= b * b && *ok, "needs b^2-tough and order >= b^2")) {
    return absl::OkStatus();
  }
  const Multigraph host = Simplify(r.g);
  const int a = *std::min_element(f.begin(), f.end());
  ExtendNearFactor(r, host, NearFactor(host, f, r.p.oracle_budget), f, a, false);
  return absl::OkStatus();
}

void RegularPipeline(Run& r, int rr) {
  const Multigraph host = Simplify(r.g);
  const std::vector<int> f = ConstantF(r.n(), rr);
  ExtendNearFactor(r, host, NearFactor(host, f, r.p.oracle_budget), f, rr, false);
}

absl::Status CaseToughRR1(Run& r) {
  const int m = r.p.m;
  const int rr = r.p.r > 0 ? r.p.r : 2 * m;
  r.rep.witness["r"] = rr;
  if (!Require(r, rr >= 2 * m, "need r >= 2m")) return absl::OkStatus();
  const Rational t = std::max(Rational(1), Rational(2 * m, rr + 1 - 2 * m));
  json tough;
  auto ok = Tough(r.g, rr * t, &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, r.n() >= rr + 1 && *ok,
            absl::StrCat("needs ", ToString(rr * t), "-tough and order >= r + 1"))) {
    return absl::OkStatus();
  }
  RegularPipeline(r, rr);
  return absl::OkStatus();
}

absl::Status CaseTough2M(Run& r) {
  const int m = r.p.m;
  json tough;
  auto ok = Tough(r.g, Rational(4 * m * m), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, r.n() >= 2 * m + 1 && *ok, "needs 4m^2-tough and order >= 2m + 1")) {
    return absl::OkStatus();
  }
  RegularPipeline(r, 2 * m);
  return absl::OkStatus();
}

absl::Status CaseConnectedRR1(Run& r) {
  r.p.m = 1;
  const int rr = r.p.r > 0 ? r.p.r : 2;
  r.rep.witness["r"] = rr;
  if (!Require(r, rr >= 2, "need r >= 2")) return absl::OkStatus();
  json tough;
  auto ok = Tough(r.g, Rational(std::max(rr, 4)), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, r.n() >= rr + 1 && *ok, "needs max{r,4}-tough and order >= r + 1")) {
    return absl::OkStatus();
  }
  RegularPipeline(r, rr);
  return absl::OkStatus();
}

absl::Status CaseRegularFactor(Run& r) {
  const int n = r.n();
  const int rr = r.p.r > 0 ? r.p.r : 2;
  r.rep.witness["r"] = rr;
  json tough;
  auto ok = Tough(r.g, Rational(rr), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, n >= rr + 1 && *ok, "needs r-tough and order >= r + 1")) {
    return absl::OkStatus();
  }
  const Multigraph host = Simplify(r.g);
  const std::vector<int> f = ConstantF(n, rr);
  const bool even = (rr * n) % 2 == 0;
  std::optional<std::pair<EdgeSet, VertexId>> near;
  bool exhausted = true;
  FactorGoal goal;
  goal.allowed.assign(n, {rr});
  if (even) {
    FactorSearch s = SearchFactor(host, goal, r.p.oracle_budget);
    exhausted = s.exhausted;
    if (s.factor) near = std::make_pair(*s.factor, -1);
  } else {
    for (VertexId u = 0; u < n && !near; ++u) {
      goal.allowed[u] = {rr + 1};
      FactorSearch s = SearchFactor(host, goal, r.p.oracle_budget);
      exhausted &= s.exhausted;
      if (s.factor) near = std::make_pair(*s.factor, u);
      goal.allowed[u] = {rr};
    }
  }
  if (near) {
    r.rep.witness["factor"] = ToJson(near->first);
    if (near->second >= 0) r.rep.witness["raised"] = near->second;
    Pass(r, "oracle");
  } else if (exhausted) {
    Fail(r, "oracle", even ? "no r-factor" : "no r-factor with one vertex raised");
  } else {
    r.rep.conclusion = ConclusionStatus::kNotRun;
    r.rep.mode = "oracle";
    Note(r, "factor search budget exhausted");
  }
  return absl::OkStatus();
}

// --- Doubling and its corollaries ------------------------------------------

std::optional<EdgeSet> HamiltonCycle(const Multigraph& g, int64_t budget) {
  FactorGoal goal;
  goal.allowed.assign(g.num_vertices(), {2});
  goal.extra = FactorExtra::kConnected;
  return SearchFactor(g, goal, budget).factor;
}

absl::StatusOr<EdgeSet> RunDoubling(Run& r, const Multigraph& host,
                                    const EdgeSet& f, const Rational& c) {
  auto built = SolveTheorem48(host, f, c, InnerOptions(r));
  if (!built.ok()) return built.status();
  return built->h;
}

absl::Status CaseDoubling(Run& r) {
  const int n = r.n();
  r.p.m = 2;
  const std::optional<EdgeSet> f =
      r.p.factor ? r.p.factor : HamiltonCycle(r.g, r.p.oracle_budget);
  if (!Require(r, f.has_value() && ContainsAll(r.g, *f), "no factor F")) {
    return absl::OkStatus();
  }
  r.rep.witness["F"] = ToJson(*f);
  const Partition comps = FactorComponents(r.g, *f);
  int smallest = n;
  bool two_ec = true;
  const Multigraph fg = SpanningSubgraph(r.g, *f);
  for (const auto& block : comps.blocks) {
    smallest = std::min<int>(smallest, block.size());
    two_ec &= StructureChecks(InducedSubgraph(fg, VertexSet(block))).two_edge_connected;
  }
  const Rational c = r.p.c ? *r.p.c : Rational(smallest);
  r.rep.witness["c"] = ToString(c);
  if (!Require(r, c >= 5 && two_ec && Rational(smallest) >= c,
               "components of F must be 2-edge-connected with at least c >= 5 "
               "vertices")) {
    return absl::OkStatus();
  }
  auto bound = CheckComponentBound(r.g, (c - 4) / (4 * c - 4), Rational(1));
  if (!bound.ok()) return bound.status();
  if (!Gate(r, bound->holds,
            absl::StrCat("component bound fails at S = ", Describe(bound->witness)))) {
    return absl::OkStatus();
  }
  FactorGoal goal;
  goal.allowed = Window(DegreesIn(r.g, *f), 1);
  goal.required = *f;
  goal.extra = FactorExtra::kTwoEdgeConnected;
  ConcludeFactor(r, r.g, RunDoubling(r, r.g, *f, c), goal);
  return absl::OkStatus();
}

absl::Status CaseEvenFactor(Run& r) {
  const int n = r.n();
  const std::vector<int> f = r.p.f.empty() ? ConstantF(n, 2) : r.p.f;
  r.rep.witness["f"] = f;
  if (!Require(r, static_cast<int>(f.size()) == n, "f needs one value per vertex") ||
      !Require(r, IsSimple(r.g), "G is not simple") ||
      !Require(r, std::all_of(f.begin(), f.end(), [](int x) { return x >= 2; }),
               "need f >= 2")) {
    return absl::OkStatus();
  }
  std::vector<int> twice(n);
  for (VertexId v = 0; v < n; ++v) twice[v] = 2 * f[v];
  std::optional<EdgeSet> factor = r.p.factor;
  if (!factor) {
    FactorGoal g2;
    g2.allowed.resize(n);
    for (VertexId v = 0; v < n; ++v) g2.allowed[v] = {twice[v]};
    factor = SearchFactor(r.g, g2, r.p.oracle_budget).factor;
  }
  if (!Require(r, factor.has_value() && DegreesIn(r.g, *factor) == twice,
               "G has no 2f-factor")) {
    return absl::OkStatus();
  }
  r.rep.witness["F"] = ToJson(*factor);
  auto bound = CheckComponentBound(r.g, Rational(1, 16), Rational(1));
  if (!bound.ok()) return bound.status();
  if (!Gate(r, bound->holds,
            absl::StrCat("component bound fails at S = ", Describe(bound->witness)))) {
    return absl::OkStatus();
  }
  FactorGoal goal;
  goal.allowed = Pair(twice, 1);
  goal.required = *factor;
  goal.extra = FactorExtra::kTwoEdgeConnected;
  ConcludeFactor(r, r.g, RunDoubling(r, r.g, *factor, Rational(5)), goal);
  return absl::OkStatus();
}

absl::Status CaseGirthFive(Run& r) {
  const int n = r.n();
  const std::optional<EdgeSet> f =
      r.p.factor ? r.p.factor : HamiltonCycle(r.g, r.p.oracle_budget);
  if (!Require(r, IsSimple(r.g), "G is not simple") ||
      !Require(r, f.has_value() && ContainsAll(r.g, *f) &&
                      DegreesIn(r.g, *f) == ConstantF(n, 2),
               "no 2-factor F")) {
    return absl::OkStatus();
  }
  r.rep.witness["F"] = ToJson(*f);
  const StructureReport fs = StructureChecks(SpanningSubgraph(r.g, *f));
  if (!Require(r, fs.girth && *fs.girth >= 5, "F has girth below five")) {
    return absl::OkStatus();
  }
  auto bound = CheckComponentBound(r.g, Rational(1, 16), Rational(1));
  if (!bound.ok()) return bound.status();
  if (!Gate(r, bound->holds,
            absl::StrCat("component bound fails at S = ", Describe(bound->witness)))) {
    return absl::OkStatus();
  }
  FactorGoal goal;
  goal.allowed.assign(n, {2, 3});
  goal.required = *f;
  goal.extra = FactorExtra::kTwoConnected;
  ConcludeFactor(r, r.g, RunDoubling(r, r.g, *f, Rational(5)), goal);
  return absl::OkStatus();
}

absl::Status CaseToughGirth(Run& r) {
  const int n = r.n();
  const int rr = r.p.r > 0 ? r.p.r : 1;
  r.rep.witness["r"] = rr;
  const Multigraph host = Simplify(r.g);
  const StructureReport gs = StructureChecks(host);
  if (!Require(r, rr >= 1, "need r >= 1") ||
      !Require(r, !gs.girth || *gs.girth >= 5, "G has girth below five") ||
      !Require(r, n >= 2 * rr + 1, "order below 2r + 1")) {
    return absl::OkStatus();
  }
  json tough;
  auto ok = Tough(host, Rational(16), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, *ok, "G is not 16-tough")) return absl::OkStatus();
  FactorGoal goal;
  goal.allowed.assign(n, {2 * rr, 2 * rr + 1});
  goal.extra = FactorExtra::kTwoConnected;
  // A 2r-factor F, a 2-factor F0 of F, the 2-connected {2,3}-extension H of
  // F0, then H u F.
  FactorGoal regular;
  regular.allowed.assign(n, {2 * rr});
  const std::optional<EdgeSet> big = SearchFactor(host, regular, r.p.oracle_budget).factor;
  if (!big) {
    ConcludeFactor(r, host, absl::NotFoundError("no 2r-factor found"), goal);
    return absl::OkStatus();
  }
  const Multigraph fg = SpanningSubgraph(host, *big);
  std::optional<EdgeSet> two = HamiltonCycle(fg, r.p.oracle_budget);
  if (!two) {
    FactorGoal any2;
    any2.allowed.assign(n, {2});
    two = SearchFactor(fg, any2, r.p.oracle_budget).factor;
  }
  const bool usable = two && [&] {
    const StructureReport s = StructureChecks(SpanningSubgraph(host, *two));
    return s.girth && *s.girth >= 5;
  }();
  if (!usable) {
    ConcludeFactor(r, host, absl::NotFoundError("no 2-factor of girth five in F"),
                   goal);
    return absl::OkStatus();
  }
  r.rep.witness["F"] = ToJson(*big);
  r.rep.witness["F0"] = ToJson(*two);
  absl::StatusOr<EdgeSet> h = RunDoubling(r, host, *two, Rational(5));
  ConcludeFactor(r, host, h.ok() ? absl::StatusOr<EdgeSet>(h->Union(*big)) : h,
                 goal);
  return absl::OkStatus();
}

// --- Bipartite factors -------------------------------------------------------

absl::Status CaseBipartiteTc(Run& r) {
  const int m = r.p.m;
  const int n = r.n();
  if (!Gate(r, PackingTc(r.g, r.g.AllEdges(), 2 * m), "G is not 2m-tree-connected")) {
    return absl::OkStatus();
  }
  for (uint64_t mask = 0; mask < (uint64_t{1} << std::max(0, n - 1)); ++mask) {
    const EdgeSet cross = CrossEdges(r.g, mask);
    if (PackingTc(r.g, cross, m)) {
      r.rep.witness["side"] = ToJson(VertexSet::FromMask(mask));
      r.rep.witness["factor"] = ToJson(cross);
      Pass(r, "oracle");
      return absl::OkStatus();
    }
  }
  Fail(r, "oracle", "no bipartite tree-connected factor");
  return absl::OkStatus();
}

bool IsMatching(const Multigraph& g, const EdgeSet& mset) {
  std::vector<char> used(g.num_vertices(), 0);
  for (EdgeId id : mset) {
    if (!g.has_edge(id)) return false;
    const Edge& e = g.edge(id);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

// Any matching M of the given size with bi(F u M) >= target.
std::optional<EdgeSet> BruteMatching(const Multigraph& g, const EdgeSet& f,
                                     int size, int target) {
  std::vector<EdgeId> chosen;
  std::vector<char> used(g.num_vertices(), 0);
  std::optional<EdgeSet> found;
  std::function<void(int)> rec = [&](int from) {
    if (found) return;
    if (static_cast<int>(chosen.size()) == size) {
      const EdgeSet mset(chosen);
      auto bi = ComputeBipartiteIndex(SpanningSubgraph(g, f.Union(mset)));
      if (bi.ok() && bi->value >= target) found = mset;
      return;
    }
    for (int p = from; p < g.num_edges(); ++p) {
      const Edge& e = g.edges()[p];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      chosen.push_back(e.id);
      rec(p + 1);
      chosen.pop_back();
      used[e.u] = used[e.v] = 0;
    }
  };
  rec(0);
  return found;
}

absl::Status CaseMatchingIndex(Run& r) {
  const int n = r.n();
  const int k = r.p.k > 0 ? r.p.k : 2;
  r.rep.witness["k"] = k;
  const EdgeSet f = r.p.factor ? *r.p.factor : PackingUnion(r.g, 2 * k - 2);
  r.rep.witness["F"] = ToJson(f);
  if (!Require(r, ContainsAll(r.g, f), "F not in G") ||
      !Require(r, k <= 1 || PackingTc(r.g, f, 2 * k - 2),
               "F is not (2k-2)-tree-connected")) {
    return absl::OkStatus();
  }
  json tough;
  auto ok = Tough(r.g, Rational(4 * k - 3), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, n >= 4 * k - 2 && *ok, "needs (4k-3)-tough and order >= 4k - 2")) {
    return absl::OkStatus();
  }
  auto built = Lemma52Construction(r.g, f, k, false);
  if (built.ok() && built->outcome == Lemma52Result::Outcome::kFound) {
    r.rep.witness["construction"] = ToJson(*built);
    auto bi = ComputeBipartiteIndex(SpanningSubgraph(r.g, f.Union(built->matching)),
                                    EnumerationOrder::kDescending);
    if (!bi.ok()) return bi.status();
    if (IsMatching(r.g, built->matching) &&
        static_cast<int>(built->matching.size()) == k - 1 && bi->value >= k - 1) {
      Pass(r, "construction");
    } else {
      Fail(r, "construction",
           absl::StrCat("matching of size ", built->matching.size(),
                        " gives bipartite index ", bi->value));
    }
    return absl::OkStatus();
  }
  Note(r, built.ok() ? built->detail : std::string(built.status().message()));
  if (auto mset = BruteMatching(r.g, f, k - 1, k - 1)) {
    r.rep.witness["matching"] = ToJson(*mset);
    Pass(r, "oracle");
  } else {
    Fail(r, "oracle", "no matching of size k - 1 raises the bipartite index");
  }
  return absl::OkStatus();
}

// --- Verification-only pipelines -------------------------------------------

void ConcludeByOracle(Run& r, const FactorGoal& goal) {
  ConcludeFactor(r, r.g, absl::NotFoundError("decided by the factor oracle"), goal);
  if (r.rep.conclusion != ConclusionStatus::kFail) r.rep.detail.clear();
}

absl::Status CaseFFK(Run& r) {
  const int n = r.n();
  const int m = r.p.m;
  const int m0 = r.p.m0;
  const int k = r.p.k > 0 ? r.p.k : 1;
  const std::vector<int> f = r.p.f.empty() ? ConstantF(n, 6) : r.p.f;
  int b = r.p.b;
  if (b <= 0 && !f.empty()) b = *std::max_element(f.begin(), f.end()) + k;
  r.rep.witness["f"] = f;
  r.rep.witness["k"] = k;
  r.rep.witness["b"] = b;
  if (!Require(r, static_cast<int>(f.size()) == n, "f needs one value per vertex") ||
      !Require(r, std::all_of(f.begin(), f.end(),
                              [&](int x) {
                                return x >= 1 && 3 * m + 2 * m0 + 6 * k < x + k &&
                                       x + k <= b;
                              }),
               "need 3m + 2m0 + 6k < f + k <= b") ||
      !Require(r, m + m0 < k, "need m + m0 < k") ||
      !Require(r, ((k - 1) * std::accumulate(f.begin(), f.end(), 0)) % 2 == 0,
               "(k - 1) sum f is odd")) {
    return absl::OkStatus();
  }
  json tough;
  auto ok = Tough(r.g, Rational(4 * b * b), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, n >= 4 * b * b && *ok, "needs 4b^2-tough and order >= 4b^2")) {
    return absl::OkStatus();
  }
  FactorGoal goal;
  goal.allowed = Pair(f, k);
  goal.extra = m > 0 ? FactorExtra::kTreeConnected : FactorExtra::kNone;
  goal.m = std::max(m, 1);
  goal.complement_m = m0;
  ConcludeByOracle(r, goal);
  return absl::OkStatus();
}

absl::Status CaseAB(Run& r) {
  const int n = r.n();
  const int m = r.p.m;
  const int m0 = r.p.m0;
  const int a = r.p.a;
  const int b = r.p.b;
  r.rep.witness["a"] = a;
  r.rep.witness["b"] = b;
  if (!Require(r, a >= 1 && b >= 1 && (a * b * n) % 2 == 0, "ab|V| must be even") ||
      !Require(r, a + m + m0 < b && 5 * b < 6 * a - 3 * m - 2 * m0,
               "need a + m + m0 < b < (6a - 3m - 2m0)/5")) {
    return absl::OkStatus();
  }
  json tough;
  auto ok = Tough(r.g, Rational(std::max(2 * b, 256 * (b - a) * (b - a))), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, n >= 2 * b && *ok,
            "needs max{2b, 256(b-a)^2}-tough and order >= 2b")) {
    return absl::OkStatus();
  }
  FactorGoal goal;
  goal.allowed.assign(n, {a, b});
  goal.extra = m > 0 ? FactorExtra::kTreeConnected : FactorExtra::kNone;
  goal.m = std::max(m, 1);
  goal.complement_m = m0;
  ConcludeByOracle(r, goal);
  return absl::OkStatus();
}

absl::Status CaseConnectedAB(Run& r) {
  const int n = r.n();
  const int a = r.p.a;
  const int b = r.p.b;
  r.rep.witness["a"] = a;
  r.rep.witness["b"] = b;
  if (!Require(r, a >= 1 && (a * b * n) % 2 == 0, "ab|V| must be even") ||
      !Require(r, a < b && 5 * b <= 6 * a + 1, "need a < b <= (6a + 1)/5")) {
    return absl::OkStatus();
  }
  json tough;
  auto ok = Tough(r.g, Rational(std::max(2 * b, 64 * (b - a) * (b - a))), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, n >= b + 1 && *ok, "needs max{2b, 64(b-a)^2}-tough and order >= b + 1")) {
    return absl::OkStatus();
  }
  FactorGoal goal;
  goal.allowed.assign(n, {a, b});
  goal.extra = FactorExtra::kConnected;
  ConcludeByOracle(r, goal);
  return absl::OkStatus();
}

absl::Status CaseAA2(Run& r) {
  const int n = r.n();
  const int a = r.p.a > 0 ? r.p.a : 2;
  r.rep.witness["a"] = a;
  if (!Require(r, a >= 2 && (a * n) % 2 == 0, "need a >= 2 and a|V| even")) {
    return absl::OkStatus();
  }
  json tough;
  auto ok = Tough(r.g, Rational(std::max(2 * a, 64)), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, n >= a + 1 && *ok, "needs max{2a, 64}-tough and order >= a + 1")) {
    return absl::OkStatus();
  }
  FactorGoal goal;
  goal.allowed.assign(n, {a, a + 2});
  goal.extra = FactorExtra::kConnected;
  ConcludeByOracle(r, goal);
  return absl::OkStatus();
}

absl::Status CaseClosedTrail(Run& r) {
  const int n = r.n();
  const int a = r.p.a > 0 ? r.p.a : 1;
  r.rep.witness["a"] = a;
  if (!Require(r, a >= 1, "need a >= 1")) return absl::OkStatus();
  json tough;
  auto ok = Tough(r.g, Rational(std::max(4 * a, 64)), &tough);
  if (!ok.ok()) return ok.status();
  r.rep.witness["toughness"] = tough;
  if (!Gate(r, n >= 2 * a + 1 && *ok, "needs max{4a, 64}-tough and order >= 2a + 1")) {
    return absl::OkStatus();
  }
  FactorGoal goal;
  goal.allowed.assign(n, {2 * a, 2 * a + 2});
  goal.extra = FactorExtra::kConnected;
  ConcludeByOracle(r, goal);
  if (r.rep.conclusion == ConclusionStatus::kPass) {
    // A connected factor with even degrees is a spanning closed trail; each
    // vertex is met d/2 times.
    const EdgeSet h(r.rep.witness["factor"].get<std::vector<EdgeId>>());
    const StructureReport s = StructureChecks(SpanningSubgraph(r.g, h));
    if (!s.connected || !s.components_eulerian) {
      Fail(r, "oracle", "factor is not a spanning closed trail");
    } else {
      std::vector<int> visits = DegreesIn(r.g, h);
      for (int& x : visits) x /= 2;
      r.rep.witness["visits"] = visits;
    }
  }
  return absl::OkStatus();
}

using Handler = absl::Status (*)(Run&);

struct Entry {
  TheoremCase info;
  Handler handler;
};

absl::Status CaseLinearForestHalf(Run& r) { return CaseLinearForest(r, Rational(1, 2)); }
absl::Status CaseLinearForestQuarter(Run& r) {
  return CaseLinearForest(r, Rational(1, 4 * r.p.m));
}

const std::vector<Entry>& Entries() {
  static const auto* entries = new std::vector<Entry>{
      {{"L2.1", "adding an edge between tree-connected components keeps F sparse",
        "m, F (sparse), e", 16}, CaseAdd},
      {{"L2.2", "exchanging an edge of a minimal tree-connected Q for xy keeps F sparse",
        "m, F (sparse), xy, e", 16}, CaseExchange},
      {{"L2.3", "replacing F[X] by F0[X] keeps F sparse when F[X] is tree-connected",
        "m, F, F0 (sparse), X", 16}, CaseRegionSwap},
      {{"T2.4", "an optimal capped sparse extension has a saturated certificate set S",
        "m, F (sparse), h", 8}, CaseCertificate},
      {{"L3.1", "Omega(G\\[S,F]) <= Omega(G\\S) + m t_s - i_s", "m, F, S", 16},
       CaseLemma31},
      {{"L3.2", "Omega(G\\[S,F]) bounded through e_F(S) and xi", "m, F, S, c, xi", 16},
       CaseLemma32},
      {{"L3.3", "degree identity for a sparse H containing F", "m, H (sparse), F, S", 16},
       CaseLemma33},
      {{"T3.4", "extension under the e_A(S) condition", "m, F, h", 16}, CaseCondition34},
      {{"C3.5", "Delta(F) <= 2m extends to Delta(H) <= 2m + 1 under |S|/2 + m",
        "m, F (sparse)", 16}, CaseLinearForestHalf},
      {{"T3.6", "extension under the xi condition with the min term",
        "m, F, h, c, xi", 16}, CaseCondition36},
      {{"C3.7", "extension when tree-connected components of F are large",
        "m, F, h, c", 16}, CaseCondition37},
      {{"C3.8", "simple G, Delta(F) <= 2m, Omega(G\\S) <= |S|/(4m) + m",
        "m, F", 16}, CaseLinearForestQuarter},
      {{"T4.1", "one-vertex-fixed {d_F, d_F+1} tree-connected extension",
        "m, F, c, u", 16}, CaseOneVertexFixed},
      {{"C4.2", "near f-factor extends to a tree-connected {f, f+1}-factor",
        "m, a, f, F", 16}, CaseNearFactorExtension},
      {{"C4.3", "b^2-tough graphs have tree-connected {f, f+1}-factors",
        "m, b, f", 16}, CaseToughFF1},
      {{"C4.4", "rt-tough graphs have tree-connected {r, r+1}-factors", "m, r", 16},
       CaseToughRR1},
      {{"C4.5", "4m^2-tough graphs have tree-connected {2m, 2m+1}-factors", "m", 16},
       CaseTough2M},
      {{"C4.6", "max{r,4}-tough graphs have connected {r, r+1}-factors", "r", 16},
       CaseConnectedRR1},
      {{"C4.7", "r-tough graphs have an r-factor, one vertex raised when r|V| is odd",
        "r", 16}, CaseRegularFactor},
      {{"T4.8", "2-edge-connected {d_F, d_F+1} extension by doubling F", "F, c", 16},
       CaseDoubling},
      {{"C4.9", "2-edge-connected {2f, 2f+1}-factor containing a 2f-factor", "f", 16},
       CaseEvenFactor},
      {{"C4.10", "2-factor of girth five extends to a 2-connected {2,3}-factor", "F", 16},
       CaseGirthFive},
      {{"C4.11", "16-tough graphs of girth five have 2-connected {2r, 2r+1}-factors",
        "r", 16}, CaseToughGirth},
      {{"L5.1-verify", "2m-tree-connected graphs have m-tree-connected bipartite factors",
        "m", 16}, CaseBipartiteTc},
      {{"L5.2", "matching of size k-1 raising the bipartite index of F", "k, F", 12},
       CaseMatchingIndex},
      {{"T5.3-verify", "tree-connected {f, f+k}-factors with tree-connected complement",
        "m, m0, k, b, f", 16}, CaseFFK},
      {{"T6.1-verify", "tree-connected {a, b}-factors with tree-connected complement",
        "m, m0, a, b", 16}, CaseAB},
      {{"C6.2-verify", "connected {a, b}-factors", "a, b", 16}, CaseConnectedAB},
      {{"T6.4-verify", "connected {a, a+2}-factors", "a", 16}, CaseAA2},
      {{"C6.5-verify", "spanning closed trails meeting each vertex a or a+1 times",
        "a", 16}, CaseClosedTrail},
  };
  return *entries;
}

}  // namespace

std::string StatusName(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::kPass:
      return "pass";
    case HypothesisStatus::kFail:
      return "fail";
    case HypothesisStatus::kAssumed:
      return "assumed";
  }
  return "?";
}

std::string StatusName(ConclusionStatus s) {
  switch (s) {
    case ConclusionStatus::kPass:
      return "pass";
    case ConclusionStatus::kFail:
      return "fail";
    case ConclusionStatus::kNotRun:
      return "not-run";
  }
  return "?";
}

json ToJson(const TheoremReport& r) {
  json j = {{"id", r.id},
            {"instance", r.instance},
            {"hypothesis", StatusName(r.hypothesis)},
            {"conclusion", StatusName(r.conclusion)},
            {"mode", r.mode},
            {"witness", r.witness},
            {"red_alert", r.red_alert()}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.millis) j["millis"] = *r.millis;
  return j;
}

json ToJson(const CaseParams& p) {
  json j = {{"m", p.m}, {"seed", p.seed}};
  if (p.m0) j["m0"] = p.m0;
  if (p.c) j["c"] = ToString(*p.c);
  if (p.r) j["r"] = p.r;
  if (p.a) j["a"] = p.a;
  if (p.b) j["b"] = p.b;
  if (p.k) j["k"] = p.k;
  if (!p.f.empty()) j["f"] = p.f;
  if (p.factor) j["F"] = ToJson(*p.factor);
  if (p.other) j["other"] = ToJson(*p.other);
  if (!p.h.empty()) j["h"] = p.h;
  if (p.s) j["S"] = ToJson(*p.s);
  if (p.edge) j["edge"] = *p.edge;
  if (p.removed) j["removed"] = *p.removed;
  if (p.u) j["u"] = *p.u;
  if (p.xi) {
    std::vector<std::string> xi;
    for (const Rational& x : *p.xi) xi.push_back(ToString(x));
    j["xi"] = xi;
  }
  if (p.assume_hypothesis) j["assume_hypothesis"] = true;
  return j;
}

const std::vector<TheoremCase>& Registry() {
  static const auto* cases = [] {
    auto* out = new std::vector<TheoremCase>;
    for (const Entry& e : Entries()) out->push_back(e.info);
    return out;
  }();
  return *cases;
}

const std::vector<std::string>& InScopeIds() {
  static const auto* ids = new std::vector<std::string>{
      "L2.1",  "L2.2",        "L2.3",        "T2.4",        "L3.1",
      "L3.2",  "L3.3",        "T3.4",        "C3.5",        "T3.6",
      "C3.7",  "C3.8",        "T4.1",        "C4.2",        "C4.3",
      "C4.4",  "C4.5",        "C4.6",        "C4.7",        "T4.8",
      "C4.9",  "C4.10",       "C4.11",       "L5.1-verify", "L5.2",
      "T5.3-verify", "T6.1-verify", "C6.2-verify", "T6.4-verify",
      "C6.5-verify"};
  return *ids;
}

Lemma31Values EvaluateLemma31(const Multigraph& g, const EdgeSet& f,
                              const VertexSet& s, int m) {
  const int n = g.num_vertices();
  Lemma31Values out;
  const TcPartition part = TreeConnectedComponents(StripExcept(g, s, f), m);
  out.lhs = part.omega;
  out.omega_minus_s = Omega(DeleteVertices(g, s), m);
  const std::vector<char> in = s.Indicator(n);
  for (const auto& block : part.blocks.blocks) {
    if (std::all_of(block.begin(), block.end(), [&](VertexId v) { return in[v]; })) {
      ++out.t_s;
    }
  }
  const std::vector<int> idx = part.blocks.BlockIndex(n);
  for (EdgeId id : f) {
    const Edge& e = g.edge(id);
    if ((in[e.u] || in[e.v]) && idx[e.u] != idx[e.v]) ++out.i_s;
  }
  out.holds = out.lhs <= out.omega_minus_s + m * out.t_s - out.i_s;
  out.trivial_factor = f.empty();
  if (out.trivial_factor) {
    out.identity_holds =
        out.lhs == out.omega_minus_s + m * static_cast<int>(s.size());
  }
  return out;
}

Lemma32Values EvaluateLemma32(const Multigraph& g, const EdgeSet& f,
                              const VertexSet& s, int m, const XiParams& p) {
  const int n = g.num_vertices();
  Lemma32Values out;
  out.lhs = Rational(Omega(StripExcept(g, s, f), m));
  const Rational base(Omega(DeleteVertices(g, s), m));
  const std::vector<char> in = s.Indicator(n);
  int inside = 0;
  for (EdgeId id : f) {
    const Edge& e = g.edge(id);
    if (in[e.u] && in[e.v]) ++inside;
  }
  const std::vector<int> df = DegreesIn(g, f);
  Rational xi_sum(0);
  int deficit = 0;
  for (VertexId v : s) {
    xi_sum += p.xi[v];
    deficit += std::max(0, m - df[v]);
  }
  out.first_rhs = base + Rational(inside) / (p.c - 1) + xi_sum;
  out.second_rhs = base + inside + deficit;
  out.first_holds = out.lhs <= out.first_rhs;
  out.second_holds = out.lhs <= out.second_rhs;
  return out;
}

absl::StatusOr<Lemma33Values> EvaluateLemma33(const Multigraph& g,
                                              const EdgeSet& h,
                                              const EdgeSet& f,
                                              const VertexSet& s, int m) {
  const Multigraph hg = SpanningSubgraph(g, h);
  if (!IsSparse(hg, m)) return absl::InvalidArgumentError("H is not sparse");
  if (!f.IsSubsetOf(h)) return absl::InvalidArgumentError("F is not inside H");
  const std::vector<char> in = s.Indicator(g.num_vertices());
  Lemma33Values out;
  int inside = 0;
  for (EdgeId id : h.Minus(f)) {
    const Edge& e = g.edge(id);
    out.lhs += in[e.u] + in[e.v];
    if (in[e.u] && in[e.v]) ++inside;
  }
  out.rhs = Omega(StripExcept(hg, s, f), m) - Omega(hg, m) + inside;
  return out;
}

TheoremReport VerifyLemma31(const Multigraph& g, const EdgeSet& f,
                            const VertexSet& s, int m) {
  TheoremReport rep;
  rep.id = "L3.1";
  rep.hypothesis = HypothesisStatus::kPass;
  rep.mode = "oracle";
  const Lemma31Values v = EvaluateLemma31(g, f, s, m);
  rep.witness = {{"F", ToJson(f)},       {"S", ToJson(s)},
                 {"lhs", v.lhs},         {"omega_minus_s", v.omega_minus_s},
                 {"t_s", v.t_s},         {"i_s", v.i_s}};
  rep.conclusion = v.holds && v.identity_holds ? ConclusionStatus::kPass
                                               : ConclusionStatus::kFail;
  if (!v.holds) rep.detail = "inequality violated";
  if (!v.identity_holds) rep.detail = "trivial-factor identity violated";
  return rep;
}

TheoremReport VerifyLemma32(const Multigraph& g, const EdgeSet& f,
                            const VertexSet& s, int m, const XiParams& p) {
  TheoremReport rep;
  rep.id = "L3.2";
  rep.mode = "oracle";
  std::vector<std::string> xi;
  for (const Rational& x : p.xi) xi.push_back(ToString(x));
  rep.witness = {{"F", ToJson(f)}, {"S", ToJson(s)}, {"c", ToString(p.c)}, {"xi", xi}};
  // The second bound needs no xi; the first needs the component condition.
  const absl::Status xs = CheckXi(g, f, m, p);
  const Lemma32Values v = EvaluateLemma32(g, f, s, m, p);
  rep.witness["lhs"] = ToString(v.lhs);
  rep.witness["first_rhs"] = ToString(v.first_rhs);
  rep.witness["second_rhs"] = ToString(v.second_rhs);
  rep.hypothesis = HypothesisStatus::kPass;
  bool ok = v.second_holds;
  if (xs.ok()) {
    ok &= v.first_holds;
  } else {
    rep.detail = absl::StrCat("first bound not applicable: ", xs.message());
  }
  if (!v.second_holds) rep.detail = "second bound violated";
  if (xs.ok() && !v.first_holds) rep.detail = "first bound violated";
  rep.conclusion = ok ? ConclusionStatus::kPass : ConclusionStatus::kFail;
  return rep;
}

TheoremReport VerifyLemma33(const Multigraph& g, const EdgeSet& h,
                            const EdgeSet& f, const VertexSet& s, int m) {
  TheoremReport rep;
  rep.id = "L3.3";
  rep.mode = "oracle";
  rep.witness = {{"H", ToJson(h)}, {"F", ToJson(f)}, {"S", ToJson(s)}};
  absl::StatusOr<Lemma33Values> v = EvaluateLemma33(g, h, f, s, m);
  if (!v.ok()) {
    rep.hypothesis = HypothesisStatus::kFail;
    rep.conclusion = ConclusionStatus::kNotRun;
    rep.mode = "gate";
    rep.detail = std::string(v.status().message());
    return rep;
  }
  rep.hypothesis = HypothesisStatus::kPass;
  rep.witness["lhs"] = v->lhs;
  rep.witness["rhs"] = v->rhs;
  rep.conclusion =
      v->lhs == v->rhs ? ConclusionStatus::kPass : ConclusionStatus::kFail;
  if (v->lhs != v->rhs) rep.detail = "identity violated";
  return rep;
}

std::vector<Rational> MinimalXi(const Multigraph& g, const EdgeSet& f, int m,
                                const Rational& c) {
  const Multigraph fg = SpanningSubgraph(g, f);
  std::vector<Rational> xi(g.num_vertices(), Rational(0));
  for (const auto& block : TreeConnectedComponents(fg, m).blocks.blocks) {
    const VertexSet comp(block);
    const int size = static_cast<int>(comp.size());
    const Rational need = Rational(m) - Rational(m) / (c - 1) * (size - 1) -
                          Rational(BoundaryDegree(fg, comp), 2);
    if (need <= 0) continue;
    for (VertexId v : comp) xi[v] = need / size;
  }
  return xi;
}

absl::StatusOr<TheoremReport> VerifyEndToEnd(absl::string_view id,
                                             const Multigraph& g,
                                             const CaseParams& params,
                                             bool timing) {
  const Entry* entry = nullptr;
  for (const Entry& e : Entries()) {
    if (e.info.id == id) entry = &e;
  }
  if (entry == nullptr) {
    return absl::NotFoundError(absl::StrCat("unknown case '", id, "'"));
  }
  const int limit =
      params.order_limit > 0 ? params.order_limit : entry->info.max_order;
  if (g.num_vertices() > limit) {
    return absl::OutOfRangeError(absl::StrCat(
        id, " is limited to order ", limit, ", got ",
        g.num_vertices()));
  }
  if (params.m < 1 && id != "T5.3-verify" && id != "T6.1-verify") {
    return absl::InvalidArgumentError("m must be positive");
  }
  const auto start = std::chrono::steady_clock::now();
  Run run{g, params, Rng(params.seed), {}};
  run.rep.id = std::string(id);
  run.rep.instance = {{"graph", ToJson(g)}, {"params", ToJson(params)}};
  if (absl::Status s = entry->handler(run); !s.ok()) return s;
  if (timing) {
    run.rep.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return std::move(run.rep);
}

// --- Instance generation ---------------------------------------------------

const std::vector<std::string>& GeneratorNames() {
  static const auto* names = new std::vector<std::string>{
      "complete", "multipartite", "circulant", "nearregular", "planted2f", "random"};
  return *names;
}

namespace {

struct Shape {
  int lo = 3;
  int hi = 7;
  int max_m = 1;
  int min_cycle = 3;
};

Shape ShapeOf(absl::string_view id) {
  static const std::map<std::string, Shape, std::less<>> kShapes = {
      {"L2.1", {3, 8, 3}},        {"L2.2", {3, 8, 3}},
      {"L2.3", {3, 8, 3}},        {"T2.4", {2, 6, 2}},
      {"L3.1", {2, 7, 2}},        {"L3.2", {2, 7, 2}},
      {"L3.3", {2, 8, 2}},        {"T3.4", {2, 6, 2}},
      {"C3.5", {2, 7, 2}},        {"T3.6", {2, 6, 2}},
      {"C3.7", {2, 6, 2}},        {"C3.8", {2, 7, 2}},
      {"T4.1", {3, 8, 1}},        {"C4.2", {4, 8, 1}},
      {"C4.3", {4, 8, 1}},        {"C4.4", {3, 8, 1}},
      {"C4.5", {3, 8, 1}},        {"C4.6", {3, 8, 1}},
      {"C4.7", {2, 8, 1}},        {"T4.8", {5, 8, 1, 5}},
      {"C4.9", {5, 8, 1}},        {"C4.10", {5, 8, 1, 5}},
      {"C4.11", {3, 10, 1, 5}},   {"L5.1-verify", {2, 8, 1}},
      {"L5.2", {4, 8, 1}},        {"T5.3-verify", {8, 9, 1}},
      {"T6.1-verify", {8, 14, 1}}, {"C6.2-verify", {6, 8, 1}},
      {"T6.4-verify", {3, 8, 1}}, {"C6.5-verify", {3, 8, 1}},
  };
  auto it = kShapes.find(id);
  return it == kShapes.end() ? Shape{} : it->second;
}

Multigraph Family(absl::string_view generator, int n, int m, int min_cycle,
                  Rng& rng, EdgeSet* planted) {
  if (generator == "complete") return Complete(n);
  if (generator == "multipartite") {
    std::vector<int> parts;
    for (int left = n; left > 0;) {
      const int size = std::min(left, UniformInt(rng, 1, 3));
      parts.push_back(size);
      left -= size;
    }
    return CompleteMultipartite(parts);
  }
  if (generator == "circulant") {
    std::vector<int> jumps;
    for (int j = 1; j <= n / 2; ++j) {
      if (Bernoulli(rng, 0.6)) jumps.push_back(j);
    }
    if (jumps.empty()) jumps.push_back(1);
    return Circulant(n, jumps);
  }
  if (generator == "nearregular") {
    return RandomNearRegular(n, UniformInt(rng, std::min(2, n - 1), n - 1), rng);
  }
  if (generator == "planted2f") {
    Generated gen = PlantedTwoFactor(n, 0.3 + 0.7 * (rng() % 8) / 7.0,
                                     min_cycle, rng);
    *planted = gen.planted;
    return gen.graph;
  }
  // random
  if (m >= 2 && Bernoulli(rng, 0.5)) {
    return RandomMultigraph(n, UniformInt(rng, n, m * n * 2), rng);
  }
  return RandomGnp(n, 0.3 + 0.65 * (rng() % 14) / 13.0, rng);
}

}  // namespace

absl::StatusOr<Instance> MakeInstance(absl::string_view id,
                                      absl::string_view generator, Rng& rng) {
  const auto& names = GeneratorNames();
  if (std::find(names.begin(), names.end(), generator) == names.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown generator '", generator, "'"));
  }
  const auto& ids = InScopeIds();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    return absl::NotFoundError(absl::StrCat("unknown case '", id, "'"));
  }
  const Shape shape = ShapeOf(id);
  Instance inst;
  inst.family = std::string(generator);
  CaseParams& p = inst.params;
  p.seed = rng();
  p.m = UniformInt(rng, 1, shape.max_m);
  int n = UniformInt(rng, shape.lo, shape.hi);
  // Per-case numeric parameters; some fix the order.
  if (id == "C4.4" || id == "C4.6") p.r = UniformInt(rng, 2, 3);
  if (id == "C4.7") p.r = UniformInt(rng, 1, 3);
  if (id == "C4.2") {
    p.a = 2;
    n = std::max(n, 5);
  }
  if (id == "C4.3") p.b = 2;
  if (id == "C4.9") p.f.assign(n, 2);
  if (id == "L5.2") p.k = n >= 6 ? UniformInt(rng, 1, 2) : 1;
  if (id == "T5.3-verify") {
    p.m = 0;
    p.k = 1;
    p.b = 7;
    p.f.assign(n, 6);
  }
  if (id == "T6.1-verify") {
    p.m = 0;
    p.a = 6;
    p.b = 7;
    if (generator == "complete") n = 14;
  }
  if (id == "C6.2-verify") {
    if (Bernoulli(rng, 0.5)) {
      p.a = 4;
      p.b = 5;
    } else {
      p.a = 5;
      p.b = 6;
      n = std::max(n, 7);
    }
  }
  if (id == "T6.4-verify") {
    p.a = UniformInt(rng, 2, 4);
    if ((p.a * n) % 2) ++n;
    n = std::max(n, p.a + 1);
  }
  if (id == "C6.5-verify") {
    p.a = UniformInt(rng, 1, 2);
    n = std::max(n, 2 * p.a + 1);
  }
  EdgeSet planted;
  inst.graph = Family(generator, n, p.m, shape.min_cycle, rng, &planted);
  if (id == "C4.11" && generator != "planted2f" && Bernoulli(rng, 0.5)) {
    inst.graph = Petersen();
  }
  if (!planted.empty() &&
      (id == "T4.1" || id == "T4.8" || id == "C4.10" || id == "C3.7")) {
    p.factor = planted;
  }
  if (id == "C3.8" || id == "C4.2" || id == "C4.9" || id == "C4.10") {
    inst.graph = Simplify(inst.graph);
  }
  // Hypotheses that never hold at this scale are run in assumed mode on
  // graphs where the construction is meaningful.
  if (id == "T5.3-verify") p.assume_hypothesis = generator == "complete";
  if (id == "C4.11") {
    const StructureReport s = StructureChecks(inst.graph);
    p.assume_hypothesis = !s.girth || *s.girth >= 5;
  }
  return inst;
}

absl::StatusOr<SearchSummary> CounterexampleSearch(
    absl::string_view id, absl::string_view generator, int budget,
    uint64_t seed, int jobs,
    const std::function<void(const TheoremReport&)>& sink, bool keep_reports) {
  if (budget < 0) return absl::InvalidArgumentError("negative budget");
  {
    Rng probe(seed);
    if (auto s = MakeInstance(id, generator, probe); !s.ok()) return s.status();
  }
  SearchSummary summary;
  std::vector<std::optional<absl::StatusOr<TheoremReport>>> slots(budget);
  auto work = [&](int i) {
    // One independent stream per instance keeps results identical for any
    // number of workers.
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(i)};
    Rng rng(seq);
    absl::StatusOr<Instance> inst = MakeInstance(id, generator, rng);
    if (!inst.ok()) {
      slots[i] = absl::StatusOr<TheoremReport>(inst.status());
      return;
    }
    slots[i] = VerifyEndToEnd(id, inst->graph, inst->params);
    if (slots[i]->ok()) (*slots[i])->instance["family"] = inst->family;
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (int i = 0; i < budget; ++i) work(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (int i; (i = next.fetch_add(1)) < budget;) work(i);
      });
    }
    for (std::thread& t : pool) t.join();
  }
  for (auto& slot : slots) {
    if (!slot->ok()) return slot->status();
    const TheoremReport& rep = **slot;
    ++summary.instances;
    summary.red_alerts += rep.red_alert();
    summary.hypothesis_pass += rep.hypothesis == HypothesisStatus::kPass;
    summary.hypothesis_fail += rep.hypothesis == HypothesisStatus::kFail;
    summary.hypothesis_assumed += rep.hypothesis == HypothesisStatus::kAssumed;
    summary.conclusion_pass += rep.conclusion == ConclusionStatus::kPass;
    summary.conclusion_fail += rep.conclusion == ConclusionStatus::kFail;
    summary.not_run += rep.conclusion == ConclusionStatus::kNotRun;
    if (sink) sink(rep);
    if (keep_reports) summary.reports.push_back(rep);
  }
  return summary;
}

const std::vector<SuiteEntry>& StandardSuite() {
  static const auto* suite = [] {
    auto* out = new std::vector<SuiteEntry>;
    for (const std::string& id : InScopeIds()) {
      int per = 8;
      if (id == "T6.1-verify") per = 1;
      if (id == "T5.3-verify" || id == "C6.2-verify") per = 3;
      for (const std::string& gen : GeneratorNames()) {
        out->push_back({id, gen, per});
      }
    }
    return out;
  }();
  return *suite;
}

}  // namespace tcf
