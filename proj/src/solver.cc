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

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "tcf/io.h"
#include "tcf/oracles.h"
#include "tcf/sparsity.h"

namespace tcf {
namespace {

std::vector<int> DegreesIn(const Multigraph& g, const EdgeSet& h) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId id : h) {
    const Edge& e = g.edge(id);
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool SparseSet(const Multigraph& g, const EdgeSet& h, int m) {
  return IsSparse(SpanningSubgraph(g, h), m);
}

std::string Describe(const VertexSet& s) {
  return absl::StrCat("{", absl::StrJoin(s.members(), ","), "}");
}

absl::Status CheckOrder(int n, int limit) {
  if (n > limit || n > 62) {
    return absl::ResourceExhaustedError(
        absl::StrCat("subset enumeration limited to n <= ", limit, ", got ", n));
  }
  return absl::OkStatus();
}

// Local search over capped sparse supersets of F.
class LocalSearch {
 public:
  LocalSearch(const SolveInstance& inst, const SolverOptions& options)
      : inst_(inst),
        g_(inst.g),
        options_(options),
        caps_(inst.Caps()),
        target_(inst.m * (inst.g.num_vertices() - 1)) {}

  EdgeSet Run(uint64_t seed, std::vector<Move>& trace) {
    std::mt19937_64 rng(seed);
    EdgeSet h = Greedy(inst_.f, rng, trace);
    for (int round = 0; round <= options_.perturbations; ++round) {
      while (static_cast<int>(h.size()) < target_) {
        std::optional<EdgeSet> better = Improve(h, rng, trace);
        if (!better) break;
        h = std::move(*better);
      }
      if (static_cast<int>(h.size()) >= target_) break;
      if (round < options_.perturbations) h = Perturb(h, rng, 1 + round % 3, trace);
    }
    return h;
  }

 private:
  void Record(std::vector<Move>& trace, Move move) {
    if (options_.record_trace) trace.push_back(std::move(move));
  }

  EdgeSet Greedy(const EdgeSet& h, std::mt19937_64& rng,
                 std::vector<Move>& trace) {
    absl::StatusOr<EdgeSet> out =
        MaximalSparseExtension(g_, h, inst_.m, caps_, rng());
    if (!out.ok()) return h;
    const EdgeSet added = out->Minus(h);
    if (!added.empty()) {
      std::vector<VertexId> touched;
      for (EdgeId id : added) {
        touched.push_back(g_.edge(id).u);
        touched.push_back(g_.edge(id).v);
      }
      Record(trace, {MoveKind::kAdd, added.members(), {}, VertexSet(touched)});
    }
    return *std::move(out);
  }

  bool WithinCaps(const EdgeSet& h) const {
    const std::vector<int> deg = DegreesIn(g_, h);
    for (size_t v = 0; v < deg.size(); ++v) {
      if (deg[v] > caps_[v]) return false;
    }
    return true;
  }

  // Ways to bring a saturated vertex z below its cap: drop one non-F edge at
  // z, or rebuild the region of z without saturating it.
  struct Freeing {
    std::vector<EdgeId> removed;
    std::vector<EdgeId> added;
    MoveKind kind;
    VertexSet region;
  };

  std::vector<Freeing> FreeingOptions(const EdgeSet& h, VertexId z,
                                      const std::vector<VertexId>& block) {
    std::vector<Freeing> out;
    for (EdgeId id : h) {
      const Edge& e = g_.edge(id);
      if ((e.u == z || e.v == z) && !inst_.f.contains(id)) {
        out.push_back({{id}, {}, MoveKind::kExchange, VertexSet{e.u, e.v}});
      }
    }
    if (block.size() >= 2) {
      const VertexSet x(block);
      auto alt = FindRegionAlternative(inst_, h, x, z, options_.region_budget);
      if (alt.ok() && alt->has_value()) {
        const std::vector<char> in = x.Indicator(g_.num_vertices());
        Freeing swap{{}, (*alt)->members(), MoveKind::kRegionSwap, x};
        for (EdgeId id : h) {
          const Edge& e = g_.edge(id);
          if (in[e.u] && in[e.v]) swap.removed.push_back(id);
        }
        out.push_back(std::move(swap));
      }
    }
    return out;
  }

  std::optional<EdgeSet> Improve(const EdgeSet& h, std::mt19937_64& rng,
                                 std::vector<Move>& trace) {
    const Multigraph hg = SpanningSubgraph(g_, h);
    const TcPartition part = TreeConnectedComponents(hg, inst_.m);
    const std::vector<int> block = part.blocks.BlockIndex(g_.num_vertices());
    const std::vector<int> deg = DegreesIn(g_, h);
    std::vector<EdgeId> candidates;
    for (const Edge& e : g_.edges()) {
      if (!h.contains(e.id) && block[e.u] != block[e.v]) {
        candidates.push_back(e.id);
      }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (EdgeId id : candidates) {
      const Edge& e = g_.edge(id);
      const bool su = deg[e.u] >= caps_[e.u];
      const bool sv = deg[e.v] >= caps_[e.v];
      if (!su && !sv) {
        EdgeSet out = h;
        out.insert(id);
        Record(trace, {MoveKind::kAdd, {id}, {}, VertexSet{e.u, e.v}});
        return out;
      }
      const Freeing none{{}, {}, MoveKind::kAdd, {}};
      const std::vector<Freeing> fu =
          su ? FreeingOptions(h, e.u, part.blocks.blocks[block[e.u]])
             : std::vector<Freeing>{none};
      const std::vector<Freeing> fv =
          sv ? FreeingOptions(h, e.v, part.blocks.blocks[block[e.v]])
             : std::vector<Freeing>{none};
      for (const Freeing& a : fu) {
        for (const Freeing& b : fv) {
          EdgeSet next = h;
          for (const Freeing* opt : {&a, &b}) {
            for (EdgeId r : opt->removed) next.erase(r);
            for (EdgeId r : opt->added) next.insert(r);
          }
          next.insert(id);
          if (!WithinCaps(next) || !SparseSet(g_, next, inst_.m)) continue;
          std::vector<Move> local;
          for (const Freeing* opt : {&a, &b}) {
            if (opt->removed.empty() && opt->added.empty()) continue;
            local.push_back({opt->kind, opt->added, opt->removed, opt->region});
          }
          local.push_back({MoveKind::kAdd, {id}, {}, VertexSet{e.u, e.v}});
          EdgeSet grown = Greedy(next, rng, local);
          if (grown.size() <= h.size()) continue;
          for (Move& mv : local) Record(trace, std::move(mv));
          return grown;
        }
      }
    }
    return std::nullopt;
  }

  // Random size-preserving swaps inside the feasible region.
  EdgeSet Perturb(const EdgeSet& h, std::mt19937_64& rng, int steps,
                  std::vector<Move>& trace) {
    EdgeSet cur = h;
    const std::vector<EdgeId> removable = h.Minus(inst_.f).members();
    if (removable.empty()) return cur;
    for (int attempt = 0, done = 0; attempt < 60 * steps && done < steps;
         ++attempt) {
      const std::vector<EdgeId> pool = cur.Minus(inst_.f).members();
      if (pool.empty()) break;
      const EdgeId r = pool[rng() % pool.size()];
      const EdgeId a = g_.edges()[rng() % g_.num_edges()].id;
      if (cur.contains(a)) continue;
      EdgeSet next = cur;
      next.erase(r);
      next.insert(a);
      if (!WithinCaps(next) || !SparseSet(g_, next, inst_.m)) continue;
      const Edge& ea = g_.edge(a);
      const Edge& er = g_.edge(r);
      Record(trace, {MoveKind::kExchange, {a}, {r},
                     VertexSet{ea.u, ea.v, er.u, er.v}});
      cur = std::move(next);
      ++done;
    }
    return cur;
  }

  const SolveInstance& inst_;
  const Multigraph& g_;
  const SolverOptions& options_;
  const std::vector<int> caps_;
  const int target_;
};

}  // namespace

int TotalExcess(const Multigraph& host, const EdgeSet& h,
                const std::vector<int>& g) {
  const std::vector<int> deg = DegreesIn(host, h);
  int total = 0;
  for (size_t v = 0; v < deg.size(); ++v) total += std::max(0, deg[v] - g[v]);
  return total;
}

std::vector<int> SolveInstance::Caps() const {
  std::vector<int> caps = DegreesIn(g, f);
  for (size_t v = 0; v < caps.size() && v < h.size(); ++v) caps[v] += h[v];
  return caps;
}

std::string OptimalityName(Optimality o) {
  switch (o) {
    case Optimality::kProved:
      return "proved";
    case Optimality::kLocal:
      return "local";
    case Optimality::kUnknown:
      return "unknown";
  }
  return "unknown";
}

absl::StatusOr<SolveResult> SolveExtension(const SolveInstance& inst,
                                           const SolverOptions& options) {
  const Multigraph& g = inst.g;
  const int n = g.num_vertices();
  if (inst.m < 1) return absl::InvalidArgumentError("m must be positive");
  if (static_cast<int>(inst.h.size()) != n) {
    return absl::InvalidArgumentError("h must have one entry per vertex");
  }
  for (int x : inst.h) {
    if (x < 0) return absl::InvalidArgumentError("h must be nonnegative");
  }
  for (EdgeId id : inst.f) {
    if (!g.has_edge(id)) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id, " of F is not in G"));
    }
  }
  const SparsityVerdict verdict = CheckSparse(SpanningSubgraph(g, inst.f), inst.m);
  if (!verdict.sparse) {
    return absl::InvalidArgumentError(
        absl::StrCat("F is not ", inst.m, "-sparse; violating set ",
                     Describe(verdict.violating_set)));
  }
  SolveResult best;
  best.seed = options.seed;
  if (n == 0) {
    best.optimal = Optimality::kProved;
    return best;
  }
  const int target = inst.m * (n - 1);
  LocalSearch search(inst, options);
  bool have = false;
  for (int i = 0; i < std::max(1, options.restarts); ++i) {
    const uint64_t seed = options.seed + uint64_t{0x9E3779B97F4A7C15} * i;
    std::vector<Move> trace;
    EdgeSet h = search.Run(seed, trace);
    if (!have || h.size() > best.h.size()) {
      have = true;
      best.h = std::move(h);
      best.seed = seed;
      best.trace = std::move(trace);
    }
    best.restarts_used = i + 1;
    if (static_cast<int>(best.h.size()) == target) break;
  }
  // Soundness is unconditional.
  const std::vector<int> caps = inst.Caps();
  if (!inst.f.IsSubsetOf(best.h) || TotalExcess(g, best.h, caps) != 0 ||
      !SparseSet(g, best.h, inst.m)) {
    return absl::InternalError("solver produced an infeasible factor");
  }
  best.omega = Omega(SpanningSubgraph(g, best.h), inst.m);
  if (best.omega == inst.m) {
    best.optimal = Optimality::kProved;
  } else if (n <= options.exhaustive_limit && n <= kSubsetOracleLimit) {
    absl::StatusOr<int> max = MaxCappedSparseSuperset(g, inst.f, caps, inst.m);
    if (!max.ok()) return max.status();
    best.optimal = *max == static_cast<int>(best.h.size()) ? Optimality::kProved
                                                           : Optimality::kLocal;
  } else {
    best.optimal = Optimality::kLocal;
  }
  return best;
}

absl::StatusOr<std::optional<EdgeSet>> FindRegionAlternative(
    const SolveInstance& inst, const EdgeSet& h, const VertexSet& x,
    VertexId free_vertex, int64_t budget) {
  const Multigraph& g = inst.g;
  const int k = static_cast<int>(x.size());
  const int m = inst.m;
  if (k == 0) return absl::InvalidArgumentError("empty region");
  if (k > kSubsetOracleLimit) {
    return absl::ResourceExhaustedError("region too large for exhaustive search");
  }
  std::vector<int> local(g.num_vertices(), -1);
  for (int i = 0; i < k; ++i) local[x.members()[i]] = i;
  const std::vector<int> caps = inst.Caps();
  const std::vector<int> deg = DegreesIn(g, h);
  std::vector<int> inside(k, 0);
  for (EdgeId id : h) {
    const Edge& e = g.edge(id);
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      ++inside[local[e.u]];
      ++inside[local[e.v]];
    }
  }
  std::vector<int> limit(k);
  for (int i = 0; i < k; ++i) {
    const VertexId v = x.members()[i];
    limit[i] = caps[v] - (deg[v] - inside[i]) - (v == free_vertex ? 1 : 0);
  }
  std::vector<EdgeId> required;
  std::vector<EdgeId> candidates;
  for (const Edge& e : g.edges()) {
    if (local[e.u] < 0 || local[e.v] < 0) continue;
    (inst.f.contains(e.id) ? required : candidates).push_back(e.id);
  }
  const int need = m * (k - 1) - static_cast<int>(required.size());
  if (need < 0) return std::optional<EdgeSet>();
  SubsetEdgeCounter counter(k, m);
  std::vector<int> d(k, 0);
  for (EdgeId id : required) {
    const Edge& e = g.edge(id);
    if (!counter.TryAdd(local[e.u], local[e.v])) return std::optional<EdgeSet>();
    ++d[local[e.u]];
    ++d[local[e.v]];
  }
  int slack = 0;
  for (int i = 0; i < k; ++i) {
    if (d[i] > limit[i]) return std::optional<EdgeSet>();
    slack += limit[i] - d[i];
  }
  std::vector<EdgeId> chosen;
  int64_t nodes = 0;
  bool aborted = false;
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    const int missing = need - static_cast<int>(chosen.size());
    if (missing == 0) return true;
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    if (static_cast<int>(candidates.size() - i) < missing || slack < 2 * missing) {
      return false;
    }
    const Edge& e = g.edge(candidates[i]);
    const int a = local[e.u];
    const int b = local[e.v];
    if (d[a] < limit[a] && d[b] < limit[b] && counter.TryAdd(a, b)) {
      ++d[a];
      ++d[b];
      slack -= 2;
      chosen.push_back(e.id);
      if (rec(i + 1)) return true;
      chosen.pop_back();
      slack += 2;
      --d[a];
      --d[b];
      counter.Remove(a, b);
      if (aborted) return false;
    }
    return rec(i + 1);
  };
  if (!rec(0)) {
    if (aborted) {
      return absl::ResourceExhaustedError("region search budget exhausted");
    }
    return std::optional<EdgeSet>();
  }
  chosen.insert(chosen.end(), required.begin(), required.end());
  return std::optional<EdgeSet>(EdgeSet(std::move(chosen)));
}

absl::StatusOr<Certificate> ExtractCertificate(const SolveInstance& inst,
                                               const EdgeSet& h,
                                               int64_t budget) {
  const Multigraph& g = inst.g;
  const int n = g.num_vertices();
  const Multigraph hg = SpanningSubgraph(g, h);
  Certificate cert;
  std::vector<char> in_s(n, 0);
  cert.chain.push_back(VertexSet());
  while (true) {
    const VertexSet s = cert.chain.back();
    const TcPartition part =
        TreeConnectedComponents(StripExcept(hg, s, inst.f), inst.m);
    const std::vector<int> block = part.blocks.BlockIndex(n);
    std::vector<VertexId> next = s.members();
    for (VertexId v = 0; v < n; ++v) {
      if (in_s[v]) continue;
      const VertexSet x(part.blocks.blocks[block[v]]);
      auto alt = FindRegionAlternative(inst, h, x, v, budget);
      if (!alt.ok()) return alt.status();
      if (!alt->has_value()) next.push_back(v);
    }
    if (next.size() == s.size()) break;
    for (VertexId v : next) in_s[v] = 1;
    cert.chain.push_back(VertexSet(std::move(next)));
  }
  cert.s = cert.chain.back();
  cert.omega_g = Omega(StripExcept(g, cert.s, inst.f), inst.m);
  cert.omega_h = Omega(StripExcept(hg, cert.s, inst.f), inst.m);
  cert.condition1 = cert.omega_g == cert.omega_h;
  const std::vector<int> caps = inst.Caps();
  const std::vector<int> deg = DegreesIn(g, h);
  cert.condition2 = true;
  for (VertexId v : cert.s) cert.condition2 &= deg[v] == caps[v];
  return cert;
}

absl::StatusOr<ConditionReport> CheckCondition34(
    const Multigraph& g, const EdgeSet& f, const std::vector<int>& h, int m,
    CheckMode mode, int exact_limit, int limit) {
  const int n = g.num_vertices();
  if (auto s = CheckOrder(n, limit); !s.ok()) return s;
  if (mode == CheckMode::kExact && n > std::min(exact_limit, kSubsetOracleLimit)) {
    return absl::ResourceExhaustedError(
        absl::StrCat("exact mode limited to n <= ", exact_limit));
  }
  const std::vector<int> block =
      TreeConnectedComponents(SpanningSubgraph(g, f), m).blocks.BlockIndex(n);
  ConditionReport report;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ++report.subsets;
    const VertexSet s = VertexSet::FromMask(mask);
    int sum_h = 0;
    for (VertexId v : s) sum_h += h[v];
    int max_a = 0;
    if (mode == CheckMode::kExact) {
      std::vector<EdgeId> joining;
      for (const Edge& e : g.edges()) {
        if ((mask >> e.u & 1) && (mask >> e.v & 1) && block[e.u] != block[e.v]) {
          joining.push_back(e.id);
        }
      }
      auto best = MaxCappedSparseSuperset(
          SpanningSubgraph(g, EdgeSet(std::move(joining))), EdgeSet(), h, m);
      if (!best.ok()) return best.status();
      max_a = *best;
    } else {
      const int inner = s.empty() ? 0 : Omega(InducedSubgraph(g, s), m);
      max_a = std::min(sum_h / 2, m * static_cast<int>(s.size()) - inner);
    }
    const Rational lhs(Omega(StripExcept(g, s, f), m));
    const Rational rhs(sum_h + m - max_a);
    if (lhs > rhs) {
      report.holds = false;
      report.witness = s;
      report.lhs = lhs;
      report.rhs = rhs;
      report.detail = absl::StrCat("fails at S = ", Describe(s));
      return report;
    }
  }
  return report;
}

absl::Status CheckXi(const Multigraph& g, const EdgeSet& f, int m,
                     const XiParams& p) {
  const int n = g.num_vertices();
  if (static_cast<int>(p.xi.size()) != n) {
    return absl::InvalidArgumentError("xi must have one entry per vertex");
  }
  for (const Rational& x : p.xi) {
    if (x < 0 || x > m) return absl::InvalidArgumentError("xi outside [0, m]");
  }
  if (p.c <= 1) return absl::InvalidArgumentError("c must exceed 1");
  const Multigraph fg = SpanningSubgraph(g, f);
  const TcPartition part = TreeConnectedComponents(fg, m);
  for (const auto& block : part.blocks.blocks) {
    Rational sum(0);
    for (VertexId v : block) sum += p.xi[v];
    const VertexSet c(block);
    const Rational need = Rational(m) -
                          Rational(m) / (p.c - 1) * (static_cast<int>(c.size()) - 1) -
                          Rational(BoundaryDegree(fg, c), 2);
    if (sum < need) {
      return absl::FailedPreconditionError(absl::StrCat(
          "xi too small on component ", Describe(c), ": ", ToString(sum),
          " < ", ToString(need)));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<ConditionReport> CheckCondition36PerSet(
    const Multigraph& g, const EdgeSet& f, const std::vector<int>& h, int m,
    const std::function<XiParams(const VertexSet&)>& params, int limit) {
  const int n = g.num_vertices();
  if (auto s = CheckOrder(n, limit); !s.ok()) return s;
  ConditionReport report;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ++report.subsets;
    const VertexSet s = VertexSet::FromMask(mask);
    const XiParams p = params(s);
    if (p.c < 2) return absl::InvalidArgumentError("c must be at least 2");
    if (absl::Status xs = CheckXi(g, f, m, p); !xs.ok()) {
      if (xs.code() != absl::StatusCode::kFailedPrecondition) return xs;
      report.holds = false;
      report.witness = s;
      report.detail = std::string(xs.message());
      return report;
    }
    const Rational inv = Rational(1) / (p.c - 1);
    int sum_h = 0;
    Rational sum(0);
    for (VertexId v : s) {
      sum_h += h[v];
      sum += Rational(h[v]) - m * inv - p.xi[v];
    }
    const int inner = s.empty() ? 0 : Omega(InducedSubgraph(g, s), m);
    const int cap = std::min(sum_h / 2, m * static_cast<int>(s.size()) - inner);
    const Rational rhs = sum + m + 1 + inner * inv - (p.c - 2) * inv * cap;
    const Rational lhs(Omega(DeleteVertices(g, s), m));
    if (!(lhs < rhs)) {
      report.holds = false;
      report.witness = s;
      report.lhs = lhs;
      report.rhs = rhs;
      report.detail = absl::StrCat("fails at S = ", Describe(s));
      return report;
    }
  }
  return report;
}

absl::StatusOr<ConditionReport> CheckCondition36(const Multigraph& g,
                                                 const EdgeSet& f,
                                                 const std::vector<int>& h,
                                                 int m, const XiParams& p,
                                                 int limit) {
  return CheckCondition36PerSet(
      g, f, h, m, [&](const VertexSet&) { return p; }, limit);
}

absl::StatusOr<ConditionReport> CheckCondition37(const Multigraph& g,
                                                 const std::vector<int>& h,
                                                 int m, const Rational& c,
                                                 int limit) {
  const int n = g.num_vertices();
  if (auto s = CheckOrder(n, limit); !s.ok()) return s;
  if (c <= 1) return absl::InvalidArgumentError("c must exceed 1");
  const Rational inv = Rational(1) / (c - 1);
  const Rational weight = c / (2 * c - 2);
  ConditionReport report;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ++report.subsets;
    const VertexSet s = VertexSet::FromMask(mask);
    Rational rhs(m + 1);
    for (VertexId v : s) rhs += weight * h[v] - m * inv;
    if (!s.empty()) rhs += Omega(InducedSubgraph(g, s), m) * inv;
    const Rational lhs(Omega(DeleteVertices(g, s), m));
    if (!(lhs < rhs)) {
      report.holds = false;
      report.witness = s;
      report.lhs = lhs;
      report.rhs = rhs;
      report.detail = absl::StrCat("fails at S = ", Describe(s));
      return report;
    }
  }
  return report;
}

absl::Status CheckLargeComponents(const Multigraph& g, const EdgeSet& f, int m,
                                  const Rational& c) {
  if (c < 2 * m + 1) {
    return absl::FailedPreconditionError(
        absl::StrCat("c = ", ToString(c), " is below 2m + 1"));
  }
  const Multigraph fg = SpanningSubgraph(g, f);
  for (const auto& block : TreeConnectedComponents(fg, m).blocks.blocks) {
    const VertexSet comp(block);
    const Rational lhs = Rational(static_cast<int>(comp.size())) +
                         (c - 1) / (2 * m) * BoundaryDegree(fg, comp);
    if (lhs < c) {
      return absl::FailedPreconditionError(
          absl::StrCat("component ", Describe(comp), " is too small"));
    }
  }
  return absl::OkStatus();
}

std::vector<Rational> DefaultXi(const Multigraph& g, const EdgeSet& f, int m) {
  const int n = g.num_vertices();
  const Multigraph fg = SpanningSubgraph(g, f);
  const Partition p = TreeConnectedComponents(fg, m).blocks;
  const std::vector<int> block = p.BlockIndex(n);
  std::vector<int> leaving(n, 0);
  for (const Edge& e : fg.edges()) {
    if (block[e.u] != block[e.v]) {
      ++leaving[e.u];
      ++leaving[e.v];
    }
  }
  std::vector<Rational> xi(n);
  for (VertexId v = 0; v < n; ++v) {
    const int size = static_cast<int>(p.blocks[block[v]].size());
    const Rational raw = Rational(m) - Rational(size - 1, 2) - Rational(leaving[v], 2);
    xi[v] = raw > 0 ? raw / size : Rational(0);
  }
  return xi;
}

absl::StatusOr<ConditionReport> CheckOmegaBound(const Multigraph& g, int m,
                                                const Rational& slope,
                                                const Rational& offset,
                                                int limit) {
  const int n = g.num_vertices();
  if (auto s = CheckOrder(n, limit); !s.ok()) return s;
  ConditionReport report;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ++report.subsets;
    const VertexSet s = VertexSet::FromMask(mask);
    const Rational lhs(Omega(DeleteVertices(g, s), m));
    const Rational rhs = slope * static_cast<int>(s.size()) + offset;
    if (lhs > rhs) {
      report.holds = false;
      report.witness = s;
      report.lhs = lhs;
      report.rhs = rhs;
      report.detail = absl::StrCat("fails at S = ", Describe(s));
      return report;
    }
  }
  return report;
}

absl::StatusOr<Extension> ExtendFactor(const Multigraph& g, const EdgeSet& f,
                                       const std::vector<int>& h, int m,
                                       const SolverOptions& options) {
  for (EdgeId id : f) {
    if (!g.has_edge(id)) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id, " of F is not in G"));
    }
  }
  Extension out;
  out.sparse_f = SparsifyTcComponents(SpanningSubgraph(g, f), m);
  SolveInstance inst{g, out.sparse_f, h, m};
  absl::StatusOr<SolveResult> solved = SolveExtension(inst, options);
  if (!solved.ok()) return solved.status();
  out.solve = *std::move(solved);
  out.h = out.solve.h.Union(f);
  return out;
}

absl::StatusOr<Theorem41Result> SolveTheorem41(const Multigraph& g,
                                               const EdgeSet& f, int m,
                                               const Rational& c, VertexId u,
                                               const PipelineOptions& options) {
  const int n = g.num_vertices();
  if (m < 1) return absl::InvalidArgumentError("m must be positive");
  if (u < 0 || u >= n) return absl::OutOfRangeError("vertex u out of range");
  for (EdgeId id : f) {
    if (!g.has_edge(id)) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id, " of F is not in G"));
    }
  }
  if (options.check_hypothesis) {
    if (absl::Status s = CheckLargeComponents(g, f, m, c); !s.ok()) return s;
    const Rational slope = (c - 2 * m) / (2 * m * (c - 1));
    auto bound = CheckComponentBound(g, slope, Rational(1),
                                     options.hypothesis_limit);
    if (!bound.ok()) return bound.status();
    if (!bound->holds) {
      return absl::FailedPreconditionError(
          absl::StrCat("component bound fails at S = ", Describe(bound->witness)));
    }
  }
  // m copies on one vertex set; F lives in copy 0 only.
  const Multigraph copies = UnionCopies(g, m);
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (const Edge& e : copies.edges()) {
    const EdgeId base = copies.edge_origin(e.id);
    if (e.id != base && f.contains(base)) continue;
    edges.push_back(e);
    origin.push_back(base);
  }
  Theorem41Result result;
  absl::StatusOr<Multigraph> host =
      Multigraph::FromEdges(n, std::move(edges), std::move(origin));
  if (!host.ok()) return host.status();
  result.host = *std::move(host);
  std::vector<int> h(n, 1);
  h[u] = 0;
  absl::StatusOr<Extension> ext =
      ExtendFactor(result.host, f, h, m, options.solver);
  if (!ext.ok()) return ext.status();
  result.extension = *std::move(ext);
  if (result.extension.solve.omega != m) {
    return absl::AbortedError(absl::StrCat(
        "solver stopped at Omega = ", result.extension.solve.omega,
        " (", OptimalityName(result.extension.solve.optimal),
        "); retry with another seed"));
  }
  std::vector<EdgeId> pulled;
  for (EdgeId id : result.extension.h) {
    pulled.push_back(result.host.edge_origin(id));
  }
  std::sort(pulled.begin(), pulled.end());
  if (std::adjacent_find(pulled.begin(), pulled.end()) != pulled.end()) {
    return absl::InternalError("factor uses two copies of one edge");
  }
  result.h = EdgeSet(std::move(pulled));
  return result;
}

absl::StatusOr<Theorem48Result> SolveTheorem48(const Multigraph& g,
                                               const EdgeSet& f,
                                               const Rational& c,
                                               const PipelineOptions& options) {
  const int n = g.num_vertices();
  if (n == 0) return absl::InvalidArgumentError("null graph");
  if (options.check_hypothesis) {
    if (c < 5) return absl::FailedPreconditionError("c must be at least 5");
    const Multigraph fg = SpanningSubgraph(g, f);
    for (const auto& block : FactorComponents(g, f).blocks) {
      const VertexSet comp(block);
      if (Rational(static_cast<int>(comp.size())) < c) {
        return absl::FailedPreconditionError(
            absl::StrCat("component ", Describe(comp), " has fewer than c vertices"));
      }
      if (!StructureChecks(InducedSubgraph(fg, comp)).two_edge_connected) {
        return absl::FailedPreconditionError(absl::StrCat(
            "component ", Describe(comp), " is not 2-edge-connected"));
      }
    }
    auto bound = CheckComponentBound(g, (c - 4) / (4 * c - 4), Rational(1),
                                     options.hypothesis_limit);
    if (!bound.ok()) return bound.status();
    if (!bound->holds) {
      return absl::FailedPreconditionError(
          absl::StrCat("component bound fails at S = ", Describe(bound->witness)));
    }
  }
  Theorem48Result result;
  result.doubled = DuplicateEdges(g, f);
  PipelineOptions inner = options;
  inner.check_hypothesis = false;
  absl::StatusOr<Theorem41Result> solved = SolveTheorem41(
      result.doubled.graph, f.Union(result.doubled.twins), 2, c, 0, inner);
  if (!solved.ok()) return solved.status();
  result.inner = *std::move(solved);
  result.h = result.inner.h.Minus(result.doubled.twins);
  return result;
}

nlohmann::json ToJson(const SolveResult& r) {
  return {{"edges", ToJson(r.h)},
          {"omega", r.omega},
          {"optimal", OptimalityName(r.optimal)},
          {"seed", r.seed},
          {"restarts", r.restarts_used},
          {"moves_trace", TraceToJson(r.trace)}};
}

nlohmann::json ToJson(const Certificate& c) {
  nlohmann::json chain = nlohmann::json::array();
  for (const VertexSet& s : c.chain) chain.push_back(ToJson(s));
  return {{"S", ToJson(c.s)},
          {"chain", chain},
          {"omega_g", c.omega_g},
          {"omega_h", c.omega_h},
          {"condition1", c.condition1},
          {"condition2", c.condition2}};
}

nlohmann::json ToJson(const ConditionReport& r) {
  nlohmann::json j = {{"holds", r.holds}, {"subsets", r.subsets}};
  if (r.witness) {
    j["witness"] = ToJson(*r.witness);
    j["lhs"] = ToString(r.lhs);
    j["rhs"] = ToString(r.rhs);
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace tcf
