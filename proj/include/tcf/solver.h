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

// Degree-capped extension of a sparse factor. Among m-sparse H with
// F <= H <= G and d_H <= h + d_F, the solver looks for one minimizing
// Omega_m(H) (for sparse H this is m n - |E(H)|), and the certificate
// extractor recovers the vertex set S that explains why no better H exists.

#ifndef TCF_SOLVER_H_
#define TCF_SOLVER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "tcf/graph.h"
#include "tcf/moves.h"
#include "tcf/rational.h"

namespace tcf {

// sum_v max(0, d_H(v) - g(v)).
int TotalExcess(const Multigraph& host, const EdgeSet& h,
                const std::vector<int>& g);

struct SolveInstance {
  Multigraph g;
  EdgeSet f;           // m-sparse
  std::vector<int> h;  // nonnegative
  int m = 1;

  // h(v) + d_F(v).
  std::vector<int> Caps() const;
};

enum class Optimality { kProved, kLocal, kUnknown };
std::string OptimalityName(Optimality o);

struct SolverOptions {
  int restarts = 20;
  uint64_t seed = 1;
  // Optimality is confirmed by exhaustive search up to this order.
  int exhaustive_limit = 6;
  // Random plateau perturbations per restart once no move improves.
  int perturbations = 30;
  // Node budget for each search over alternative region configurations.
  int64_t region_budget = 200'000;
  bool verify_moves = false;
  bool record_trace = true;
};

struct SolveResult {
  EdgeSet h;
  int omega = 0;
  Optimality optimal = Optimality::kUnknown;
  uint64_t seed = 0;  // seed of the restart that produced h
  int restarts_used = 0;
  std::vector<Move> trace;
};

absl::StatusOr<SolveResult> SolveExtension(const SolveInstance& inst,
                                           const SolverOptions& options = {});

// Edges B inside X such that replacing E(H[X]) by B keeps H sparse, within
// caps, with H'[X] m-tree-connected, and leaves `free_vertex` (if >= 0)
// strictly below its cap. nullopt when no such B exists.
absl::StatusOr<std::optional<EdgeSet>> FindRegionAlternative(
    const SolveInstance& inst, const EdgeSet& h, const VertexSet& x,
    VertexId free_vertex, int64_t budget);

struct Certificate {
  VertexSet s;
  std::vector<VertexSet> chain;  // V_0 = {} <= V_1 <= ... <= V_n
  int omega_g = 0;               // Omega_m(G \ [S, F])
  int omega_h = 0;               // Omega_m(H \ [S, F])
  bool condition1 = false;       // omega_g == omega_h
  bool condition2 = false;       // every v in S saturated in H
  bool valid() const { return condition1 && condition2; }
};

// Requires h optimal for `inst`. A certificate failing either condition
// means h was not optimal or the underlying claim is wrong; it is returned
// as is for the caller to report.
absl::StatusOr<Certificate> ExtractCertificate(const SolveInstance& inst,
                                               const EdgeSet& h,
                                               int64_t budget = 2'000'000);

enum class CheckMode { kExact, kBounded };

struct ConditionReport {
  bool holds = true;
  std::optional<VertexSet> witness;  // first failing S
  Rational lhs{0};
  Rational rhs{0};
  int64_t subsets = 0;
  std::string detail;
};

// For every S: Omega_m(G \ [S, F]) <= sum_S h + m - max e_A(S), the max over
// m-sparse A with d_A <= h whose edges join different m-tree-connected
// components of F. Exact mode maximizes by search; bounded mode uses
// min(floor(sum_S h / 2), m|S| - Omega_m(G[S])) instead.
absl::StatusOr<ConditionReport> CheckCondition34(
    const Multigraph& g, const EdgeSet& f, const std::vector<int>& h, int m,
    CheckMode mode, int exact_limit = 8, int limit = 20);

struct XiParams {
  Rational c{2};
  std::vector<Rational> xi;
};

// xi within [0, m] and, for every m-tree-connected component C of F,
// sum_C xi >= m - m/(c-1) (|C| - 1) - d_F(C)/2.
absl::Status CheckXi(const Multigraph& g, const EdgeSet& f, int m,
                     const XiParams& p);

// The strict inequality with the min-term, evaluated exactly for every S.
absl::StatusOr<ConditionReport> CheckCondition36(const Multigraph& g,
                                                 const EdgeSet& f,
                                                 const std::vector<int>& h,
                                                 int m, const XiParams& p,
                                                 int limit = 20);
// Same with c and xi chosen per S.
absl::StatusOr<ConditionReport> CheckCondition36PerSet(
    const Multigraph& g, const EdgeSet& f, const std::vector<int>& h, int m,
    const std::function<XiParams(const VertexSet&)>& params, int limit = 20);

// The xi = 0 form: Omega_m(G \ S) < sum_S (c/(2c-2) h - m/(c-1)) + m + 1 +
// Omega_m(G[S])/(c-1).
absl::StatusOr<ConditionReport> CheckCondition37(const Multigraph& g,
                                                 const std::vector<int>& h,
                                                 int m, const Rational& c,
                                                 int limit = 20);

// Every m-tree-connected component C of F has |C| + (c-1)/(2m) d_F(C) >= c,
// and c >= 2m + 1.
absl::Status CheckLargeComponents(const Multigraph& g, const EdgeSet& f, int m,
                                  const Rational& c);

// xi(v) = max{0, m - (|C_v| - 1)/2 - d_F(v, C_v)/2} / |C_v|, with C_v the
// m-tree-connected component of F at v.
std::vector<Rational> DefaultXi(const Multigraph& g, const EdgeSet& f, int m);

// Omega_m(G \ S) <= slope |S| + offset for every S.
absl::StatusOr<ConditionReport> CheckOmegaBound(const Multigraph& g, int m,
                                                const Rational& slope,
                                                const Rational& offset,
                                                int limit = 20);

struct Extension {
  EdgeSet h;        // m-tree-connected when omega == m
  EdgeSet sparse_f; // the sparse part of F handed to the solver
  SolveResult solve;
};

// Sparsifies F, solves with caps h + d_F', and adds F - F' back, so
// d_H <= h + d_F whenever the solver stays within its caps.
absl::StatusOr<Extension> ExtendFactor(const Multigraph& g, const EdgeSet& f,
                                       const std::vector<int>& h, int m,
                                       const SolverOptions& options = {});

struct PipelineOptions {
  bool check_hypothesis = true;
  int hypothesis_limit = 20;
  SolverOptions solver;
};

struct Theorem41Result {
  EdgeSet h;             // in the ids of the input graph
  Multigraph host;       // union of m copies, F embedded once
  Extension extension;   // in the ids of host
};

// m-tree-connected H containing F with d_H(v) in {d_F(v), d_F(v) + 1} and
// d_H(u) = d_F(u). Fails with FAILED_PRECONDITION (naming the witness) when
// the hypothesis is checked and false, ABORTED when the solver stops at a
// local optimum.
absl::StatusOr<Theorem41Result> SolveTheorem41(
    const Multigraph& g, const EdgeSet& f, int m, const Rational& c,
    VertexId u, const PipelineOptions& options = {});

struct Theorem48Result {
  EdgeSet h;
  Duplication doubled;
  Theorem41Result inner;  // on the doubled graph
};

// 2-edge-connected H containing F with d_H(v) in {d_F(v), d_F(v) + 1}.
absl::StatusOr<Theorem48Result> SolveTheorem48(
    const Multigraph& g, const EdgeSet& f, const Rational& c,
    const PipelineOptions& options = {});

nlohmann::json ToJson(const SolveResult& r);
nlohmann::json ToJson(const Certificate& c);
nlohmann::json ToJson(const ConditionReport& r);

}  // namespace tcf

#endif  // TCF_SOLVER_H_
