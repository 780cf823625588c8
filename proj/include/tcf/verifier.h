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

// Registry of verified statements. Each case couples a hypothesis check, a
// construction (the solver pipelines where one exists) and a conclusion
// check by the independent oracles, and reports the three outcomes.

#ifndef TCF_VERIFIER_H_
#define TCF_VERIFIER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "nlohmann/json.hpp"
#include "tcf/generators.h"
#include "tcf/graph.h"
#include "tcf/rational.h"
#include "tcf/solver.h"

namespace tcf {

enum class HypothesisStatus { kPass, kFail, kAssumed };
enum class ConclusionStatus { kPass, kFail, kNotRun };
std::string StatusName(HypothesisStatus s);
std::string StatusName(ConclusionStatus s);

struct TheoremReport {
  std::string id;
  nlohmann::json instance;
  HypothesisStatus hypothesis = HypothesisStatus::kFail;
  ConclusionStatus conclusion = ConclusionStatus::kNotRun;
  // How the conclusion was decided: "construction", "oracle", "gate", ...
  std::string mode;
  nlohmann::json witness = nlohmann::json::object();
  std::string detail;
  std::optional<double> millis;  // only when timing was requested

  bool red_alert() const {
    return hypothesis == HypothesisStatus::kPass &&
           conclusion == ConclusionStatus::kFail;
  }
};

nlohmann::json ToJson(const TheoremReport& r);

// Parameters of a case. Anything left unset that a case needs is drawn
// deterministically from `seed`.
struct CaseParams {
  int m = 1;
  int m0 = 0;
  std::optional<Rational> c;
  int r = 0;
  int a = 0;
  int b = 0;
  int k = 0;
  std::vector<int> f;              // per-vertex target degrees
  std::optional<EdgeSet> factor;   // F
  std::optional<EdgeSet> other;    // F0 for the region swap, H for the identity
  std::vector<int> h;
  std::optional<VertexSet> s;      // S, or X for the region swap
  std::optional<EdgeId> edge;      // e, or xy for the exchange
  std::optional<EdgeId> removed;   // the exchanged-out edge
  std::optional<VertexId> u;
  std::optional<std::vector<Rational>> xi;
  // Run the construction even when the hypothesis is out of reach.
  bool assume_hypothesis = false;
  uint64_t seed = 1;
  SolverOptions solver;
  int64_t oracle_budget = 20'000'000;
  int exact_limit = 8;
  int order_limit = 0;  // 0: the case's own limit
};

nlohmann::json ToJson(const CaseParams& p);

struct TheoremCase {
  std::string id;
  std::string summary;
  std::string parameters;
  int max_order = 0;
};

const std::vector<TheoremCase>& Registry();
// The fixed list of statements that must be covered, one registry entry each.
const std::vector<std::string>& InScopeIds();

struct Lemma31Values {
  int lhs = 0;            // Omega_m(G \ [S, F])
  int omega_minus_s = 0;  // Omega_m(G \ S)
  int t_s = 0;
  int i_s = 0;
  bool holds = false;
  bool trivial_factor = false;   // F empty: identity also checked
  bool identity_holds = true;
};
Lemma31Values EvaluateLemma31(const Multigraph& g, const EdgeSet& f,
                              const VertexSet& s, int m);

struct Lemma32Values {
  Rational lhs{0};
  Rational first_rhs{0};
  Rational second_rhs{0};
  bool first_holds = false;
  bool second_holds = false;
};
Lemma32Values EvaluateLemma32(const Multigraph& g, const EdgeSet& f,
                              const VertexSet& s, int m, const XiParams& p);

struct Lemma33Values {
  int lhs = 0;  // sum_S d_{H - F}
  int rhs = 0;  // Omega(H \ [S, F]) - Omega(H) + e_{H - F}(S)
};
// `h` is the edge set of an m-sparse factor of g containing f.
absl::StatusOr<Lemma33Values> EvaluateLemma33(const Multigraph& g,
                                              const EdgeSet& h,
                                              const EdgeSet& f,
                                              const VertexSet& s, int m);

TheoremReport VerifyLemma31(const Multigraph& g, const EdgeSet& f,
                            const VertexSet& s, int m);
TheoremReport VerifyLemma32(const Multigraph& g, const EdgeSet& f,
                            const VertexSet& s, int m, const XiParams& p);
TheoremReport VerifyLemma33(const Multigraph& g, const EdgeSet& h,
                            const EdgeSet& f, const VertexSet& s, int m);

// Smallest xi spreading each component's requirement evenly.
std::vector<Rational> MinimalXi(const Multigraph& g, const EdgeSet& f, int m,
                                const Rational& c);

// Errors: NOT_FOUND for an unknown id, OUT_OF_RANGE beyond the case's order
// limit, INVALID_ARGUMENT for malformed parameters.
absl::StatusOr<TheoremReport> VerifyEndToEnd(absl::string_view id,
                                             const Multigraph& g,
                                             const CaseParams& params,
                                             bool timing = false);

struct Instance {
  Multigraph graph;
  CaseParams params;
  std::string family;
};

// Generators: complete, multipartite, circulant, nearregular, planted2f,
// random.
const std::vector<std::string>& GeneratorNames();
absl::StatusOr<Instance> MakeInstance(absl::string_view id,
                                      absl::string_view generator, Rng& rng);

struct SearchSummary {
  int instances = 0;
  int red_alerts = 0;
  int hypothesis_pass = 0;
  int hypothesis_fail = 0;
  int hypothesis_assumed = 0;
  int conclusion_pass = 0;
  int conclusion_fail = 0;
  int not_run = 0;
  std::vector<TheoremReport> reports;  // in generation order
};

// Streams `budget` instances through VerifyEndToEnd. `sink` sees every
// report in generation order regardless of `jobs`.
absl::StatusOr<SearchSummary> CounterexampleSearch(
    absl::string_view id, absl::string_view generator, int budget,
    uint64_t seed, int jobs = 1,
    const std::function<void(const TheoremReport&)>& sink = nullptr,
    bool keep_reports = true);

struct SuiteEntry {
  std::string id;
  std::string generator;
  int count = 0;
};
// Spans every registered case; over a thousand instances in total.
const std::vector<SuiteEntry>& StandardSuite();

}  // namespace tcf

#endif  // TCF_VERIFIER_H_
