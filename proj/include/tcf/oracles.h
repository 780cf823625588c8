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

// Exact exponential-time ground truth. Nothing in here uses the pebble game:
// sparsity is decided by counting edges inside every vertex subset, and
// tree-connectivity either by the partition condition (every partition P has
// at least m(|P| - 1) crossing edges) or by matroid-partition tree packing.

#ifndef TCF_ORACLES_H_
#define TCF_ORACLES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "tcf/graph.h"
#include "tcf/rational.h"

namespace tcf {

inline constexpr int kToughnessLimit = 18;
inline constexpr int kSubsetOracleLimit = 16;

enum class EnumerationOrder { kAscending, kDescending };

struct Toughness {
  bool infinite = false;  // complete graphs and K_1
  Rational value{0};
  VertexSet witness;      // minimizing cut set
};

absl::StatusOr<Toughness> ComputeToughness(
    const Multigraph& g,
    EnumerationOrder order = EnumerationOrder::kAscending,
    int limit = kToughnessLimit);
bool IsTough(const Toughness& t, const Rational& threshold);

// Number of components of G \ S for a vertex bitmask S (n <= 63).
int ComponentsAfterRemoval(const Multigraph& g, uint64_t removed);

struct ComponentBoundCheck {
  bool holds = true;
  VertexSet witness;  // first S with omega(G \ S) > slope |S| + offset
  int components = 0;
};
// Checks omega(G \ S) <= slope * |S| + offset for every S.
absl::StatusOr<ComponentBoundCheck> CheckComponentBound(
    const Multigraph& g, const Rational& slope, const Rational& offset,
    int limit = 20);

// Allowed degrees per vertex.
struct DegreeSpec {
  std::vector<std::vector<int>> allowed;

  static DegreeSpec Uniform(int n, std::vector<int> values);
  bool Allows(VertexId v, int d) const;
};

enum class FactorExtra {
  kNone,
  kConnected,
  kTreeConnected,
  kTwoEdgeConnected,
  kTwoConnected,
};

struct FactorQuery {
  DegreeSpec spec;
  FactorExtra extra = FactorExtra::kNone;
  int m = 1;             // for kTreeConnected
  int complement_m = 0;  // complement must be this tree-connected (0: free)
  EdgeSet required;      // edges forced into the factor
  int64_t node_limit = 50'000'000;
};

struct FactorSearch {
  std::optional<EdgeSet> factor;
  bool exhausted = false;  // true: the answer is a proof either way
  int64_t nodes = 0;
};

// Backtracking over edges with degree-window pruning. A returned factor is
// re-validated degree by degree before it is reported.
FactorSearch BruteFactor(const Multigraph& g, const FactorQuery& query);

struct BipartiteIndex {
  int value = 0;
  VertexSet side;  // one side of a maximum bipartite factor
};
absl::StatusOr<BipartiteIndex> ComputeBipartiteIndex(
    const Multigraph& g,
    EnumerationOrder order = EnumerationOrder::kAscending, int limit = 24);

struct StructureReport {
  std::optional<int> girth;  // nullopt for forests
  bool connected = false;
  bool two_edge_connected = false;
  bool two_connected = false;
  bool components_eulerian = false;  // every degree even
};
StructureReport StructureChecks(
    const Multigraph& g,
    EnumerationOrder order = EnumerationOrder::kAscending);
bool IsBipartite(const Multigraph& g);

// e(S) <= m|S| - m for all nonempty S, by direct enumeration.
bool IsSparseBySubsets(const Multigraph& g, int m);
// Every partition P of V has e(P) >= m(|P| - 1).
bool IsTreeConnectedByPartitions(const Multigraph& g, int m);
// Maximal vertex sets inducing m-tree-connected subgraphs.
Partition TcComponentsBySubsets(const Multigraph& g, int m);
int OmegaBySubsets(const Multigraph& g, int m);
// Exhaustive search for m edge-disjoint spanning trees.
bool HasTreePackingBySearch(const Multigraph& g, int m);

// Edge counts of every vertex subset, updated edge by edge; backs the
// exhaustive searches over sparse edge sets.
class SubsetEdgeCounter {
 public:
  SubsetEdgeCounter(int n, int m);
  // Adds uv if all subsets stay within m|S| - m; returns whether it did.
  bool TryAdd(VertexId u, VertexId v);
  void Remove(VertexId u, VertexId v);

 private:
  int n_;
  int m_;
  std::vector<int> count_;
  std::vector<int> limit_;
};

// The largest |H| over m-sparse H with f <= H <= g and deg_H <= caps.
// Requires f m-sparse; n <= kSubsetOracleLimit.
absl::StatusOr<int> MaxCappedSparseSuperset(const Multigraph& g,
                                            const EdgeSet& f,
                                            const std::vector<int>& caps,
                                            int m);

// Whether some spanning H with f <= H <= g, deg_H <= caps is m-tree-connected.
absl::StatusOr<bool> BruteTcFactorExists(const Multigraph& g, const EdgeSet& f,
                                         const std::vector<int>& caps, int m,
                                         int64_t node_limit = 20'000'000);

struct Lemma52Result {
  enum class Outcome { kFound, kWitnessNotFound, kHypothesisFailed };
  Outcome outcome = Outcome::kWitnessNotFound;
  std::string detail;
  VertexSet x, y;                          // bipartition, |X| >= |Y|
  EdgeSet matching;                        // size k - 1, inside G[X]
  int maximum_matching = 0;                // in G[X]
  std::vector<EdgeSet> trees;              // decomposition of F[X, Y]
  std::vector<std::vector<EdgeId>> odd_cycles;  // T_i + e_i
  int bipartite_index = 0;                 // of F u M, rechecked
  bool matching_bound_holds = true;        // |M| >= (t-1)/(2t+2) |X|
};
// Requires f (2k-2)-tree-connected and n >= 4k - 2. With check_toughness
// the (4k-3)-toughness hypothesis is decided by the toughness oracle.
absl::StatusOr<Lemma52Result> Lemma52Construction(const Multigraph& g,
                                                  const EdgeSet& f, int k,
                                                  bool check_toughness = true);

nlohmann::json ToJson(const Toughness& t);
nlohmann::json ToJson(const StructureReport& s);
nlohmann::json ToJson(const Lemma52Result& r);

}  // namespace tcf

#endif  // TCF_ORACLES_H_
