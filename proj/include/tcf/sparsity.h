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

// m-sparsity, m-tree-connected components and the Omega_m measure.
//
// A graph is m-sparse when every nonempty vertex set S spans at most
// m|S| - m edges. The maximal m-sparse subgraphs of a graph are the bases of
// a matroid (the union of m graphic matroids), and the m-tree-connected
// components are the closures of the basis restricted to the maximal tight
// sets. Independence is decided with the (m, m) pebble game.

#ifndef TCF_SPARSITY_H_
#define TCF_SPARSITY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "tcf/graph.h"

namespace tcf {

// Incremental (m, m) pebble game. Every vertex starts with m pebbles; an
// edge is accepted iff m + 1 pebbles can be gathered on its endpoints.
// Accepted edges stay directed away from the vertex whose pebble covers them.
//
// Invariant: pebbles(v) + outdegree(v) == m for every v, hence
// total pebbles + accepted edges == m * n.
class PebbleGame {
 public:
  PebbleGame(int num_vertices, int m);

  int m() const { return m_; }
  int num_vertices() const { return static_cast<int>(pebbles_.size()); }
  int accepted() const { return static_cast<int>(tail_.size()); }
  int free_pebbles() const;

  // Inserts uv if the accepted set stays m-sparse. Pebbles may move even
  // when the edge is rejected. Returns the accepted-edge index or -1.
  int TryInsert(VertexId u, VertexId v);
  // True iff uv would be accepted (pebbles may move, nothing is inserted).
  bool CanInsert(VertexId u, VertexId v);
  // Vertices of the tight set found by the last failed gather; it contains
  // both endpoints and spans exactly m|X| - m accepted edges.
  const std::vector<VertexId>& blocking_set() const { return blocking_; }

  // Partition of the vertices into m-tree-connected components of the
  // accepted edge set (singletons where nothing is tight).
  Partition Components();

 private:
  bool Gather(VertexId u, VertexId v);
  bool PullPebble(VertexId root, VertexId avoid);
  void Reverse(int edge);
  void RecordReach(VertexId u, VertexId v);

  int m_;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;  // accepted-edge indices by tail
  std::vector<VertexId> tail_;
  std::vector<VertexId> head_;
  std::vector<VertexId> blocking_;
  // DFS scratch.
  std::vector<int> seen_;
  std::vector<int> parent_edge_;
  int stamp_ = 0;
};

struct TcPartition {
  int m = 1;
  Partition blocks;
  // m * |blocks| - e_G(blocks).
  int omega = 0;
};

struct SparsityVerdict {
  bool sparse = true;
  // A vertex set X with e(X) > m|X| - m when not sparse.
  VertexSet violating_set;
};

SparsityVerdict CheckSparse(const Multigraph& f, int m);
bool IsSparse(const Multigraph& f, int m);

TcPartition TreeConnectedComponents(const Multigraph& g, int m);
int Omega(const Multigraph& g, int m);
bool IsTreeConnected(const Multigraph& g, int m);
bool IsMinimallyTreeConnected(const Multigraph& g, int m);

// Greedy basis extension of the m-sparse factor `f` of `g`. Candidate edges
// are shuffled with `seed` and then scanned once. With caps, an edge is
// skipped when it would push either endpoint above its cap, so the result is
// maximal among capped sparse supersets but not necessarily a basis.
absl::StatusOr<EdgeSet> MaximalSparseExtension(
    const Multigraph& g, const EdgeSet& f, int m,
    const std::optional<std::vector<int>>& caps = std::nullopt,
    uint64_t seed = 0);

// A subset F' of `f` that is m-sparse and has the same m-tree-connected
// components, with all edges between components kept.
EdgeSet SparsifyTcComponents(const Multigraph& f, int m);

// m edge-disjoint spanning trees (as edge ids), or nullopt when `g` is not
// m-tree-connected. Uses matroid partitioning over m graphic matroids, which
// is independent of the pebble game.
std::optional<std::vector<EdgeSet>> SpanningTreePacking(const Multigraph& g,
                                                        int m);

nlohmann::json ToJson(const TcPartition& p);

}  // namespace tcf

#endif  // TCF_SPARSITY_H_
