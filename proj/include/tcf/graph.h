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

#ifndef TCF_GRAPH_H_
#define TCF_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace tcf {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  VertexId Other(VertexId w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

// A sorted set of vertex identifiers.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> members);
  explicit VertexSet(std::vector<VertexId> members);
  // Bit i of `mask` selects vertex i.
  static VertexSet FromMask(uint64_t mask);

  bool contains(VertexId v) const;
  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<VertexId>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  // Characteristic vector over 0..n-1.
  std::vector<char> Indicator(int n) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<VertexId> members_;
};

// A set of edge identifiers of some host graph. Factors are spanning by
// definition, so the vertex set is always the host's.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> members);
  explicit EdgeSet(std::vector<EdgeId> members);

  bool contains(EdgeId e) const;
  void insert(EdgeId e);
  void erase(EdgeId e);
  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<EdgeId>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  EdgeSet Union(const EdgeSet& other) const;
  EdgeSet Minus(const EdgeSet& other) const;
  bool IsSubsetOf(const EdgeSet& other) const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<EdgeId> members_;
};

struct Partition {
  // Disjoint, nonempty, each sorted; blocks ordered by smallest member.
  std::vector<std::vector<VertexId>> blocks;

  void Normalize();
  // block_of[v] for every vertex of an n-vertex host.
  std::vector<int> BlockIndex(int n) const;
  bool operator==(const Partition&) const = default;
};

// Loopless multigraph on vertices 0..n-1. Edge identities are stable under
// every derivation that keeps the edge, and every derived graph records the
// parent identity of each of its edges and vertices.
class Multigraph {
 public:
  // The null graph K_0.
  Multigraph() = default;

  // Edge ids are 0..|edge_list|-1 in input order.
  static absl::StatusOr<Multigraph> Build(
      int n, std::span<const std::pair<VertexId, VertexId>> edge_list);
  static absl::StatusOr<Multigraph> Build(
      int n, std::initializer_list<std::pair<VertexId, VertexId>> edge_list);

  // Low-level constructor for derived graphs. `edge_origin` and
  // `vertex_origin` may be empty, meaning identity.
  static absl::StatusOr<Multigraph> FromEdges(
      int n, std::vector<Edge> edges, std::vector<EdgeId> edge_origin = {},
      std::vector<VertexId> vertex_origin = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool is_null() const { return n_ == 0; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  // Position of `id` in edges(); -1 if absent.
  int position(EdgeId id) const;
  EdgeId max_edge_id() const;  // -1 for an edgeless graph

  // Back-maps into the graph this one was derived from.
  EdgeId edge_origin(EdgeId id) const;
  VertexId vertex_origin(VertexId v) const;

  EdgeSet AllEdges() const;
  std::vector<int> Degrees() const;
  // Adjacency as edge positions per vertex.
  std::vector<std::vector<int>> IncidentPositions() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> position_;  // indexed by edge id
  std::vector<EdgeId> edge_origin_;
  std::vector<VertexId> vertex_origin_;
};

// Spanning subgraph of `g` with the edges of `f` (ids kept).
Multigraph SpanningSubgraph(const Multigraph& g, const EdgeSet& f);

// G \ S: vertices of S and incident edges removed, survivors relabeled
// densely in increasing order; vertex_origin maps back.
Multigraph DeleteVertices(const Multigraph& g, const VertexSet& s);

// G[X] with the vertices of X relabeled densely.
Multigraph InducedSubgraph(const Multigraph& g, const VertexSet& x);

// G \ [S, F]: every edge incident to S is removed unless it belongs to F.
// No vertex is removed.
Multigraph StripExcept(const Multigraph& g, const VertexSet& s,
                       const EdgeSet& f);

// Connected components of the spanning subgraph with edge set `f`.
Partition FactorComponents(const Multigraph& g, const EdgeSet& f);

// G / F: each component of F becomes one vertex (numbered in order of its
// smallest member, whose id is the vertex origin); edges inside a component
// vanish, all others survive with their ids.
Multigraph ContractFactor(const Multigraph& g, const EdgeSet& f);

// m copies of G on the same vertex set. Copy 0 keeps the original ids; the
// other copies get fresh ids. edge_origin maps every edge to its original.
Multigraph UnionCopies(const Multigraph& g, int m);

struct Duplication {
  Multigraph graph;
  EdgeSet twins;  // the fresh copy of F
};
// Every edge of F gains one parallel twin with a fresh id.
Duplication DuplicateEdges(const Multigraph& g, const EdgeSet& f);

// Keeps the first edge of every parallel class.
Multigraph Simplify(const Multigraph& g);

// e_G(S).
int EdgesWithin(const Multigraph& g, const VertexSet& s);
// e_G(P).
int CrossingCount(const Multigraph& g, const Partition& p);
// d_G(C): edges with exactly one end in C.
int BoundaryDegree(const Multigraph& g, const VertexSet& c);
int Degree(const Multigraph& g, VertexId v);

// Number of connected components (0 for the null graph).
int ComponentCount(const Multigraph& g);
bool IsConnected(const Multigraph& g);

}  // namespace tcf

#endif  // TCF_GRAPH_H_
