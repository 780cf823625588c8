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

#include "tcf/graph.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "absl/strings/str_cat.h"

namespace tcf {
namespace {

template <typename T>
std::vector<T> SortedUnique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Small union-find used for component labelling.
class Components {
 public:
  explicit Components(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Join(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

VertexSet::VertexSet(std::initializer_list<VertexId> members)
    : members_(SortedUnique(std::vector<VertexId>(members))) {}

VertexSet::VertexSet(std::vector<VertexId> members)
    : members_(SortedUnique(std::move(members))) {}

VertexSet VertexSet::FromMask(uint64_t mask) {
  std::vector<VertexId> members;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) members.push_back(i);
  }
  VertexSet s;
  s.members_ = std::move(members);
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::Indicator(int n) const {
  std::vector<char> in(n, 0);
  for (VertexId v : members_) {
    if (v >= 0 && v < n) in[v] = 1;
  }
  return in;
}

EdgeSet::EdgeSet(std::initializer_list<EdgeId> members)
    : members_(SortedUnique(std::vector<EdgeId>(members))) {}

EdgeSet::EdgeSet(std::vector<EdgeId> members)
    : members_(SortedUnique(std::move(members))) {}

bool EdgeSet::contains(EdgeId e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

void EdgeSet::insert(EdgeId e) {
  auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it == members_.end() || *it != e) members_.insert(it, e);
}

void EdgeSet::erase(EdgeId e) {
  auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it != members_.end() && *it == e) members_.erase(it);
}

EdgeSet EdgeSet::Union(const EdgeSet& other) const {
  EdgeSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

EdgeSet EdgeSet::Minus(const EdgeSet& other) const {
  EdgeSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

bool EdgeSet::IsSubsetOf(const EdgeSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

void Partition::Normalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const auto& b) { return b.empty(); }),
               blocks.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<int> Partition::BlockIndex(int n) const {
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    for (VertexId v : blocks[i]) block_of[v] = i;
  }
  return block_of;
}

absl::StatusOr<Multigraph> Multigraph::Build(
    int n, std::span<const std::pair<VertexId, VertexId>> edge_list) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (size_t i = 0; i < edge_list.size(); ++i) {
    edges.push_back({static_cast<EdgeId>(i), edge_list[i].first,
                     edge_list[i].second});
  }
  return FromEdges(n, std::move(edges));
}

absl::StatusOr<Multigraph> Multigraph::Build(
    int n, std::initializer_list<std::pair<VertexId, VertexId>> edge_list) {
  return Build(n, std::span<const std::pair<VertexId, VertexId>>(
                      edge_list.begin(), edge_list.size()));
}

absl::StatusOr<Multigraph> Multigraph::FromEdges(
    int n, std::vector<Edge> edges, std::vector<EdgeId> edge_origin,
    std::vector<VertexId> vertex_origin) {
  if (n < 0) return absl::InvalidArgumentError("negative vertex count");
  if (!edge_origin.empty() && edge_origin.size() != edges.size()) {
    return absl::InvalidArgumentError("edge origin size mismatch");
  }
  if (!vertex_origin.empty() && static_cast<int>(vertex_origin.size()) != n) {
    return absl::InvalidArgumentError("vertex origin size mismatch");
  }
  Multigraph g;
  g.n_ = n;
  EdgeId max_id = -1;
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      return absl::OutOfRangeError(
          absl::StrCat("edge ", i, " (", e.u, ",", e.v,
                       ") has an endpoint outside 0..", n - 1));
    }
    if (e.u == e.v) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", i, " is a loop at vertex ", e.u));
    }
    if (e.id < 0) {
      return absl::InvalidArgumentError(absl::StrCat("edge ", i, " has id < 0"));
    }
    max_id = std::max(max_id, e.id);
  }
  g.position_.assign(max_id + 1, -1);
  for (size_t i = 0; i < edges.size(); ++i) {
    if (g.position_[edges[i].id] != -1) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate edge id ", edges[i].id));
    }
    g.position_[edges[i].id] = static_cast<int>(i);
  }
  g.edges_ = std::move(edges);
  if (edge_origin.empty()) {
    edge_origin.reserve(g.edges_.size());
    for (const Edge& e : g.edges_) edge_origin.push_back(e.id);
  }
  if (vertex_origin.empty()) {
    vertex_origin.resize(n);
    std::iota(vertex_origin.begin(), vertex_origin.end(), 0);
  }
  g.edge_origin_ = std::move(edge_origin);
  g.vertex_origin_ = std::move(vertex_origin);
  return g;
}

bool Multigraph::has_edge(EdgeId id) const { return position(id) >= 0; }

int Multigraph::position(EdgeId id) const {
  if (id < 0 || id >= static_cast<EdgeId>(position_.size())) return -1;
  return position_[id];
}

const Edge& Multigraph::edge(EdgeId id) const {
  assert(has_edge(id));
  return edges_[position_[id]];
}

EdgeId Multigraph::max_edge_id() const {
  return static_cast<EdgeId>(position_.size()) - 1;
}

EdgeId Multigraph::edge_origin(EdgeId id) const {
  return edge_origin_[position(id)];
}

VertexId Multigraph::vertex_origin(VertexId v) const {
  return vertex_origin_[v];
}

EdgeSet Multigraph::AllEdges() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return EdgeSet(std::move(ids));
}

std::vector<int> Multigraph::Degrees() const {
  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<int>> Multigraph::IncidentPositions() const {
  std::vector<std::vector<int>> inc(n_);
  for (int i = 0; i < num_edges(); ++i) {
    inc[edges_[i].u].push_back(i);
    inc[edges_[i].v].push_back(i);
  }
  return inc;
}

Multigraph SpanningSubgraph(const Multigraph& g, const EdgeSet& f) {
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (const Edge& e : g.edges()) {
    if (f.contains(e.id)) {
      edges.push_back(e);
      origin.push_back(e.id);
    }
  }
  return *Multigraph::FromEdges(g.num_vertices(), std::move(edges),
                                std::move(origin));
}

Multigraph DeleteVertices(const Multigraph& g, const VertexSet& s) {
  const int n = g.num_vertices();
  std::vector<int> relabel(n, -1);
  std::vector<VertexId> vertex_origin;
  for (VertexId v = 0; v < n; ++v) {
    if (!s.contains(v)) {
      relabel[v] = static_cast<int>(vertex_origin.size());
      vertex_origin.push_back(v);
    }
  }
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) {
      edges.push_back({e.id, relabel[e.u], relabel[e.v]});
      origin.push_back(e.id);
    }
  }
  const int kept = static_cast<int>(vertex_origin.size());
  return *Multigraph::FromEdges(kept, std::move(edges), std::move(origin),
                                std::move(vertex_origin));
}

Multigraph InducedSubgraph(const Multigraph& g, const VertexSet& x) {
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!x.contains(v)) rest.push_back(v);
  }
  return DeleteVertices(g, VertexSet(std::move(rest)));
}

Multigraph StripExcept(const Multigraph& g, const VertexSet& s,
                       const EdgeSet& f) {
  const std::vector<char> in_s = s.Indicator(g.num_vertices());
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (const Edge& e : g.edges()) {
    if (f.contains(e.id) || (!in_s[e.u] && !in_s[e.v])) {
      edges.push_back(e);
      origin.push_back(e.id);
    }
  }
  return *Multigraph::FromEdges(g.num_vertices(), std::move(edges),
                                std::move(origin));
}

Partition FactorComponents(const Multigraph& g, const EdgeSet& f) {
  Components uf(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (f.contains(e.id)) uf.Join(e.u, e.v);
  }
  Partition p;
  std::map<int, int> block_of_root;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto [it, fresh] = block_of_root.try_emplace(
        uf.Find(v), static_cast<int>(p.blocks.size()));
    if (fresh) p.blocks.emplace_back();
    p.blocks[it->second].push_back(v);
  }
  p.Normalize();
  return p;
}

Multigraph ContractFactor(const Multigraph& g, const EdgeSet& f) {
  const Partition p = FactorComponents(g, f);
  const std::vector<int> block_of = p.BlockIndex(g.num_vertices());
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (const Edge& e : g.edges()) {
    if (block_of[e.u] != block_of[e.v]) {
      edges.push_back({e.id, block_of[e.u], block_of[e.v]});
      origin.push_back(e.id);
    }
  }
  std::vector<VertexId> vertex_origin;
  for (const auto& b : p.blocks) vertex_origin.push_back(b.front());
  const int k = static_cast<int>(p.blocks.size());
  return *Multigraph::FromEdges(k, std::move(edges), std::move(origin),
                                std::move(vertex_origin));
}

Multigraph UnionCopies(const Multigraph& g, int m) {
  assert(m >= 1);
  std::vector<Edge> edges = g.edges();
  std::vector<EdgeId> origin;
  for (const Edge& e : g.edges()) origin.push_back(e.id);
  EdgeId next = g.max_edge_id() + 1;
  for (int copy = 1; copy < m; ++copy) {
    for (const Edge& e : g.edges()) {
      edges.push_back({next++, e.u, e.v});
      origin.push_back(e.id);
    }
  }
  return *Multigraph::FromEdges(g.num_vertices(), std::move(edges),
                                std::move(origin));
}

Duplication DuplicateEdges(const Multigraph& g, const EdgeSet& f) {
  std::vector<Edge> edges = g.edges();
  std::vector<EdgeId> origin;
  for (const Edge& e : g.edges()) origin.push_back(e.id);
  std::vector<EdgeId> twins;
  EdgeId next = g.max_edge_id() + 1;
  for (const Edge& e : g.edges()) {
    if (!f.contains(e.id)) continue;
    twins.push_back(next);
    edges.push_back({next++, e.u, e.v});
    origin.push_back(e.id);
  }
  return {*Multigraph::FromEdges(g.num_vertices(), std::move(edges),
                                 std::move(origin)),
          EdgeSet(std::move(twins))};
}

Multigraph Simplify(const Multigraph& g) {
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  std::vector<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    const std::pair<VertexId, VertexId> key = std::minmax(e.u, e.v);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    edges.push_back(e);
    origin.push_back(e.id);
  }
  return *Multigraph::FromEdges(g.num_vertices(), std::move(edges),
                                std::move(origin));
}

int EdgesWithin(const Multigraph& g, const VertexSet& s) {
  const std::vector<char> in = s.Indicator(g.num_vertices());
  int count = 0;
  for (const Edge& e : g.edges()) count += in[e.u] && in[e.v];
  return count;
}

int CrossingCount(const Multigraph& g, const Partition& p) {
  const std::vector<int> block_of = p.BlockIndex(g.num_vertices());
  int count = 0;
  for (const Edge& e : g.edges()) count += block_of[e.u] != block_of[e.v];
  return count;
}

int BoundaryDegree(const Multigraph& g, const VertexSet& c) {
  const std::vector<char> in = c.Indicator(g.num_vertices());
  int count = 0;
  for (const Edge& e : g.edges()) count += in[e.u] != in[e.v];
  return count;
}

int Degree(const Multigraph& g, VertexId v) {
  int d = 0;
  for (const Edge& e : g.edges()) d += (e.u == v) + (e.v == v);
  return d;
}

int ComponentCount(const Multigraph& g) {
  return static_cast<int>(FactorComponents(g, g.AllEdges()).blocks.size());
}

bool IsConnected(const Multigraph& g) { return ComponentCount(g) == 1; }

}  // namespace tcf
