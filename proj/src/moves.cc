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

#include "tcf/moves.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "tcf/io.h"
#include "tcf/oracles.h"
#include "tcf/sparsity.h"

namespace tcf {
namespace {

absl::Status Verify(const Multigraph& g, const EdgeSet& result, int m,
                    const MoveOptions& options, absl::string_view what) {
  if (!options.verify && !options.verify_by_subsets) return absl::OkStatus();
  const Multigraph h = SpanningSubgraph(g, result);
  if (options.verify && !IsSparse(h, m)) {
    return absl::InternalError(absl::StrCat(what, " produced a non-sparse factor"));
  }
  if (options.verify_by_subsets && h.num_vertices() <= kSubsetOracleLimit &&
      !IsSparseBySubsets(h, m)) {
    return absl::InternalError(
        absl::StrCat(what, " produced a non-sparse factor (subset oracle)"));
  }
  return absl::OkStatus();
}

// The m-tree-connected component of F[X] containing `anchor`, in host ids.
std::vector<VertexId> ComponentWithin(const Multigraph& factor,
                                      const std::vector<VertexId>& x,
                                      VertexId anchor, int m) {
  const Multigraph sub = InducedSubgraph(factor, VertexSet(x));
  const TcPartition p = TreeConnectedComponents(sub, m);
  const int local = static_cast<int>(
      std::lower_bound(x.begin(), x.end(), anchor) - x.begin());
  for (const auto& block : p.blocks.blocks) {
    if (!std::binary_search(block.begin(), block.end(), local)) continue;
    std::vector<VertexId> out;
    for (VertexId v : block) out.push_back(sub.vertex_origin(v));
    return out;
  }
  return {};
}

}  // namespace

std::string_view MoveKindName(MoveKind kind) {
  switch (kind) {
    case MoveKind::kAdd:
      return "add";
    case MoveKind::kExchange:
      return "exchange";
    case MoveKind::kRegionSwap:
      return "region-swap";
  }
  return "?";
}

absl::StatusOr<EdgeSet> AddMove(const Multigraph& g, const EdgeSet& f,
                                EdgeId e, int m, const MoveOptions& options,
                                Move* record) {
  if (!g.has_edge(e) || f.contains(e)) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge ", e, " is not in G - F"));
  }
  const Edge& edge = g.edge(e);
  const TcPartition p = TreeConnectedComponents(SpanningSubgraph(g, f), m);
  const std::vector<int> block = p.blocks.BlockIndex(g.num_vertices());
  if (block[edge.u] == block[edge.v]) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ends of edge ", e, " lie in the same tree-connected component"));
  }
  EdgeSet out = f;
  out.insert(e);
  if (auto s = Verify(g, out, m, options, "add"); !s.ok()) return s;
  if (record != nullptr) {
    *record = {MoveKind::kAdd, {e}, {}, VertexSet{edge.u, edge.v}};
  }
  return out;
}

absl::StatusOr<TcSubgraph> MinimalTcSubgraph(const Multigraph& g,
                                             const EdgeSet& f, VertexId x,
                                             VertexId y, int m) {
  const int n = g.num_vertices();
  if (x < 0 || y < 0 || x >= n || y >= n) {
    return absl::OutOfRangeError("vertex out of range");
  }
  const Multigraph factor = SpanningSubgraph(g, f);
  if (x == y) return TcSubgraph{VertexSet{x}, EdgeSet()};
  const TcPartition p = TreeConnectedComponents(factor, m);
  const std::vector<int> block = p.blocks.BlockIndex(n);
  if (block[x] != block[y]) {
    return absl::InvalidArgumentError(absl::StrCat(
        x, " and ", y, " lie in different tree-connected components"));
  }
  std::vector<VertexId> current = p.blocks.blocks[block[x]];
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (VertexId w : current) {
      if (w == x || w == y) continue;
      std::vector<VertexId> rest;
      for (VertexId v : current) {
        if (v != w) rest.push_back(v);
      }
      std::vector<VertexId> comp = ComponentWithin(factor, rest, x, m);
      if (std::binary_search(comp.begin(), comp.end(), y)) {
        current = std::move(comp);
        shrunk = true;
        break;
      }
    }
  }
  const VertexSet vertices(current);
  const Multigraph inside = InducedSubgraph(factor, vertices);
  return TcSubgraph{vertices, SparsifyTcComponents(inside, m)};
}

absl::StatusOr<EdgeSet> ExchangeMove(const Multigraph& g, const EdgeSet& f,
                                     EdgeId xy, EdgeId e, int m,
                                     const MoveOptions& options, Move* record) {
  if (!g.has_edge(xy) || f.contains(xy)) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge ", xy, " is not in G - F"));
  }
  const Edge& added = g.edge(xy);
  auto q = MinimalTcSubgraph(g, f, added.u, added.v, m);
  if (!q.ok()) return q.status();
  if (!q->edges.contains(e)) {
    return absl::InvalidArgumentError(
        absl::StrCat("edge ", e, " is not in the minimal subgraph"));
  }
  EdgeSet out = f;
  out.erase(e);
  out.insert(xy);
  if (auto s = Verify(g, out, m, options, "exchange"); !s.ok()) return s;
  if (record != nullptr) {
    *record = {MoveKind::kExchange, {xy}, {e}, q->vertices};
  }
  return out;
}

absl::StatusOr<EdgeSet> RegionSwapMove(const Multigraph& g, const EdgeSet& f,
                                       const EdgeSet& f0, const VertexSet& x,
                                       int m, const MoveOptions& options,
                                       Move* record) {
  const int n = g.num_vertices();
  for (VertexId v : x) {
    if (v < 0 || v >= n) return absl::OutOfRangeError("vertex out of range");
  }
  const std::vector<char> in = x.Indicator(n);
  std::vector<EdgeId> keep;
  std::vector<EdgeId> removed;
  for (EdgeId id : f) {
    const Edge& e = g.edge(id);
    (in[e.u] && in[e.v] ? removed : keep).push_back(id);
  }
  const Multigraph region =
      InducedSubgraph(SpanningSubgraph(g, f), x);
  if (x.empty() || !IsTreeConnected(region, m)) {
    return absl::InvalidArgumentError("F[X] is not tree-connected");
  }
  std::vector<EdgeId> added;
  for (EdgeId id : f0) {
    const Edge& e = g.edge(id);
    if (in[e.u] && in[e.v]) {
      keep.push_back(id);
      added.push_back(id);
    }
  }
  EdgeSet out(std::move(keep));
  if (auto s = Verify(g, out, m, options, "region swap"); !s.ok()) return s;
  if (record != nullptr) {
    *record = {MoveKind::kRegionSwap, std::move(added), std::move(removed), x};
  }
  return out;
}

nlohmann::json ToJson(const Move& move) {
  return {{"kind", MoveKindName(move.kind)},
          {"added", move.added},
          {"removed", move.removed},
          {"affected", ToJson(move.affected)}};
}

nlohmann::json TraceToJson(const std::vector<Move>& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const Move& m : trace) out.push_back(ToJson(m));
  return out;
}

}  // namespace tcf
