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

// Sparsity-preserving transformations of a factor: adding an edge between
// two m-tree-connected components, exchanging an edge of a minimal
// tree-connected subgraph for a new edge, and replacing the edges inside a
// tree-connected region by those of another sparse factor.

#ifndef TCF_MOVES_H_
#define TCF_MOVES_H_

#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "tcf/graph.h"

namespace tcf {

enum class MoveKind { kAdd, kExchange, kRegionSwap };

std::string_view MoveKindName(MoveKind kind);

struct Move {
  MoveKind kind = MoveKind::kAdd;
  std::vector<EdgeId> added;
  std::vector<EdgeId> removed;
  VertexSet affected;
};

struct MoveOptions {
  // Re-check sparsity of every result with the pebble game.
  bool verify = false;
  // Additionally re-check with the subset oracle (small graphs only).
  bool verify_by_subsets = false;
};

// F + e. Rejected unless the ends of e lie in different m-tree-connected
// components of F.
absl::StatusOr<EdgeSet> AddMove(const Multigraph& g, const EdgeSet& f,
                                EdgeId e, int m, const MoveOptions& options = {},
                                Move* record = nullptr);

struct TcSubgraph {
  VertexSet vertices;
  EdgeSet edges;
};

// A minimal m-tree-connected subgraph of F containing x and y. Vertices are
// peeled off the common component in increasing order while x and y stay in
// one m-tree-connected component; the edges are a sparse basis of what is
// left.
absl::StatusOr<TcSubgraph> MinimalTcSubgraph(const Multigraph& g,
                                             const EdgeSet& f, VertexId x,
                                             VertexId y, int m);

// F - e + xy for xy in G - F and e an edge of the minimal subgraph Q of F
// containing the ends of xy.
absl::StatusOr<EdgeSet> ExchangeMove(const Multigraph& g, const EdgeSet& f,
                                     EdgeId xy, EdgeId e, int m,
                                     const MoveOptions& options = {},
                                     Move* record = nullptr);

// F - E(F[X]) + E(F0[X]). Rejected unless F[X] is m-tree-connected.
absl::StatusOr<EdgeSet> RegionSwapMove(const Multigraph& g, const EdgeSet& f,
                                       const EdgeSet& f0, const VertexSet& x,
                                       int m, const MoveOptions& options = {},
                                       Move* record = nullptr);

nlohmann::json ToJson(const Move& move);
nlohmann::json TraceToJson(const std::vector<Move>& trace);

}  // namespace tcf

#endif  // TCF_MOVES_H_
