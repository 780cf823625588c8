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

#include "tcf/sparsity.h"

#include <algorithm>
#include <cassert>
#include <deque>
#include <random>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "tcf/io.h"

namespace tcf {

PebbleGame::PebbleGame(int num_vertices, int m)
    : m_(m),
      pebbles_(num_vertices, m),
      out_(num_vertices),
      seen_(num_vertices, 0),
      parent_edge_(num_vertices, -1) {
  assert(m >= 1);
}

int PebbleGame::free_pebbles() const {
  int total = 0;
  for (int p : pebbles_) total += p;
  return total;
}

void PebbleGame::Reverse(int edge) {
  auto& from = out_[tail_[edge]];
  from.erase(std::find(from.begin(), from.end(), edge));
  std::swap(tail_[edge], head_[edge]);
  out_[tail_[edge]].push_back(edge);
}

// Searches the out-reach of `root` (never entering `avoid`) for a free
// pebble and moves it to `root` by reversing the discovery path.
bool PebbleGame::PullPebble(VertexId root, VertexId avoid) {
  ++stamp_;
  seen_[root] = stamp_;
  if (avoid >= 0) seen_[avoid] = stamp_;
  std::vector<VertexId> stack = {root};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (int e : out_[x]) {
      const VertexId y = head_[e];
      if (seen_[y] == stamp_) continue;
      seen_[y] = stamp_;
      parent_edge_[y] = e;
      if (pebbles_[y] > 0) {
        for (VertexId w = y; w != root;) {
          const int pe = parent_edge_[w];
          const VertexId prev = tail_[pe];
          Reverse(pe);
          w = prev;
        }
        --pebbles_[y];
        ++pebbles_[root];
        return true;
      }
      stack.push_back(y);
    }
  }
  return false;
}

void PebbleGame::RecordReach(VertexId u, VertexId v) {
  ++stamp_;
  std::vector<VertexId> stack = {u, v};
  seen_[u] = seen_[v] = stamp_;
  blocking_.clear();
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    blocking_.push_back(x);
    for (int e : out_[x]) {
      if (seen_[head_[e]] != stamp_) {
        seen_[head_[e]] = stamp_;
        stack.push_back(head_[e]);
      }
    }
  }
  std::sort(blocking_.begin(), blocking_.end());
}

bool PebbleGame::Gather(VertexId u, VertexId v) {
  while (pebbles_[u] + pebbles_[v] < m_ + 1) {
    if (pebbles_[u] < m_ && PullPebble(u, v)) continue;
    if (pebbles_[v] < m_ && PullPebble(v, u)) continue;
    RecordReach(u, v);
    return false;
  }
  return true;
}

int PebbleGame::TryInsert(VertexId u, VertexId v) {
  if (u == v || !Gather(u, v)) return -1;
  --pebbles_[u];
  const int index = static_cast<int>(tail_.size());
  tail_.push_back(u);
  head_.push_back(v);
  out_[u].push_back(index);
  return index;
}

bool PebbleGame::CanInsert(VertexId u, VertexId v) {
  return u != v && Gather(u, v);
}

Partition PebbleGame::Components() {
  const int n = num_vertices();
  std::vector<int> block_of(n, -1);
  Partition p;
  for (VertexId u = 0; u < n; ++u) {
    if (block_of[u] >= 0) continue;
    const int b = static_cast<int>(p.blocks.size());
    p.blocks.emplace_back();
    block_of[u] = b;
    for (VertexId v = u + 1; v < n; ++v) {
      if (block_of[v] >= 0 || Gather(u, v)) continue;
      for (VertexId x : blocking_) {
        assert(block_of[x] == -1 || block_of[x] == b);
        block_of[x] = b;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) p.blocks[block_of[v]].push_back(v);
  p.Normalize();
  return p;
}

SparsityVerdict CheckSparse(const Multigraph& f, int m) {
  PebbleGame game(f.num_vertices(), m);
  for (const Edge& e : f.edges()) {
    if (game.TryInsert(e.u, e.v) < 0) {
      return {false, VertexSet(game.blocking_set())};
    }
  }
  return {true, {}};
}

bool IsSparse(const Multigraph& f, int m) { return CheckSparse(f, m).sparse; }

TcPartition TreeConnectedComponents(const Multigraph& g, int m) {
  TcPartition result;
  result.m = m;
  if (g.is_null()) return result;
  PebbleGame game(g.num_vertices(), m);
  for (const Edge& e : g.edges()) game.TryInsert(e.u, e.v);
  result.blocks = game.Components();
  result.omega = m * static_cast<int>(result.blocks.blocks.size()) -
                 CrossingCount(g, result.blocks);
  return result;
}

int Omega(const Multigraph& g, int m) {
  if (g.is_null()) return 0;
  return TreeConnectedComponents(g, m).omega;
}

bool IsTreeConnected(const Multigraph& g, int m) {
  if (g.is_null()) return false;
  return TreeConnectedComponents(g, m).blocks.blocks.size() == 1;
}

bool IsMinimallyTreeConnected(const Multigraph& g, int m) {
  return IsTreeConnected(g, m) &&
         g.num_edges() == m * (g.num_vertices() - 1);
}

absl::StatusOr<EdgeSet> MaximalSparseExtension(
    const Multigraph& g, const EdgeSet& f, int m,
    const std::optional<std::vector<int>>& caps, uint64_t seed) {
  const int n = g.num_vertices();
  for (EdgeId id : f) {
    if (!g.has_edge(id)) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", id, " is not in the host graph"));
    }
  }
  if (caps.has_value() && static_cast<int>(caps->size()) != n) {
    return absl::InvalidArgumentError("caps must have one entry per vertex");
  }
  const Multigraph factor = SpanningSubgraph(g, f);
  std::vector<int> deg = factor.Degrees();
  if (caps.has_value()) {
    for (VertexId v = 0; v < n; ++v) {
      if (deg[v] > (*caps)[v]) {
        return absl::InvalidArgumentError(
            absl::StrCat("factor exceeds the cap at vertex ", v));
      }
    }
  }
  PebbleGame game(n, m);
  for (const Edge& e : factor.edges()) {
    if (game.TryInsert(e.u, e.v) < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("factor is not ", m, "-sparse; violating set {",
                       absl::StrJoin(game.blocking_set(), ","), "}"));
    }
  }
  std::vector<int> order;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!f.contains(g.edges()[i].id)) order.push_back(i);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  EdgeSet result = f;
  for (int i : order) {
    const Edge& e = g.edges()[i];
    if (caps.has_value() &&
        (deg[e.u] >= (*caps)[e.u] || deg[e.v] >= (*caps)[e.v])) {
      continue;
    }
    if (game.TryInsert(e.u, e.v) >= 0) {
      result.insert(e.id);
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  return result;
}

EdgeSet SparsifyTcComponents(const Multigraph& f, int m) {
  PebbleGame game(f.num_vertices(), m);
  std::vector<EdgeId> kept;
  for (const Edge& e : f.edges()) {
    if (game.TryInsert(e.u, e.v) >= 0) kept.push_back(e.id);
  }
  return EdgeSet(std::move(kept));
}

namespace {

// Matroid partitioning of the edges of a graph into m forests.
class ForestPartition {
 public:
  ForestPartition(const Multigraph& g, int m)
      : g_(g), m_(m), assign_(g.num_edges(), -1) {}

  // Tries to place the edge at `position`, rearranging earlier placements
  // along a shortest augmenting path.
  bool Insert(int position) {
    const int count = g_.num_edges();
    std::vector<int> label_from(count, -2);
    std::vector<int> label_forest(count, -1);
    std::deque<int> queue = {position};
    label_from[position] = -1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      const Edge& e = g_.edges()[x];
      for (int i = 0; i < m_; ++i) {
        if (i == assign_[x]) continue;
        std::vector<int> path = ForestPath(i, e.u, e.v);
        if (path.empty()) {
          Augment(x, i, label_from, label_forest);
          return true;
        }
        for (int y : path) {
          if (label_from[y] != -2) continue;
          label_from[y] = x;
          label_forest[y] = i;
          queue.push_back(y);
        }
      }
    }
    return false;
  }

  int forest_of(int position) const { return assign_[position]; }

 private:
  void Augment(int x, int forest, const std::vector<int>& label_from,
               const std::vector<int>& label_forest) {
    int cur = x;
    int target = forest;
    while (true) {
      assign_[cur] = target;
      if (label_from[cur] == -1) return;
      target = label_forest[cur];
      cur = label_from[cur];
    }
  }

  // Edge positions on the a-b path of forest i; empty if a, b unconnected.
  std::vector<int> ForestPath(int i, VertexId a, VertexId b) const {
    const int n = g_.num_vertices();
    std::vector<std::vector<int>> adj(n);
    for (int p = 0; p < g_.num_edges(); ++p) {
      if (assign_[p] != i) continue;
      adj[g_.edges()[p].u].push_back(p);
      adj[g_.edges()[p].v].push_back(p);
    }
    std::vector<int> via(n, -2);
    via[a] = -1;
    std::deque<VertexId> queue = {a};
    while (!queue.empty() && via[b] == -2) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (int p : adj[x]) {
        const VertexId y = g_.edges()[p].Other(x);
        if (via[y] != -2) continue;
        via[y] = p;
        queue.push_back(y);
      }
    }
    std::vector<int> path;
    if (via[b] == -2) return path;
    for (VertexId w = b; w != a; w = g_.edges()[via[w]].Other(w)) {
      path.push_back(via[w]);
    }
    return path;
  }

  const Multigraph& g_;
  int m_;
  std::vector<int> assign_;
};

}  // namespace

std::optional<std::vector<EdgeSet>> SpanningTreePacking(const Multigraph& g,
                                                        int m) {
  const int n = g.num_vertices();
  if (n == 0) return std::nullopt;
  ForestPartition partition(g, m);
  int placed = 0;
  for (int p = 0; p < g.num_edges() && placed < m * (n - 1); ++p) {
    placed += partition.Insert(p);
  }
  if (placed != m * (n - 1)) return std::nullopt;
  std::vector<std::vector<EdgeId>> trees(m);
  for (int p = 0; p < g.num_edges(); ++p) {
    const int f = partition.forest_of(p);
    if (f >= 0) trees[f].push_back(g.edges()[p].id);
  }
  std::vector<EdgeSet> out;
  for (auto& t : trees) out.emplace_back(std::move(t));
  return out;
}

nlohmann::json ToJson(const TcPartition& p) {
  return {{"m", p.m}, {"blocks", ToJson(p.blocks)}, {"omega", p.omega}};
}

}  // namespace tcf
