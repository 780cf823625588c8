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

#include "tcf/oracles.h"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <functional>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "tcf/io.h"
#include "tcf/sparsity.h"

namespace tcf {
namespace {

std::vector<uint64_t> AdjacencyMasks(const Multigraph& g) {
  std::vector<uint64_t> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= uint64_t{1} << e.v;
    adj[e.v] |= uint64_t{1} << e.u;
  }
  return adj;
}

int CountComponents(const std::vector<uint64_t>& adj, uint64_t alive) {
  int count = 0;
  while (alive != 0) {
    uint64_t frontier = alive & (~alive + 1);
    uint64_t reached = frontier;
    while (frontier != 0) {
      uint64_t next = 0;
      for (uint64_t f = frontier; f != 0; f &= f - 1) {
        next |= adj[std::countr_zero(f)];
      }
      next &= alive & ~reached;
      reached |= next;
      frontier = next;
    }
    alive &= ~reached;
    ++count;
  }
  return count;
}

uint64_t FullMask(int n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

std::vector<std::vector<int>> Multiplicities(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  return mult;
}

// Union-find over a fixed vertex count, used by the searches below.
struct Dsu {
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool Join(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

bool ConnectedOn(int n, const std::vector<Edge>& edges,
                 const std::vector<int>& positions) {
  if (n == 0) return false;
  Dsu dsu(n);
  int parts = n;
  for (int p : positions) parts -= dsu.Join(edges[p].u, edges[p].v);
  return parts == 1;
}

Multigraph Sub(const Multigraph& g, const std::vector<int>& positions) {
  std::vector<EdgeId> ids;
  ids.reserve(positions.size());
  for (int p : positions) ids.push_back(g.edges()[p].id);
  return SpanningSubgraph(g, EdgeSet(std::move(ids)));
}

bool TreeConnectedByPacking(const Multigraph& h, int m) {
  if (m <= 0) return true;
  return SpanningTreePacking(h, m).has_value();
}

}  // namespace

absl::StatusOr<Toughness> ComputeToughness(const Multigraph& g,
                                           EnumerationOrder order, int limit) {
  const int n = g.num_vertices();
  if (n > limit || n > 62) {
    return absl::ResourceExhaustedError(
        absl::StrCat("toughness limited to n <= ", limit, ", got ", n));
  }
  const std::vector<uint64_t> adj = AdjacencyMasks(g);
  const uint64_t full = FullMask(n);
  Toughness best;
  best.infinite = true;
  const uint64_t total = uint64_t{1} << n;
  for (uint64_t i = 0; i < total; ++i) {
    const uint64_t s = order == EnumerationOrder::kAscending ? i : total - 1 - i;
    const int parts = CountComponents(adj, full & ~s);
    if (parts < 2) continue;
    const Rational ratio(std::popcount(s), parts);
    if (best.infinite || ratio < best.value) {
      best.infinite = false;
      best.value = ratio;
      best.witness = VertexSet::FromMask(s);
    }
  }
  return best;
}

bool IsTough(const Toughness& t, const Rational& threshold) {
  return t.infinite || t.value >= threshold;
}

int ComponentsAfterRemoval(const Multigraph& g, uint64_t removed) {
  return CountComponents(AdjacencyMasks(g),
                         FullMask(g.num_vertices()) & ~removed);
}

absl::StatusOr<ComponentBoundCheck> CheckComponentBound(
    const Multigraph& g, const Rational& slope, const Rational& offset,
    int limit) {
  const int n = g.num_vertices();
  if (n > limit || n > 62) {
    return absl::ResourceExhaustedError(
        absl::StrCat("subset enumeration limited to n <= ", limit));
  }
  const std::vector<uint64_t> adj = AdjacencyMasks(g);
  const uint64_t full = FullMask(n);
  for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
    const int parts = CountComponents(adj, full & ~s);
    if (Rational(parts) > slope * std::popcount(s) + offset) {
      return ComponentBoundCheck{false, VertexSet::FromMask(s), parts};
    }
  }
  return ComponentBoundCheck{};
}

DegreeSpec DegreeSpec::Uniform(int n, std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return {std::vector<std::vector<int>>(n, values)};
}

bool DegreeSpec::Allows(VertexId v, int d) const {
  return std::find(allowed[v].begin(), allowed[v].end(), d) !=
         allowed[v].end();
}

namespace {

class FactorSearcher {
 public:
  FactorSearcher(const Multigraph& g, const FactorQuery& q)
      : g_(g), q_(q), n_(g.num_vertices()) {
    for (int p = 0; p < g.num_edges(); ++p) order_.push_back(p);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const Edge& x = g.edges()[a];
      const Edge& y = g.edges()[b];
      return std::minmax(x.u, x.v) < std::minmax(y.u, y.v);
    });
    deg_.assign(n_, 0);
    remaining_ = g.Degrees();
    state_.assign(g.num_edges(), kUndecided);
    allowed_ = q.spec.allowed;
    for (auto& a : allowed_) std::sort(a.begin(), a.end());
  }

  FactorSearch Run() {
    FactorSearch out;
    if (static_cast<int>(allowed_.size()) != n_) {
      out.exhausted = true;
      return out;
    }
    const bool found = Dfs(0);
    out.nodes = nodes_;
    out.exhausted = !aborted_;
    if (found) {
      out.factor = result_;
      out.exhausted = true;
    }
    return out;
  }

 private:
  enum State : char { kUndecided, kIn, kOut };

  bool Feasible(VertexId v) const {
    const int lo = deg_[v];
    const int hi = deg_[v] + remaining_[v];
    for (int d : allowed_[v]) {
      if (d >= lo && d <= hi) return true;
    }
    return false;
  }

  std::vector<int> Positions(bool include_undecided, State want) const {
    std::vector<int> out;
    for (int p = 0; p < g_.num_edges(); ++p) {
      if (state_[p] == want || (include_undecided && state_[p] == kUndecided)) {
        out.push_back(p);
      }
    }
    return out;
  }

  // Necessary conditions that only get harder as edges are excluded.
  bool UpperStillViable() const {
    if (q_.extra == FactorExtra::kNone) return true;
    const std::vector<int> upper = Positions(true, kIn);
    if (q_.extra == FactorExtra::kTreeConnected &&
        static_cast<int>(upper.size()) < q_.m * (n_ - 1)) {
      return false;
    }
    return n_ <= 1 || ConnectedOn(n_, g_.edges(), upper);
  }

  // Same for the complement as edges are included.
  bool ComplementStillViable() const {
    if (q_.complement_m <= 0) return true;
    const std::vector<int> upper = Positions(true, kOut);
    if (static_cast<int>(upper.size()) < q_.complement_m * (n_ - 1)) {
      return false;
    }
    return n_ <= 1 || ConnectedOn(n_, g_.edges(), upper);
  }

  bool LeafAccepts() const {
    const std::vector<int> in = Positions(false, kIn);
    for (VertexId v = 0; v < n_; ++v) {
      if (!std::binary_search(allowed_[v].begin(), allowed_[v].end(),
                              deg_[v])) {
        return false;
      }
    }
    const Multigraph h = Sub(g_, in);
    switch (q_.extra) {
      case FactorExtra::kNone:
        break;
      case FactorExtra::kConnected:
        if (!IsConnected(h)) return false;
        break;
      case FactorExtra::kTreeConnected:
        if (!TreeConnectedByPacking(h, q_.m)) return false;
        break;
      case FactorExtra::kTwoEdgeConnected:
        if (!StructureChecks(h).two_edge_connected) return false;
        break;
      case FactorExtra::kTwoConnected:
        if (!StructureChecks(h).two_connected) return false;
        break;
    }
    if (q_.complement_m > 0 &&
        !TreeConnectedByPacking(Sub(g_, Positions(false, kOut)),
                                q_.complement_m)) {
      return false;
    }
    return true;
  }

  bool Dfs(size_t index) {
    if (++nodes_ > q_.node_limit) {
      aborted_ = true;
      return false;
    }
    if (index == order_.size()) {
      if (!LeafAccepts()) return false;
      std::vector<EdgeId> ids;
      for (int p : Positions(false, kIn)) ids.push_back(g_.edges()[p].id);
      result_ = EdgeSet(std::move(ids));
      return true;
    }
    const int p = order_[index];
    const Edge& e = g_.edges()[p];
    --remaining_[e.u];
    --remaining_[e.v];
    bool found = false;
    // Include.
    ++deg_[e.u];
    ++deg_[e.v];
    state_[p] = kIn;
    if (Feasible(e.u) && Feasible(e.v) && ComplementStillViable()) {
      found = Dfs(index + 1);
    }
    --deg_[e.u];
    --deg_[e.v];
    // Exclude.
    if (!found && !aborted_ && !q_.required.contains(e.id)) {
      state_[p] = kOut;
      if (Feasible(e.u) && Feasible(e.v) && UpperStillViable()) {
        found = Dfs(index + 1);
      }
    }
    state_[p] = kUndecided;
    ++remaining_[e.u];
    ++remaining_[e.v];
    return found;
  }

  const Multigraph& g_;
  const FactorQuery& q_;
  int n_;
  std::vector<int> order_;
  std::vector<int> deg_;
  std::vector<int> remaining_;
  std::vector<State> state_;
  std::vector<std::vector<int>> allowed_;
  EdgeSet result_;
  int64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

FactorSearch BruteFactor(const Multigraph& g, const FactorQuery& query) {
  FactorSearcher searcher(g, query);
  FactorSearch out = searcher.Run();
  if (out.factor.has_value()) {
    const std::vector<int> deg = SpanningSubgraph(g, *out.factor).Degrees();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      assert(query.spec.Allows(v, deg[v]));
    }
  }
  return out;
}

absl::StatusOr<BipartiteIndex> ComputeBipartiteIndex(const Multigraph& g,
                                                     EnumerationOrder order,
                                                     int limit) {
  const int n = g.num_vertices();
  if (n > limit || n > 62) {
    return absl::ResourceExhaustedError(
        absl::StrCat("bipartite index limited to n <= ", limit));
  }
  if (n <= 1) return BipartiteIndex{0, VertexSet::FromMask(FullMask(n))};
  // Vertex n-1 stays on side 0; 2^(n-1) bipartitions.
  const uint64_t count = uint64_t{1} << (n - 1);
  int best_cut = -1;
  uint64_t best_side = 0;
  if (order == EnumerationOrder::kAscending) {
    // Gray-code walk with incremental cut updates.
    std::vector<std::vector<std::pair<VertexId, int>>> nbrs(n);
    const auto mult = Multiplicities(g);
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w = 0; w < n; ++w) {
        if (mult[v][w] > 0) nbrs[v].emplace_back(w, mult[v][w]);
      }
    }
    uint64_t side = 0;
    int cut = 0;
    best_cut = 0;
    for (uint64_t i = 1; i < count; ++i) {
      const int v = std::countr_zero(i);
      const bool v_side = (side >> v) & 1;
      for (auto [w, k] : nbrs[v]) {
        cut += (((side >> w) & 1) == v_side) ? k : -k;
      }
      side ^= uint64_t{1} << v;
      if (cut > best_cut) {
        best_cut = cut;
        best_side = side;
      }
    }
  } else {
    for (uint64_t i = 0; i < count; ++i) {
      const uint64_t side = count - 1 - i;
      int cut = 0;
      for (const Edge& e : g.edges()) {
        cut += ((side >> e.u) & 1) != ((side >> e.v) & 1);
      }
      if (cut > best_cut) {
        best_cut = cut;
        best_side = side;
      }
    }
  }
  return BipartiteIndex{g.num_edges() - best_cut,
                        VertexSet::FromMask(best_side)};
}

namespace {

// Distance from a to b avoiding the edge at position `skip`; -1 if none.
int DistanceAvoiding(const Multigraph& g,
                     const std::vector<std::vector<int>>& inc, VertexId a,
                     VertexId b, int skip) {
  std::vector<int> dist(g.num_vertices(), -1);
  dist[a] = 0;
  std::deque<VertexId> queue = {a};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (x == b) return dist[x];
    for (int p : inc[x]) {
      if (p == skip) continue;
      const VertexId y = g.edges()[p].Other(x);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return -1;
}

bool ConnectedWithout(const Multigraph& g, int skip_edge, VertexId skip_vertex) {
  const int n = g.num_vertices();
  Dsu dsu(n);
  int parts = n - (skip_vertex >= 0 ? 1 : 0);
  for (int p = 0; p < g.num_edges(); ++p) {
    const Edge& e = g.edges()[p];
    if (p == skip_edge || e.u == skip_vertex || e.v == skip_vertex) continue;
    parts -= dsu.Join(e.u, e.v);
  }
  return parts == 1;
}

}  // namespace

StructureReport StructureChecks(const Multigraph& g, EnumerationOrder order) {
  StructureReport r;
  const int n = g.num_vertices();
  const auto inc = g.IncidentPositions();
  const int count = g.num_edges();
  for (int i = 0; i < count; ++i) {
    const int p = order == EnumerationOrder::kAscending ? i : count - 1 - i;
    const Edge& e = g.edges()[p];
    const int d = DistanceAvoiding(g, inc, e.u, e.v, p);
    if (d >= 0 && (!r.girth || d + 1 < *r.girth)) r.girth = d + 1;
  }
  r.connected = n >= 1 && IsConnected(g);
  if (r.connected && n >= 2) {
    r.two_edge_connected = true;
    for (int p = 0; p < count && r.two_edge_connected; ++p) {
      r.two_edge_connected = ConnectedWithout(g, p, -1);
    }
  }
  if (r.connected && n >= 3) {
    r.two_connected = true;
    for (VertexId v = 0; v < n && r.two_connected; ++v) {
      r.two_connected = ConnectedWithout(g, -1, v);
    }
  }
  r.components_eulerian = true;
  for (int d : g.Degrees()) r.components_eulerian &= d % 2 == 0;
  return r;
}

bool IsBipartite(const Multigraph& g) {
  const int n = g.num_vertices();
  const auto inc = g.IncidentPositions();
  std::vector<int> color(n, -1);
  for (VertexId s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<VertexId> queue = {s};
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (int p : inc[x]) {
        const VertexId y = g.edges()[p].Other(x);
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool IsSparseBySubsets(const Multigraph& g, int m) {
  const int n = g.num_vertices();
  assert(n <= 30);
  const auto mult = Multiplicities(g);
  std::vector<int> within(size_t{1} << n, 0);
  for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
    const int v = std::countr_zero(s);
    const uint64_t rest = s & (s - 1);
    int add = 0;
    for (uint64_t r = rest; r != 0; r &= r - 1) add += mult[v][std::countr_zero(r)];
    within[s] = within[rest] + add;
    if (within[s] > m * (std::popcount(s) - 1)) return false;
  }
  return true;
}

namespace {

// Calls visit(block_of, block_count) for every set partition of 0..n-1.
// Stops early when visit returns false; returns whether it ran to the end.
bool ForEachPartition(int n,
                      const std::function<bool(const std::vector<int>&, int)>&
                          visit) {
  std::vector<int> block(n, 0);
  std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
    if (i == n) return visit(block, used);
    for (int b = 0; b <= used && b < n; ++b) {
      block[i] = b;
      if (!rec(i + 1, std::max(used, b + 1))) return false;
    }
    return true;
  };
  if (n == 0) return visit(block, 0);
  block[0] = 0;
  return rec(1, 1);
}

}  // namespace

bool IsTreeConnectedByPartitions(const Multigraph& g, int m) {
  const int n = g.num_vertices();
  if (n == 0) return false;
  return ForEachPartition(n, [&](const std::vector<int>& block, int parts) {
    int crossing = 0;
    for (const Edge& e : g.edges()) crossing += block[e.u] != block[e.v];
    return crossing >= m * (parts - 1);
  });
}

Partition TcComponentsBySubsets(const Multigraph& g, int m) {
  const int n = g.num_vertices();
  std::vector<uint64_t> subsets;
  for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(), [](uint64_t a, uint64_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  uint64_t covered = 0;
  Partition p;
  for (uint64_t s : subsets) {
    if (s & covered) continue;
    const VertexSet x = VertexSet::FromMask(s);
    if (!IsTreeConnectedByPartitions(InducedSubgraph(g, x), m)) continue;
    covered |= s;
    p.blocks.push_back(x.members());
  }
  p.Normalize();
  return p;
}

int OmegaBySubsets(const Multigraph& g, int m) {
  if (g.is_null()) return 0;
  const Partition p = TcComponentsBySubsets(g, m);
  return m * static_cast<int>(p.blocks.size()) - CrossingCount(g, p);
}

bool HasTreePackingBySearch(const Multigraph& g, int m) {
  const int n = g.num_vertices();
  if (n == 0) return false;
  if (n == 1) return true;
  const int need = m * (n - 1);
  if (g.num_edges() < need) return false;
  // label[t][v]: component of v in tree t.
  std::vector<std::vector<int>> label(m, std::vector<int>(n));
  for (auto& l : label) std::iota(l.begin(), l.end(), 0);
  std::vector<int> size(m, 0);
  std::function<bool(int, int)> rec = [&](int p, int placed) -> bool {
    if (placed == need) return true;
    if (p == g.num_edges() || g.num_edges() - p < need - placed) return false;
    const Edge& e = g.edges()[p];
    for (int t = 0; t < m; ++t) {
      // Trees are interchangeable: only open tree t if t-1 is nonempty.
      if (t > 0 && size[t - 1] == 0) break;
      const int a = label[t][e.u];
      const int b = label[t][e.v];
      if (a == b || size[t] == n - 1) continue;
      std::vector<int> saved = label[t];
      for (int& x : label[t]) {
        if (x == b) x = a;
      }
      ++size[t];
      if (rec(p + 1, placed + 1)) return true;
      --size[t];
      label[t] = std::move(saved);
    }
    return rec(p + 1, placed);
  };
  return rec(0, 0);
}

SubsetEdgeCounter::SubsetEdgeCounter(int n, int m)
    : n_(n), m_(m), count_(size_t{1} << n, 0), limit_(size_t{1} << n, 0) {
  assert(n <= kSubsetOracleLimit);
  for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
    limit_[s] = m * (std::popcount(s) - 1);
  }
}

bool SubsetEdgeCounter::TryAdd(VertexId u, VertexId v) {
  const uint64_t pair = (uint64_t{1} << u) | (uint64_t{1} << v);
  const uint64_t rest = FullMask(n_) & ~pair;
  for (uint64_t sub = rest;; sub = (sub - 1) & rest) {
    if (count_[sub | pair] + 1 > limit_[sub | pair]) return false;
    if (sub == 0) break;
  }
  for (uint64_t sub = rest;; sub = (sub - 1) & rest) {
    ++count_[sub | pair];
    if (sub == 0) break;
  }
  return true;
}

void SubsetEdgeCounter::Remove(VertexId u, VertexId v) {
  const uint64_t pair = (uint64_t{1} << u) | (uint64_t{1} << v);
  const uint64_t rest = FullMask(n_) & ~pair;
  for (uint64_t sub = rest;; sub = (sub - 1) & rest) {
    --count_[sub | pair];
    if (sub == 0) break;
  }
}

absl::StatusOr<int> MaxCappedSparseSuperset(const Multigraph& g,
                                            const EdgeSet& f,
                                            const std::vector<int>& caps,
                                            int m) {
  const int n = g.num_vertices();
  if (n > kSubsetOracleLimit) {
    return absl::ResourceExhaustedError(
        absl::StrCat("exhaustive search limited to n <= ", kSubsetOracleLimit));
  }
  if (n == 0) return 0;
  SubsetEdgeCounter counter(n, m);
  std::vector<int> deg(n, 0);
  std::vector<int> candidates;
  int base = 0;
  for (int p = 0; p < g.num_edges(); ++p) {
    const Edge& e = g.edges()[p];
    if (!f.contains(e.id)) {
      candidates.push_back(p);
      continue;
    }
    if (!counter.TryAdd(e.u, e.v)) {
      return absl::InvalidArgumentError("factor is not sparse");
    }
    ++deg[e.u];
    ++deg[e.v];
    ++base;
  }
  int slack_total = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] > caps[v]) {
      return absl::InvalidArgumentError("factor exceeds caps");
    }
    slack_total += caps[v] - deg[v];
  }
  const int target = m * (n - 1) - base;
  int best = 0;
  std::function<void(size_t, int)> rec = [&](size_t i, int taken) {
    best = std::max(best, taken);
    if (best == target || i == candidates.size()) return;
    const int room = std::min<int>(candidates.size() - i, slack_total / 2);
    if (taken + room <= best) return;
    const Edge& e = g.edges()[candidates[i]];
    if (deg[e.u] < caps[e.u] && deg[e.v] < caps[e.v] &&
        counter.TryAdd(e.u, e.v)) {
      ++deg[e.u];
      ++deg[e.v];
      slack_total -= 2;
      rec(i + 1, taken + 1);
      slack_total += 2;
      --deg[e.u];
      --deg[e.v];
      counter.Remove(e.u, e.v);
    }
    if (best < target) rec(i + 1, taken);
  };
  rec(0, 0);
  return base + best;
}

absl::StatusOr<bool> BruteTcFactorExists(const Multigraph& g, const EdgeSet& f,
                                         const std::vector<int>& caps, int m,
                                         int64_t node_limit) {
  const int n = g.num_vertices();
  if (n == 0) return false;
  std::vector<int> deg(n, 0);
  std::vector<int> chosen;
  std::vector<int> candidates;
  for (int p = 0; p < g.num_edges(); ++p) {
    const Edge& e = g.edges()[p];
    if (f.contains(e.id)) {
      chosen.push_back(p);
      ++deg[e.u];
      ++deg[e.v];
    } else {
      candidates.push_back(p);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] > caps[v]) return false;
  }
  if (n == 1) return true;
  int64_t nodes = 0;
  bool aborted = false;
  std::vector<char> excluded(g.num_edges(), 0);
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (++nodes > node_limit) {
      aborted = true;
      return false;
    }
    if (static_cast<int>(chosen.size() + candidates.size() - i) < m * (n - 1)) {
      return false;
    }
    if (i == candidates.size()) {
      for (int p = 0; p < g.num_edges(); ++p) {
        const Edge& e = g.edges()[p];
        if (excluded[p] && deg[e.u] < caps[e.u] && deg[e.v] < caps[e.v]) {
          return false;  // not maximal; a superset is visited elsewhere
        }
      }
      return TreeConnectedByPacking(Sub(g, chosen), m);
    }
    const int p = candidates[i];
    const Edge& e = g.edges()[p];
    if (deg[e.u] < caps[e.u] && deg[e.v] < caps[e.v]) {
      ++deg[e.u];
      ++deg[e.v];
      chosen.push_back(p);
      const bool found = rec(i + 1);
      chosen.pop_back();
      --deg[e.u];
      --deg[e.v];
      if (found || aborted) return found;
    }
    excluded[p] = 1;
    std::vector<int> upper = chosen;
    upper.insert(upper.end(), candidates.begin() + i + 1, candidates.end());
    bool found = false;
    if (ConnectedOn(n, g.edges(), upper)) found = rec(i + 1);
    excluded[p] = 0;
    return found;
  };
  const bool found = rec(0);
  if (aborted) {
    return absl::ResourceExhaustedError("tree-connected factor search budget");
  }
  return found;
}

namespace {

int MaximumMatching(const Multigraph& g, const std::vector<int>& positions,
                    std::vector<int>& best) {
  std::vector<int> current;
  std::vector<char> used(g.num_vertices(), 0);
  int best_size = 0;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (static_cast<int>(current.size()) > best_size) {
      best_size = static_cast<int>(current.size());
      best = current;
    }
    if (i == positions.size()) return;
    if (static_cast<int>(current.size() + positions.size() - i) <= best_size) {
      return;
    }
    const Edge& e = g.edges()[positions[i]];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      current.push_back(positions[i]);
      rec(i + 1);
      current.pop_back();
      used[e.u] = used[e.v] = 0;
    }
    rec(i + 1);
  };
  rec(0);
  return best_size;
}

// Edge ids of the path between a and b inside the tree with edge set `tree`.
std::vector<EdgeId> TreePath(const Multigraph& g, const EdgeSet& tree,
                             VertexId a, VertexId b) {
  const int n = g.num_vertices();
  std::vector<std::vector<const Edge*>> adj(n);
  for (EdgeId id : tree) {
    const Edge& e = g.edge(id);
    adj[e.u].push_back(&e);
    adj[e.v].push_back(&e);
  }
  std::vector<const Edge*> via(n, nullptr);
  std::vector<char> seen(n, 0);
  seen[a] = 1;
  std::deque<VertexId> queue = {a};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const Edge* e : adj[x]) {
      const VertexId y = e->Other(x);
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = e;
      queue.push_back(y);
    }
  }
  std::vector<EdgeId> path;
  for (VertexId w = b; w != a && via[w] != nullptr; w = via[w]->Other(w)) {
    path.push_back(via[w]->id);
  }
  return path;
}

}  // namespace

absl::StatusOr<Lemma52Result> Lemma52Construction(const Multigraph& g,
                                                  const EdgeSet& f, int k,
                                                  bool check_toughness) {
  const int n = g.num_vertices();
  const int k0 = k - 1;
  Lemma52Result r;
  if (k < 1) return absl::InvalidArgumentError("k must be positive");
  if (n > kSubsetOracleLimit) {
    return absl::ResourceExhaustedError("bipartition search limited in size");
  }
  if (n < 4 * k - 2) {
    r.outcome = Lemma52Result::Outcome::kHypothesisFailed;
    r.detail = absl::StrCat("order ", n, " below 4k-2 = ", 4 * k - 2);
    return r;
  }
  const Multigraph factor = SpanningSubgraph(g, f);
  if (k0 > 0 && !TreeConnectedByPacking(factor, 2 * k - 2)) {
    r.outcome = Lemma52Result::Outcome::kHypothesisFailed;
    r.detail = absl::StrCat("factor is not ", 2 * k - 2, "-tree-connected");
    return r;
  }
  if (check_toughness) {
    auto tough = ComputeToughness(g);
    if (!tough.ok()) return tough.status();
    if (!IsTough(*tough, Rational(4 * k - 3))) {
      r.outcome = Lemma52Result::Outcome::kHypothesisFailed;
      r.detail = absl::StrCat("graph is not ", 4 * k - 3, "-tough");
      return r;
    }
  }
  // Bipartition X, Y with F[X, Y] (k-1)-tree-connected and |X| >= |Y|.
  bool found = false;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n) && !found; ++mask) {
    if (2 * std::popcount(mask) < n) continue;
    std::vector<EdgeId> crossing;
    for (const Edge& e : factor.edges()) {
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) crossing.push_back(e.id);
    }
    const EdgeSet cross(std::move(crossing));
    std::vector<EdgeSet> trees;
    if (k0 > 0) {
      auto packing = SpanningTreePacking(SpanningSubgraph(g, cross), k0);
      if (!packing) continue;
      trees = std::move(*packing);
    }
    found = true;
    r.x = VertexSet::FromMask(mask);
    r.y = VertexSet::FromMask(FullMask(n) & ~mask);
    r.trees = std::move(trees);
  }
  if (!found) {
    r.outcome = Lemma52Result::Outcome::kWitnessNotFound;
    r.detail = "no bipartition with a tree-connected crossing factor";
    return r;
  }
  std::vector<int> inside_x;
  const std::vector<char> in_x = r.x.Indicator(n);
  for (int p = 0; p < g.num_edges(); ++p) {
    if (in_x[g.edges()[p].u] && in_x[g.edges()[p].v]) inside_x.push_back(p);
  }
  std::vector<int> matching;
  r.maximum_matching = MaximumMatching(g, inside_x, matching);
  const int t = 4 * k0 + 1;
  r.matching_bound_holds = Rational(r.maximum_matching) >=
                           Rational(t - 1, 2 * t + 2) * static_cast<int>(r.x.size());
  if (r.maximum_matching < k0) {
    r.outcome = Lemma52Result::Outcome::kWitnessNotFound;
    r.detail = "matching in G[X] smaller than k-1";
    return r;
  }
  std::vector<EdgeId> chosen;
  for (int i = 0; i < k0; ++i) {
    const Edge& e = g.edges()[matching[i]];
    chosen.push_back(e.id);
    std::vector<EdgeId> cycle = TreePath(g, r.trees[i], e.u, e.v);
    cycle.push_back(e.id);
    r.odd_cycles.push_back(std::move(cycle));
  }
  r.matching = EdgeSet(chosen);
  auto bi = ComputeBipartiteIndex(SpanningSubgraph(g, f.Union(r.matching)));
  if (!bi.ok()) return bi.status();
  r.bipartite_index = bi->value;
  r.outcome = Lemma52Result::Outcome::kFound;
  return r;
}

nlohmann::json ToJson(const Toughness& t) {
  nlohmann::json j = {{"infinite", t.infinite}, {"witness", ToJson(t.witness)}};
  j["value"] = t.infinite ? "inf" : ToString(t.value);
  return j;
}

nlohmann::json ToJson(const StructureReport& s) {
  nlohmann::json j = {{"connected", s.connected},
                      {"two_edge_connected", s.two_edge_connected},
                      {"two_connected", s.two_connected},
                      {"components_eulerian", s.components_eulerian}};
  j["girth"] = s.girth ? nlohmann::json(*s.girth) : nlohmann::json("inf");
  return j;
}

nlohmann::json ToJson(const Lemma52Result& r) {
  static constexpr const char* kNames[] = {"found", "witness-not-found",
                                           "hypothesis-failed"};
  nlohmann::json trees = nlohmann::json::array();
  for (const EdgeSet& t : r.trees) trees.push_back(ToJson(t));
  return {{"outcome", kNames[static_cast<int>(r.outcome)]},
          {"detail", r.detail},
          {"x", ToJson(r.x)},
          {"y", ToJson(r.y)},
          {"matching", ToJson(r.matching)},
          {"maximum_matching", r.maximum_matching},
          {"trees", trees},
          {"odd_cycles", r.odd_cycles},
          {"bipartite_index", r.bipartite_index},
          {"matching_bound_holds", r.matching_bound_holds}};
}

}  // namespace tcf
