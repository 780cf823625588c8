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

#include "tcf/generators.h"

#include <algorithm>
#include <set>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"

namespace tcf {
namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

Multigraph FromPairs(int n, const Pairs& pairs) {
  return *Multigraph::Build(n, pairs);
}

absl::StatusOr<int> ParseInt(const std::string& s, int lo, int hi) {
  int v = 0;
  if (!absl::SimpleAtoi(s, &v) || v < lo || v > hi) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected an integer in [", lo, ", ", hi, "], got '", s, "'"));
  }
  return v;
}

absl::StatusOr<std::vector<int>> ParseList(const std::string& s, int lo, int hi) {
  std::vector<int> out;
  for (absl::string_view part : absl::StrSplit(s, ',', absl::SkipEmpty())) {
    auto v = ParseInt(std::string(part), lo, hi);
    if (!v.ok()) return v.status();
    out.push_back(*v);
  }
  if (out.empty()) return absl::InvalidArgumentError("empty list");
  return out;
}

absl::StatusOr<double> ParseProbability(const std::string& s) {
  double p = 0;
  if (!absl::SimpleAtod(s, &p) || p < 0 || p > 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected a probability, got '", s, "'"));
  }
  return p;
}

}  // namespace

int UniformInt(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

bool Bernoulli(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Multigraph Complete(int n) {
  Pairs pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return FromPairs(n, pairs);
}

Multigraph CompleteMultipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (size_t i = 0; i < parts.size(); ++i) {
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  }
  const int n = static_cast<int>(part_of.size());
  Pairs pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) pairs.emplace_back(u, v);
    }
  }
  return FromPairs(n, pairs);
}

Multigraph Circulant(int n, const std::vector<int>& jumps) {
  std::set<std::pair<int, int>> seen;
  Pairs pairs;
  for (int j : jumps) {
    for (int u = 0; u < n; ++u) {
      const int v = ((u + j) % n + n) % n;
      if (u == v) continue;
      const auto key = std::minmax(u, v);
      if (seen.insert(key).second) pairs.emplace_back(key.first, key.second);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return FromPairs(n, pairs);
}

Multigraph Cycle(int n) {
  Pairs pairs;
  for (int u = 0; u + 1 < n; ++u) pairs.emplace_back(u, u + 1);
  if (n >= 3) pairs.emplace_back(0, n - 1);
  return FromPairs(n, pairs);
}

Multigraph Path(int n) {
  Pairs pairs;
  for (int u = 0; u + 1 < n; ++u) pairs.emplace_back(u, u + 1);
  return FromPairs(n, pairs);
}

Multigraph Petersen() {
  Pairs pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return FromPairs(10, pairs);
}

Multigraph RandomGnp(int n, double p, Rng& rng) {
  Pairs pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (Bernoulli(rng, p)) pairs.emplace_back(u, v);
    }
  }
  return FromPairs(n, pairs);
}

Multigraph RandomMultigraph(int n, int edges, Rng& rng) {
  Pairs pairs;
  if (n >= 2) {
    for (int i = 0; i < edges; ++i) {
      const int u = UniformInt(rng, 0, n - 1);
      int v = UniformInt(rng, 0, n - 2);
      if (v >= u) ++v;
      pairs.emplace_back(u, v);
    }
  }
  return FromPairs(n, pairs);
}

Multigraph RandomNearRegular(int n, int d, Rng& rng) {
  d = std::clamp(d, 0, std::max(0, n - 1));
  std::set<std::pair<int, int>> edges;
  std::vector<int> deg(n, 0);
  // Repeatedly join two random deficient vertices; give up on a pair after
  // a bounded number of tries and move on.
  for (int round = 0; round < 50 * n * std::max(1, d); ++round) {
    std::vector<int> open;
    for (int v = 0; v < n; ++v) {
      if (deg[v] < d) open.push_back(v);
    }
    if (open.size() < 2) break;
    const int u = open[rng() % open.size()];
    const int v = open[rng() % open.size()];
    if (u == v) continue;
    const auto key = std::minmax(u, v);
    if (!edges.insert(key).second) continue;
    ++deg[u];
    ++deg[v];
  }
  return FromPairs(n, Pairs(edges.begin(), edges.end()));
}

Generated PlantedTwoFactor(int n, double p, int min_cycle, Rng& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  // Cut the random order into cycles of length >= min_cycle.
  std::vector<int> lengths;
  int left = n;
  while (left >= 2 * min_cycle) {
    const int len = UniformInt(rng, min_cycle, left - min_cycle);
    lengths.push_back(len);
    left -= len;
  }
  if (left > 0) lengths.push_back(left);
  std::set<std::pair<int, int>> planted;
  int start = 0;
  for (int len : lengths) {
    for (int i = 0; i < len && len >= 3; ++i) {
      const int u = order[start + i];
      const int v = order[start + (i + 1) % len];
      planted.insert(std::minmax(u, v));
    }
    start += len;
  }
  Pairs pairs(planted.begin(), planted.end());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!planted.count({u, v}) && Bernoulli(rng, p)) pairs.emplace_back(u, v);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  Generated out;
  out.graph = FromPairs(n, pairs);
  out.family = "planted2f";
  std::vector<EdgeId> ids;
  for (const Edge& e : out.graph.edges()) {
    if (planted.count(std::minmax(e.u, e.v))) ids.push_back(e.id);
  }
  out.planted = EdgeSet(std::move(ids));
  return out;
}

absl::StatusOr<Generated> Generate(absl::string_view family,
                                   const std::vector<std::string>& params,
                                   uint64_t seed) {
  constexpr int kMaxOrder = 4096;
  Rng rng(seed);
  Generated out;
  out.family = std::string(family);
  auto need = [&](size_t lo, size_t hi) -> absl::Status {
    if (params.size() < lo || params.size() > hi) {
      return absl::InvalidArgumentError(absl::StrCat(
          family, " takes ", lo, lo == hi ? "" : absl::StrCat("-", hi),
          " parameters, got ", params.size()));
    }
    return absl::OkStatus();
  };
  if (family == "complete" || family == "cycle" || family == "path") {
    if (auto s = need(1, 1); !s.ok()) return s;
    auto n = ParseInt(params[0], 0, kMaxOrder);
    if (!n.ok()) return n.status();
    out.graph = family == "complete" ? Complete(*n)
                : family == "cycle"  ? Cycle(*n)
                                     : Path(*n);
  } else if (family == "multipartite") {
    if (auto s = need(1, 1); !s.ok()) return s;
    auto parts = ParseList(params[0], 1, kMaxOrder);
    if (!parts.ok()) return parts.status();
    out.graph = CompleteMultipartite(*parts);
  } else if (family == "circulant") {
    if (auto s = need(2, 2); !s.ok()) return s;
    auto n = ParseInt(params[0], 1, kMaxOrder);
    if (!n.ok()) return n.status();
    auto jumps = ParseList(params[1], 1, kMaxOrder);
    if (!jumps.ok()) return jumps.status();
    out.graph = Circulant(*n, *jumps);
  } else if (family == "petersen") {
    if (auto s = need(0, 0); !s.ok()) return s;
    out.graph = Petersen();
  } else if (family == "gnp") {
    if (auto s = need(2, 2); !s.ok()) return s;
    auto n = ParseInt(params[0], 0, kMaxOrder);
    if (!n.ok()) return n.status();
    auto p = ParseProbability(params[1]);
    if (!p.ok()) return p.status();
    out.graph = RandomGnp(*n, *p, rng);
  } else if (family == "multigraph") {
    if (auto s = need(2, 2); !s.ok()) return s;
    auto n = ParseInt(params[0], 0, kMaxOrder);
    if (!n.ok()) return n.status();
    auto e = ParseInt(params[1], 0, 1 << 20);
    if (!e.ok()) return e.status();
    out.graph = RandomMultigraph(*n, *e, rng);
  } else if (family == "nearregular") {
    if (auto s = need(2, 2); !s.ok()) return s;
    auto n = ParseInt(params[0], 0, kMaxOrder);
    if (!n.ok()) return n.status();
    auto d = ParseInt(params[1], 0, kMaxOrder);
    if (!d.ok()) return d.status();
    out.graph = RandomNearRegular(*n, *d, rng);
  } else if (family == "planted2f") {
    if (auto s = need(1, 2); !s.ok()) return s;
    auto n = ParseInt(params[0], 3, kMaxOrder);
    if (!n.ok()) return n.status();
    double p = 0.3;
    if (params.size() == 2) {
      auto parsed = ParseProbability(params[1]);
      if (!parsed.ok()) return parsed.status();
      p = *parsed;
    }
    out = PlantedTwoFactor(*n, p, 3, rng);
  } else {
    return absl::InvalidArgumentError(absl::StrCat("unknown family '", family, "'"));
  }
  return out;
}

}  // namespace tcf
