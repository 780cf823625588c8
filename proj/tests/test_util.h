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

#ifndef TCF_TESTS_TEST_UTIL_H_
#define TCF_TESTS_TEST_UTIL_H_

#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "tcf/graph.h"

namespace tcf::testing {

inline Multigraph G(int n, std::vector<std::pair<VertexId, VertexId>> edges) {
  auto g = Multigraph::Build(n, edges);
  EXPECT_TRUE(g.ok()) << g.status();
  return *g;
}

// Ids of the edges joining u and v, in id order.
inline std::vector<EdgeId> Between(const Multigraph& g, VertexId u, VertexId v) {
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) out.push_back(e.id);
  }
  return out;
}

inline EdgeId Id(const Multigraph& g, VertexId u, VertexId v) {
  return Between(g, u, v).at(0);
}

// Enumerates the labeled simple graphs on n vertices by edge mask.
inline Multigraph FromMask(int n, uint64_t mask) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1) edges.emplace_back(u, v);
    }
  }
  return G(n, edges);
}

}  // namespace tcf::testing

#endif  // TCF_TESTS_TEST_UTIL_H_
