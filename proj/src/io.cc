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

#include "tcf/io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "absl/strings/numbers.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"

namespace tcf {
namespace {

absl::Status LineError(int line, absl::string_view what) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", what));
}

}  // namespace

absl::StatusOr<Multigraph> ParseEdgeList(absl::string_view text) {
  int n = -1;
  int m = -1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  int line_no = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_no;
    absl::string_view line = absl::StripAsciiWhitespace(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (fields.size() != 2) return LineError(line_no, "expected two integers");
    int a = 0;
    int b = 0;
    if (!absl::SimpleAtoi(fields[0], &a) || !absl::SimpleAtoi(fields[1], &b)) {
      return LineError(line_no, "not an integer");
    }
    if (n < 0) {
      if (a < 0 || b < 0) return LineError(line_no, "negative header value");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<int>(edges.size()) == m) {
      return LineError(line_no, "more edges than declared");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      return LineError(line_no, "endpoint out of range");
    }
    if (a == b) return LineError(line_no, "loop");
    edges.emplace_back(a, b);
  }
  if (n < 0) return absl::InvalidArgumentError("missing header line");
  if (static_cast<int>(edges.size()) != m) {
    return absl::InvalidArgumentError(absl::StrCat(
        "declared ", m, " edges but found ", edges.size()));
  }
  return Multigraph::Build(n, edges);
}

std::string FormatEdgeList(const Multigraph& g) {
  std::string out = absl::StrCat(g.num_vertices(), " ", g.num_edges(), "\n");
  for (const Edge& e : g.edges()) absl::StrAppend(&out, e.u, " ", e.v, "\n");
  return out;
}

absl::StatusOr<Multigraph> ParseGraph6(absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  absl::ConsumePrefix(&text, ">>graph6<<");
  if (text.empty()) return absl::InvalidArgumentError("empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) {
      return absl::InvalidArgumentError("graph6 byte out of range");
    }
  }
  size_t pos = 0;
  auto next = [&]() -> int { return text[pos++] - 63; };
  long long n = 0;
  if (text[0] != 126) {
    n = next();
  } else {
    ++pos;
    if (text.size() < 4) return absl::InvalidArgumentError("truncated size");
    if (text[1] == 126) {
      return absl::InvalidArgumentError("graphs above 258047 vertices");
    }
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  }
  const long long pairs = n * (n - 1) / 2;
  const size_t need = pos + static_cast<size_t>((pairs + 5) / 6);
  if (text.size() != need) {
    return absl::InvalidArgumentError(absl::StrCat(
        "graph6 body has ", text.size() - pos, " bytes, expected ",
        need - pos));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Multigraph::Build(static_cast<int>(n), edges);
}

absl::StatusOr<std::string> FormatGraph6(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n > 258047) return absl::InvalidArgumentError("graph too large");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) {
    if (adj[e.u][e.v]) {
      return absl::InvalidArgumentError("graph6 cannot encode parallel edges");
    }
    adj[e.u][e.v] = adj[e.v][e.u] = 1;
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | adj[i][j];
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

absl::StatusOr<Multigraph> ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (absl::EndsWith(path, ".g6")) return ParseGraph6(buffer.str());
  if (absl::EndsWith(path, ".json")) {
    auto j = nlohmann::json::parse(buffer.str(), nullptr, false);
    if (j.is_discarded()) return absl::InvalidArgumentError("malformed JSON");
    return MultigraphFromJson(j);
  }
  return ParseEdgeList(buffer.str());
}

nlohmann::json ToJson(const Multigraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id, e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

nlohmann::json ToJson(const EdgeSet& s) { return s.members(); }

nlohmann::json ToJson(const VertexSet& s) { return s.members(); }

nlohmann::json ToJson(const Partition& p) { return p.blocks; }

absl::StatusOr<Multigraph> MultigraphFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array()) {
    return absl::InvalidArgumentError("expected {n, edges}");
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) {
      return absl::InvalidArgumentError("edge must be [id, u, v]");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  return Multigraph::FromEdges(j["n"].get<int>(), std::move(edges));
}

}  // namespace tcf
