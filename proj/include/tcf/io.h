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

#ifndef TCF_IO_H_
#define TCF_IO_H_

#include <string>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "tcf/graph.h"

namespace tcf {

// Edge-list text: a header line "n m" followed by m lines "u v". Blank lines
// and lines starting with '#' are ignored. Errors carry 1-based line numbers.
absl::StatusOr<Multigraph> ParseEdgeList(absl::string_view text);
std::string FormatEdgeList(const Multigraph& g);

// graph6 (simple graphs only). An optional ">>graph6<<" prefix is accepted.
absl::StatusOr<Multigraph> ParseGraph6(absl::string_view text);
absl::StatusOr<std::string> FormatGraph6(const Multigraph& g);

// Reads a file, choosing graph6 for *.g6 and the edge-list format otherwise.
absl::StatusOr<Multigraph> ReadGraphFile(const std::string& path);

nlohmann::json ToJson(const Multigraph& g);
nlohmann::json ToJson(const EdgeSet& s);
nlohmann::json ToJson(const VertexSet& s);
nlohmann::json ToJson(const Partition& p);

absl::StatusOr<Multigraph> MultigraphFromJson(const nlohmann::json& j);

}  // namespace tcf

#endif  // TCF_IO_H_
