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

#ifndef TCF_TOOLS_CLI_H_
#define TCF_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tcf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;  // conclusion failed or red alert
inline constexpr int kExitUsage = 2;

// Runs one command line. Machine output goes to `out`, the human summary
// and diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tcf::cli

#endif  // TCF_TOOLS_CLI_H_
