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

// Graph families for tests, the CLI and counterexample search. Every
// randomized family draws from one std::mt19937_64 seeded by the caller.

#ifndef TCF_GENERATORS_H_
#define TCF_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "tcf/graph.h"

namespace tcf {

using Rng = std::mt19937_64;

Multigraph Complete(int n);
Multigraph CompleteMultipartite(const std::vector<int>& parts);
// Vertex i is adjacent to i +- j (mod n) for each jump j.
Multigraph Circulant(int n, const std::vector<int>& jumps);
Multigraph Cycle(int n);
Multigraph Path(int n);
Multigraph Petersen();

// Each pair independently with probability p.
Multigraph RandomGnp(int n, double p, Rng& rng);
// `edges` uniformly random loopless edges, parallels allowed.
Multigraph RandomMultigraph(int n, int edges, Rng& rng);
// Simple graph with every degree in {d - 1, d}, built by random pairing
// with repair; the degree sum decides which vertices fall short.
Multigraph RandomNearRegular(int n, int d, Rng& rng);

// Integer in [lo, hi].
int UniformInt(Rng& rng, int lo, int hi);
bool Bernoulli(Rng& rng, double p);

struct Generated {
  Multigraph graph;
  EdgeSet planted;  // the embedded witness, empty for plain families
  std::string family;
};

// A random 2-factor whose cycles have length >= min_cycle (the whole vertex
// set is one cycle when n < 2 min_cycle), plus every other pair with
// probability p. `planted` is the 2-factor.
Generated PlantedTwoFactor(int n, double p, int min_cycle, Rng& rng);

// Family by name: complete N | multipartite A,B,.. | circulant N J1,J2,.. |
// cycle N | path N | petersen | gnp N P | multigraph N E | nearregular N D |
// planted2f N [P].
absl::StatusOr<Generated> Generate(absl::string_view family,
                                   const std::vector<std::string>& params,
                                   uint64_t seed);

}  // namespace tcf

#endif  // TCF_GENERATORS_H_
