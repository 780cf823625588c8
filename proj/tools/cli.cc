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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "nlohmann/json.hpp"
#include "tcf/generators.h"
#include "tcf/io.h"
#include "tcf/oracles.h"
#include "tcf/solver.h"
#include "tcf/sparsity.h"
#include "tcf/verifier.h"

namespace tcf::cli {
namespace {

using json = nlohmann::json;

constexpr int kDefaultMaxOrder = 16;
constexpr int64_t kDefaultOracleBudget = 20'000'000;

// Usage-level failure: bad flags, unreadable input, limits.
struct UsageError {
  std::string message;
};

int64_t EnvDefault(const char* name, int64_t fallback) {
  const char* raw = std::getenv(name);
  int64_t v = 0;
  if (raw == nullptr || !absl::SimpleAtoi(raw, &v) || v <= 0) return fallback;
  return v;
}

struct Limits {
  int max_order = 0;
  int64_t oracle_budget = 0;
  bool unsafe = false;

  // Values above the defaults need --unsafe; the environment may move the
  // defaults themselves.
  void Validate() const {
    const int64_t order_default = EnvDefault("TCF_MAX_ORDER", kDefaultMaxOrder);
    const int64_t budget_default =
        EnvDefault("TCF_ORACLE_BUDGET", kDefaultOracleBudget);
    if (!unsafe && max_order > order_default) {
      throw UsageError{absl::StrCat("--max-order above ", order_default,
                                    " requires --unsafe")};
    }
    if (!unsafe && oracle_budget > budget_default) {
      throw UsageError{absl::StrCat("--oracle-budget above ", budget_default,
                                    " requires --unsafe")};
    }
  }
  int Order() const {
    return max_order > 0 ? max_order
                         : static_cast<int>(EnvDefault("TCF_MAX_ORDER", kDefaultMaxOrder));
  }
  int64_t Budget() const {
    return oracle_budget > 0 ? oracle_budget
                             : EnvDefault("TCF_ORACLE_BUDGET", kDefaultOracleBudget);
  }
};

void AddLimits(CLI::App* cmd, Limits* limits) {
  cmd->add_option("--max-order", limits->max_order,
                  "largest order accepted by exponential oracles");
  cmd->add_option("--oracle-budget", limits->oracle_budget,
                  "node budget of exhaustive searches");
  cmd->add_flag("--unsafe", limits->unsafe, "allow limits above the defaults");
}

template <typename T>
T Check(absl::StatusOr<T> v) {
  if (!v.ok()) throw UsageError{std::string(v.status().message())};
  return *std::move(v);
}

Multigraph LoadGraph(const std::string& path, const Limits& limits,
                     bool order_bound = true) {
  Multigraph g = Check(ReadGraphFile(path));
  if (order_bound && g.num_vertices() > limits.Order()) {
    throw UsageError{absl::StrCat("graph order ", g.num_vertices(),
                                  " exceeds the limit ", limits.Order())};
  }
  return g;
}

std::vector<int> IntList(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (absl::string_view part : absl::StrSplit(text, ',', absl::SkipEmpty())) {
    int v = 0;
    if (!absl::SimpleAtoi(part, &v)) {
      throw UsageError{absl::StrCat(flag, ": '", part, "' is not an integer")};
    }
    out.push_back(v);
  }
  return out;
}

// A single value is broadcast to every vertex.
std::vector<int> PerVertex(const std::string& text, int n, const std::string& flag) {
  std::vector<int> v = IntList(text, flag);
  if (v.size() == 1) return std::vector<int>(n, v[0]);
  if (static_cast<int>(v.size()) != n) {
    throw UsageError{absl::StrCat(flag, " needs 1 or ", n, " values")};
  }
  return v;
}

EdgeSet EdgeList(const std::string& text, const Multigraph& g) {
  std::vector<EdgeId> ids;
  for (int id : IntList(text, "--factor")) {
    if (!g.has_edge(id)) throw UsageError{absl::StrCat("no edge with id ", id)};
    ids.push_back(id);
  }
  return EdgeSet(std::move(ids));
}

VertexSet VertexList(const std::string& text, int n) {
  std::vector<VertexId> ids;
  for (int v : IntList(text, "--set")) {
    if (v < 0 || v >= n) throw UsageError{absl::StrCat("no vertex ", v)};
    ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

Rational ParseC(const std::string& text) { return Check(ParseRational(text)); }

void Emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

// --- params file -----------------------------------------------------------

template <typename T>
T Field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError{absl::StrCat("params: field '", key, "': ", e.what())};
  }
}

void ApplyParamsFile(const std::string& path, const Multigraph& g,
                     CaseParams* p) {
  std::ifstream in(path);
  if (!in) throw UsageError{absl::StrCat("cannot open ", path)};
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    // The message carries the line and column.
    throw UsageError{absl::StrCat(path, ": ", e.what())};
  }
  if (!j.is_object()) throw UsageError{absl::StrCat(path, ": expected an object")};
  static const std::set<std::string> kKnown = {
      "m", "m0", "c", "r", "a", "b", "k", "f", "F", "other", "h", "S",
      "edge", "removed", "u", "xi", "assume_hypothesis", "seed"};
  for (const auto& item : j.items()) {
    if (!kKnown.count(item.key())) {
      throw UsageError{absl::StrCat(path, ": unknown field '", item.key(), "'")};
    }
  }
  const int n = g.num_vertices();
  auto edges = [&](const char* key) {
    EdgeSet s(Field<std::vector<EdgeId>>(j, key));
    for (EdgeId id : s) {
      if (!g.has_edge(id)) throw UsageError{absl::StrCat(path, ": no edge ", id)};
    }
    return s;
  };
  if (j.contains("m")) p->m = Field<int>(j, "m");
  if (j.contains("m0")) p->m0 = Field<int>(j, "m0");
  if (j.contains("c")) p->c = ParseC(Field<std::string>(j, "c"));
  if (j.contains("r")) p->r = Field<int>(j, "r");
  if (j.contains("a")) p->a = Field<int>(j, "a");
  if (j.contains("b")) p->b = Field<int>(j, "b");
  if (j.contains("k")) p->k = Field<int>(j, "k");
  if (j.contains("f")) p->f = Field<std::vector<int>>(j, "f");
  if (j.contains("h")) p->h = Field<std::vector<int>>(j, "h");
  if (j.contains("F")) p->factor = edges("F");
  if (j.contains("other")) p->other = edges("other");
  if (j.contains("S")) {
    VertexSet s(Field<std::vector<VertexId>>(j, "S"));
    for (VertexId v : s) {
      if (v < 0 || v >= n) throw UsageError{absl::StrCat(path, ": no vertex ", v)};
    }
    p->s = s;
  }
  if (j.contains("edge")) p->edge = Field<EdgeId>(j, "edge");
  if (j.contains("removed")) p->removed = Field<EdgeId>(j, "removed");
  if (j.contains("u")) p->u = Field<VertexId>(j, "u");
  if (j.contains("xi")) {
    std::vector<Rational> xi;
    for (const std::string& x : Field<std::vector<std::string>>(j, "xi")) {
      xi.push_back(ParseC(x));
    }
    p->xi = xi;
  }
  if (j.contains("assume_hypothesis")) {
    p->assume_hypothesis = Field<bool>(j, "assume_hypothesis");
  }
  if (j.contains("seed")) p->seed = Field<uint64_t>(j, "seed");
}

// --- commands ----------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::optional<uint64_t> seed;
  std::string out;
  std::string sidecar;
  std::string format = "edgelist";
};

bool Randomized(const std::string& family) {
  return family == "gnp" || family == "multigraph" || family == "nearregular" ||
         family == "planted2f";
}

int CmdGen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  if (Randomized(a.family) && !a.seed) {
    throw UsageError{absl::StrCat(a.family, " is randomized and needs --seed")};
  }
  Generated gen = Check(Generate(a.family, a.params, a.seed.value_or(0)));
  const std::string text = a.format == "graph6"
                               ? Check(FormatGraph6(gen.graph)) + "\n"
                               : FormatEdgeList(gen.graph);
  if (a.out.empty()) {
    out << text;
  } else {
    std::ofstream file(a.out);
    if (!(file << text)) throw UsageError{absl::StrCat("cannot write ", a.out)};
  }
  std::string sidecar = a.sidecar;
  if (sidecar.empty() && !a.out.empty() && !gen.planted.empty()) {
    sidecar = a.out + ".witness.json";
  }
  if (!sidecar.empty()) {
    std::ofstream file(sidecar);
    const json w = {{"family", gen.family}, {"planted", ToJson(gen.planted)}};
    if (!(file << w.dump() << "\n")) {
      throw UsageError{absl::StrCat("cannot write ", sidecar)};
    }
  }
  err << gen.family << ": " << gen.graph.num_vertices() << " vertices, "
      << gen.graph.num_edges() << " edges";
  if (!gen.planted.empty()) err << ", planted factor of " << gen.planted.size() << " edges";
  err << "\n";
  return kExitOk;
}

struct SolveArgs {
  std::string graph;
  int m = 1;
  std::string h = "0";
  std::string factor;
  uint64_t seed = 1;
  int restarts = 20;
  bool no_trace = false;
  Limits limits;
};

SolveInstance MakeSolveInstance(const SolveArgs& a) {
  a.limits.Validate();
  SolveInstance inst;
  inst.g = LoadGraph(a.graph, a.limits, false);
  inst.m = a.m;
  inst.h = PerVertex(a.h, inst.g.num_vertices(), "--h");
  if (!a.factor.empty()) inst.f = EdgeList(a.factor, inst.g);
  return inst;
}

SolverOptions MakeSolverOptions(const SolveArgs& a) {
  SolverOptions options;
  options.seed = a.seed;
  options.restarts = a.restarts;
  options.record_trace = !a.no_trace;
  return options;
}

int CmdSolve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const SolveInstance inst = MakeSolveInstance(a);
  SolveResult r = Check(SolveExtension(inst, MakeSolverOptions(a)));
  Emit(out, ToJson(r));
  err << "omega " << r.omega << " (target " << a.m << "), " << r.h.size()
      << " edges, " << OptimalityName(r.optimal) << "\n";
  return kExitOk;
}

int CmdCert(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const SolveInstance inst = MakeSolveInstance(a);
  SolveResult r = Check(SolveExtension(inst, MakeSolverOptions(a)));
  Certificate c = Check(ExtractCertificate(inst, r.h, a.limits.Budget()));
  Emit(out, {{"solve", ToJson(r)}, {"certificate", ToJson(c)}});
  err << "certificate |S| = " << c.s.size() << ", "
      << (c.valid() ? "valid" : "INVALID") << "\n";
  return c.valid() ? kExitOk : kExitVerdict;
}

struct OracleArgs {
  std::string name;
  std::string graph;
  int m = 1;
  std::string order = "asc";
  Limits limits;
};

int CmdOracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  a.limits.Validate();
  const Multigraph g = LoadGraph(a.graph, a.limits);
  const EnumerationOrder order =
      a.order == "desc" ? EnumerationOrder::kDescending : EnumerationOrder::kAscending;
  json j = {{"oracle", a.name}, {"n", g.num_vertices()}};
  if (a.name == "toughness") {
    const Toughness t = Check(ComputeToughness(g, order, a.limits.Order()));
    j["value"] = t.infinite ? "inf" : ToString(t.value);
    j["witness"] = ToJson(t.witness);
  } else if (a.name == "sparse") {
    j["m"] = a.m;
    j["value"] = IsSparseBySubsets(g, a.m);
    j["pebble"] = IsSparse(g, a.m);
  } else if (a.name == "omega") {
    j["m"] = a.m;
    j["value"] = OmegaBySubsets(g, a.m);
    j["pebble"] = Omega(g, a.m);
  } else if (a.name == "components") {
    j["m"] = a.m;
    j["value"] = ToJson(TcComponentsBySubsets(g, a.m));
  } else if (a.name == "packing") {
    j["m"] = a.m;
    auto trees = SpanningTreePacking(g, a.m);
    j["value"] = trees.has_value();
    if (trees) {
      json list = json::array();
      for (const EdgeSet& t : *trees) list.push_back(ToJson(t));
      j["trees"] = list;
    }
  } else if (a.name == "bipartite-index") {
    const BipartiteIndex bi = Check(ComputeBipartiteIndex(g, order, a.limits.Order()));
    j["value"] = bi.value;
    j["side"] = ToJson(bi.side);
  } else if (a.name == "structure" || a.name == "girth") {
    const StructureReport s = StructureChecks(g, order);
    j["value"] = a.name == "girth" ? (s.girth ? json(*s.girth) : json(nullptr))
                                   : ToJson(s);
  } else {
    throw UsageError{absl::StrCat("unknown oracle '", a.name, "'")};
  }
  Emit(out, j);
  err << a.name << " = " << j["value"].dump() << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string id;
  std::string graph;
  std::string params;
  std::optional<int> m, m0, r, a, b, k, u;
  std::string c, f, h, factor, set;
  uint64_t seed = 1;
  bool assume = false;
  bool timing = false;
  Limits limits;
};

int CmdVerify(const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  v.limits.Validate();
  const Multigraph g = LoadGraph(v.graph, v.limits);
  CaseParams p;
  p.seed = v.seed;
  if (!v.params.empty()) ApplyParamsFile(v.params, g, &p);
  const int n = g.num_vertices();
  if (v.m) p.m = *v.m;
  if (v.m0) p.m0 = *v.m0;
  if (v.r) p.r = *v.r;
  if (v.a) p.a = *v.a;
  if (v.b) p.b = *v.b;
  if (v.k) p.k = *v.k;
  if (v.u) p.u = *v.u;
  if (!v.c.empty()) p.c = ParseC(v.c);
  if (!v.f.empty()) p.f = PerVertex(v.f, n, "--f");
  if (!v.h.empty()) p.h = PerVertex(v.h, n, "--h");
  if (!v.factor.empty()) p.factor = EdgeList(v.factor, g);
  if (!v.set.empty()) p.s = VertexList(v.set, n);
  p.assume_hypothesis |= v.assume;
  p.oracle_budget = v.limits.Budget();
  p.order_limit = v.limits.Order();
  absl::StatusOr<TheoremReport> rep = VerifyEndToEnd(v.id, g, p, v.timing);
  if (!rep.ok()) throw UsageError{std::string(rep.status().message())};
  Emit(out, ToJson(*rep));
  err << v.id << ": hypothesis " << StatusName(rep->hypothesis) << ", conclusion "
      << StatusName(rep->conclusion) << " (" << rep->mode << ")";
  if (!rep->detail.empty()) err << ": " << rep->detail;
  err << "\n";
  return rep->conclusion == ConclusionStatus::kFail ? kExitVerdict : kExitOk;
}

struct SearchArgs {
  std::string id;
  std::string generator = "all";
  int budget = 100;
  std::optional<uint64_t> seed;
  int jobs = 1;
  bool suite = false;
  bool keep_going = false;
  std::string out;
};

int CmdSearch(const SearchArgs& s, std::ostream& out, std::ostream& err) {
  if (!s.seed) throw UsageError{"search is randomized and needs --seed"};
  if (s.jobs < 1) throw UsageError{"--jobs must be positive"};
  std::vector<SuiteEntry> plan;
  if (s.suite) {
    plan = StandardSuite();
  } else {
    if (s.id.empty()) throw UsageError{"search needs a case id or --suite"};
    const std::vector<std::string> ids =
        s.id == "all" ? InScopeIds() : std::vector<std::string>{s.id};
    const std::vector<std::string> gens =
        s.generator == "all" ? GeneratorNames() : std::vector<std::string>{s.generator};
    for (const auto& id : ids) {
      for (const auto& gen : gens) plan.push_back({id, gen, s.budget});
    }
  }
  std::ofstream file;
  if (!s.out.empty()) {
    file.open(s.out);
    if (!file) throw UsageError{absl::StrCat("cannot write ", s.out)};
  }
  std::ostream& sink = s.out.empty() ? out : file;
  SearchSummary total;
  for (size_t i = 0; i < plan.size(); ++i) {
    const SuiteEntry& e = plan[i];
    // Each entry draws from its own stream derived from the one seed.
    const uint64_t seed = *s.seed + 0x9E3779B97F4A7C15ULL * (i + 1);
    SearchSummary part = Check(CounterexampleSearch(
        e.id, e.generator, e.count, seed, s.jobs,
        [&](const TheoremReport& r) { Emit(sink, ToJson(r)); }, false));
    total.instances += part.instances;
    total.red_alerts += part.red_alerts;
    total.hypothesis_pass += part.hypothesis_pass;
    total.hypothesis_fail += part.hypothesis_fail;
    total.hypothesis_assumed += part.hypothesis_assumed;
    total.conclusion_pass += part.conclusion_pass;
    total.conclusion_fail += part.conclusion_fail;
    total.not_run += part.not_run;
    if (part.red_alerts > 0) {
      err << "RED ALERT in " << e.id << " / " << e.generator
          << "; the instance is in the report stream\n";
      if (!s.keep_going) break;
    }
  }
  err << total.instances << " instances: hypothesis " << total.hypothesis_pass
      << " pass / " << total.hypothesis_fail << " fail / "
      << total.hypothesis_assumed << " assumed; conclusion "
      << total.conclusion_pass << " pass / " << total.conclusion_fail
      << " fail / " << total.not_run << " not run; red alerts "
      << total.red_alerts << "\n";
  return total.red_alerts > 0 ? kExitVerdict : kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Tree-connected factors: generation, solving, oracles and "
               "statement verification"};
  app.require_subcommand(1);
  // Subcommands take --h for the degree allowance, so help is long-only.
  app.set_help_flag("--help", "print help");

  GenArgs gen;
  CLI::App* g = app.add_subcommand("gen", "generate a graph");
  g->add_option("family", gen.family, "graph family")->required();
  g->add_option("params", gen.params, "family parameters");
  g->add_option("--seed", gen.seed, "seed (randomized families)");
  g->add_option("--out", gen.out, "output file (default stdout)");
  g->add_option("--sidecar", gen.sidecar, "file for the planted witness");
  g->add_option("--format", gen.format)->check(CLI::IsMember({"edgelist", "graph6"}));

  SolveArgs solve;
  auto solve_like = [](CLI::App* cmd, SolveArgs* a) {
    cmd->add_option("--graph", a->graph, "edge list or graph6 file")->required();
    cmd->add_option("--m", a->m)->check(CLI::Range(1, 64));
    cmd->add_option("--h", a->h, "degree allowance: one value or one per vertex");
    cmd->add_option("--factor", a->factor, "edge ids of F, comma separated");
    cmd->add_option("--seed", a->seed);
    cmd->add_option("--restarts", a->restarts)->check(CLI::Range(1, 100000));
    cmd->add_flag("--no-trace", a->no_trace, "omit the move trace");
    AddLimits(cmd, &a->limits);
  };
  CLI::App* s = app.add_subcommand("solve", "minimize Omega over capped sparse extensions");
  solve_like(s, &solve);
  SolveArgs cert;
  CLI::App* c = app.add_subcommand("cert", "solve and extract the certificate set");
  solve_like(c, &cert);

  OracleArgs oracle;
  CLI::App* o = app.add_subcommand("oracle", "run an exact oracle");
  o->add_option("name", oracle.name,
                "toughness | sparse | omega | components | packing | "
                "bipartite-index | structure | girth")
      ->required();
  o->add_option("--graph", oracle.graph)->required();
  o->add_option("--m", oracle.m)->check(CLI::Range(1, 64));
  o->add_option("--order", oracle.order)->check(CLI::IsMember({"asc", "desc"}));
  AddLimits(o, &oracle.limits);

  VerifyArgs verify;
  CLI::App* v = app.add_subcommand("verify", "verify one statement on one graph");
  v->add_option("id", verify.id, "registry id")->required();
  v->add_option("--graph", verify.graph)->required();
  v->add_option("--params", verify.params, "JSON file with case parameters");
  v->add_option("--m", verify.m);
  v->add_option("--m0", verify.m0);
  v->add_option("--r", verify.r);
  v->add_option("--a", verify.a);
  v->add_option("--b", verify.b);
  v->add_option("--k", verify.k);
  v->add_option("--u", verify.u);
  v->add_option("--c", verify.c, "rational, e.g. 5/2");
  v->add_option("--f", verify.f);
  v->add_option("--h", verify.h);
  v->add_option("--factor", verify.factor);
  v->add_option("--set", verify.set, "vertex set S (or X)");
  v->add_option("--seed", verify.seed);
  v->add_flag("--assume", verify.assume, "run the construction under an assumed hypothesis");
  v->add_flag("--timing", verify.timing, "report wall time (not deterministic)");
  AddLimits(v, &verify.limits);

  SearchArgs search;
  CLI::App* x = app.add_subcommand("search", "counterexample search, JSONL reports");
  x->add_option("id", search.id, "registry id or 'all'");
  x->add_option("--generator", search.generator);
  x->add_option("--budget", search.budget)->check(CLI::Range(0, 10000000));
  x->add_option("--seed", search.seed);
  x->add_option("--jobs", search.jobs);
  x->add_option("--out", search.out, "JSONL file (default stdout)");
  x->add_flag("--suite", search.suite, "run the standard suite");
  x->add_flag("--keep-going", search.keep_going, "continue after a red alert");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (g->parsed()) return CmdGen(gen, out, err);
    if (s->parsed()) return CmdSolve(solve, out, err);
    if (c->parsed()) return CmdCert(cert, out, err);
    if (o->parsed()) return CmdOracle(oracle, out, err);
    if (v->parsed()) return CmdVerify(verify, out, err);
    if (x->parsed()) return CmdSearch(search, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tcf::cli
