// Copyright 2026 The srte Authors.
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

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "csv.h"
#include "json.hpp"
#include "oracle_suites.h"
#include "srte/centrality.h"
#include "srte/demands.h"
#include "srte/flow_oracles.h"
#include "srte/network.h"
#include "srte/parallel.h"
#include "srte/selection.h"
#include "srte/te_model.h"

namespace srte::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Method {
  kShortestPath,
  kGroupShortestPath,
  kDegree,
  kRandom,
  kOptimal,
  kGreedy,
  kMpBaseline,
  kAllNodes,
};

Method ParseMethod(std::string_view name) {
  static constexpr std::pair<std::string_view, Method> kTable[] = {
      {"sp", Method::kShortestPath},  {"gsp", Method::kGroupShortestPath},
      {"degree", Method::kDegree},    {"random", Method::kRandom},
      {"optimal", Method::kOptimal},  {"greedy", Method::kGreedy},
      {"mp-baseline", Method::kMpBaseline}, {"all-nodes", Method::kAllNodes}};
  for (const auto& [key, method] : kTable) {
    if (key == name) return method;
  }
  throw UsageError("unknown method '" + std::string(name) + "'");
}

std::optional<CentralityMethod> AsCentrality(Method method) {
  switch (method) {
    case Method::kShortestPath: return CentralityMethod::kShortestPath;
    case Method::kGroupShortestPath: return CentralityMethod::kGroupShortestPath;
    case Method::kDegree: return CentralityMethod::kDegree;
    case Method::kRandom: return CentralityMethod::kRandom;
    default: return std::nullopt;
  }
}

Objective ParseObjective(std::string_view name) {
  if (name == "lu") return Objective::kLinkUtilization;
  if (name == "mf") return Objective::kMaxFlow;
  throw UsageError("unknown objective '" + std::string(name) + "'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      items.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  items.push_back(current);
  return items;
}

int ParseInt(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError("not an integer: '" + text + "'");
  }
  return value;
}

struct Inputs {
  FlowNetwork network;
  DemandMatrix demands;
  std::vector<NodeIndex> pool;
};

Inputs Load(const RunConfig& config) {
  Inputs in;
  in.network = ParseTopology(ReadFile(config.topology_path));
  if (!(config.scale > 0)) throw UsageError("--scale must be positive");
  if (!config.demands_path.empty()) {
    if (config.flow_count > 0) {
      throw UsageError("--demands and --flows are mutually exclusive");
    }
    in.demands =
        ParseDemands(ReadFile(config.demands_path), in.network, config.scale);
  } else if (config.flow_count > 0) {
    in.demands = GenerateGravityDemands(in.network, config.flow_count,
                                        config.demand_seed.value_or(config.seed))
                     .Scaled(config.scale);
  } else {
    throw UsageError("either --demands or --flows is required");
  }
  if (config.candidates.empty()) {
    in.pool.resize(in.network.node_count());
    std::iota(in.pool.begin(), in.pool.end(), 0);
  } else {
    for (const std::string& name : SplitList(config.candidates)) {
      const std::optional<NodeIndex> node = in.network.FindNode(name);
      if (!node) throw UsageError("unknown candidate node '" + name + "'");
      in.pool.push_back(*node);
    }
    std::sort(in.pool.begin(), in.pool.end());
    in.pool.erase(std::unique(in.pool.begin(), in.pool.end()), in.pool.end());
  }
  return in;
}

void Validate(const RunConfig& config, Method method, Objective objective) {
  const bool needs_k =
      method != Method::kMpBaseline && method != Method::kAllNodes;
  if (needs_k && config.k < 1) throw UsageError("--k must be at least 1");
  if (config.m < 1) throw UsageError("--m must be at least 1");
  if ((method == Method::kOptimal || method == Method::kGreedy) &&
      objective != Objective::kLinkUtilization) {
    throw UsageError("optimal and greedy selection minimize utilization; use --objective lu");
  }
}

struct Outcome {
  bool feasible = false;
  std::string diagnostic;
  std::vector<NodeIndex> middlepoints;
  int used_count = 0;
  TeSolution solution;
  long subproblems = 0;
  double solve_ms = 0;
};

// Runs one configuration. Infeasibility is reported in the outcome; every
// other failure propagates.
Outcome Execute(const RunConfig& config, const Inputs& in,
                const SegmentLoadCache& loads) {
  const Method method = ParseMethod(config.method);
  const Objective objective = ParseObjective(config.objective);
  Validate(config, method, objective);

  SelectionOptions options;
  options.tunnels.max_middlepoints = config.m;
  options.tunnels.exactly_one_middlepoint = config.exactly_one_middlepoint;
  options.budget = config.budget;

  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (const auto centrality = AsCentrality(method)) {
      outcome.middlepoints = CentralityTopK(in.network, *centrality,
                                            config.weighted, config.k, config.seed);
      outcome.solution = SolveSegmentRouting(loads, in.demands, outcome.middlepoints,
                                             objective, options.tunnels);
      outcome.used_count =
          static_cast<int>(outcome.solution.UsedMiddlepoints().size());
      outcome.subproblems = 1;
    } else if (method == Method::kOptimal || method == Method::kGreedy) {
      const SelectionResult result =
          method == Method::kOptimal
              ? OptimalSelect(loads, in.demands, in.pool, config.k, options)
              : GreedySelect(loads, in.demands, in.pool, config.k, options);
      outcome.middlepoints = result.middlepoints;
      outcome.used_count = result.used_count;
      outcome.solution = result.solution;
      outcome.subproblems = result.subproblems_solved;
    } else if (method == Method::kAllNodes) {
      outcome.middlepoints = in.pool;
      outcome.solution = SolveSegmentRouting(loads, in.demands, in.pool,
                                             objective, options.tunnels);
      outcome.used_count =
          static_cast<int>(outcome.solution.UsedMiddlepoints().size());
      outcome.subproblems = 1;
    } else {
      outcome.solution =
          SolveTe(BuildMpBaseline(in.network, in.demands, objective));
      outcome.subproblems = 1;
    }
    outcome.feasible = outcome.solution.optimal();
    if (!outcome.feasible) {
      outcome.diagnostic = "program is " +
                           std::string(lp::StatusName(outcome.solution.status));
    }
  } catch (const NoTunnelError& e) {
    outcome.feasible = false;
    outcome.diagnostic = e.what();
  }
  if (config.timing) {
    outcome.solve_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  }
  return outcome;
}

void DumpLp(const RunConfig& config, const Inputs& in,
            const ShortestPathIndex& index, const SegmentLoadCache& loads,
            const Outcome& outcome) {
  const Method method = ParseMethod(config.method);
  const Objective objective = ParseObjective(config.objective);
  TeProgram program;
  if (method == Method::kMpBaseline) {
    program = BuildMpBaseline(in.network, in.demands, objective);
  } else {
    TunnelOptions tunnels;
    tunnels.max_middlepoints = config.m;
    tunnels.exactly_one_middlepoint = config.exactly_one_middlepoint;
    const auto all = EnumerateAllTunnels(index, in.demands, outcome.middlepoints, tunnels);
    program = objective == Objective::kLinkUtilization
                  ? BuildTeLu(loads, in.demands, all)
                  : BuildTeMf(loads, in.demands, all);
  }
  std::ofstream file(config.dump_lp_path, std::ios::binary);
  file << lp::FormatLpText(program.problem);
  if (!file) throw UsageError("cannot write '" + config.dump_lp_path + "'");
}

Json ToJson(const RunConfig& config, const FlowNetwork& net,
            const DemandMatrix& demands, const Outcome& outcome) {
  const TeSolution& sol = outcome.solution;
  const bool lu = config.objective == "lu";
  Json j;
  j["objective"] = config.objective;
  j["status"] = outcome.feasible ? "optimal" : "infeasible";
  const char* value_key = lu ? "theta" : "satisfaction_ratio";
  if (outcome.feasible) {
    j[value_key] = lu ? sol.theta : sol.satisfaction_ratio;
  } else {
    j[value_key] = nullptr;
  }
  Json names = Json::array();
  for (NodeIndex v : outcome.middlepoints) names.push_back(net.node_name(v));
  j["middlepoints"] = names;
  j["used_count"] = outcome.used_count;
  Json splits = Json::object();
  Json utilization = Json::object();
  if (outcome.feasible) {
    for (std::size_t i = 0; i < sol.tunnels.size(); ++i) {
      if (sol.split_ratios[i] <= 0) continue;
      const Commodity& c = demands.commodities[sol.tunnels[i].commodity];
      const std::string key =
          net.node_name(c.source) + "->" + net.node_name(c.sink);
      splits[key][sol.tunnels[i].Label(net)] = sol.split_ratios[i];
    }
    for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
      utilization[net.EdgeLabel(e)] = sol.edge_utilization[e];
    }
  }
  j["split_ratios"] = splits;
  j["edge_utilization"] = utilization;
  j["solve_ms"] = outcome.solve_ms;
  j["subproblems"] = outcome.subproblems;
  return j;
}

std::string ValueCell(const RunConfig& config, const Outcome& outcome) {
  if (!outcome.feasible) return "";
  return CsvNumber(config.objective == "lu" ? outcome.solution.theta
                                            : outcome.solution.satisfaction_ratio);
}

const char* ValueColumn(const RunConfig& config) {
  return config.objective == "lu" ? "theta" : "satisfaction_ratio";
}

int SolveCommand(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format != "json" && config.format != "csv") {
    throw UsageError("--format must be json or csv");
  }
  const Inputs in = Load(config);
  const ShortestPathIndex index(in.network);
  const SegmentLoadCache loads(index);
  const Outcome outcome = Execute(config, in, loads);
  if (!config.dump_lp_path.empty() && outcome.feasible) {
    DumpLp(config, in, index, loads, outcome);
  }
  if (config.format == "json") {
    out << ToJson(config, in.network, in.demands, outcome).dump(2) << '\n';
  } else {
    std::string names;
    for (NodeIndex v : outcome.middlepoints) {
      if (!names.empty()) names += ';';
      names += in.network.node_name(v);
    }
    WriteCsvRow(out, {"method", "objective", "status", "k", "m", ValueColumn(config),
                      "used_count", "solve_ms", "subproblems", "middlepoints"});
    WriteCsvRow(out, {config.method, config.objective,
                      outcome.feasible ? "optimal" : "infeasible",
                      std::to_string(config.k), std::to_string(config.m),
                      ValueCell(config, outcome), std::to_string(outcome.used_count),
                      CsvNumber(outcome.solve_ms), std::to_string(outcome.subproblems),
                      names});
  }
  if (!outcome.feasible) {
    err << "srte: infeasible: " << outcome.diagnostic << '\n';
    return kExitInfeasible;
  }
  return kExitOk;
}

// One sweep point: the axis label plus the configuration to run.
struct SweepPoint {
  std::string label;
  RunConfig config;
};

std::vector<SweepPoint> ExpandSweep(const RunConfig& base, const std::string& axis,
                                    const std::string& values) {
  std::vector<SweepPoint> points;
  for (const std::string& token : SplitList(values)) {
    if (token.empty()) throw UsageError("empty entry in --values");
    if (axis == "method") {
      std::string name = token;
      int repeats = 0;
      if (const auto star = token.find('*'); star != std::string::npos) {
        name = token.substr(0, star);
        repeats = ParseInt(token.substr(star + 1));
        if (repeats < 1) throw UsageError("repeat count must be positive");
      }
      ParseMethod(name);
      if (repeats == 0) {
        SweepPoint p{name, base};
        p.config.method = name;
        points.push_back(p);
        continue;
      }
      for (int r = 0; r < repeats; ++r) {
        SweepPoint p{name + "@" + std::to_string(base.seed + r), base};
        p.config.method = name;
        p.config.seed = base.seed + r;
        points.push_back(p);
      }
      continue;
    }
    int low = 0, high = 0;
    if (const auto dots = token.find(".."); dots != std::string::npos) {
      low = ParseInt(token.substr(0, dots));
      high = ParseInt(token.substr(dots + 2));
    } else {
      low = high = ParseInt(token);
    }
    if (low > high) throw UsageError("empty range '" + token + "'");
    for (int v = low; v <= high; ++v) {
      SweepPoint p{std::to_string(v), base};
      (axis == "k" ? p.config.k : p.config.m) = v;
      points.push_back(p);
    }
  }
  if (points.empty()) throw UsageError("--values is empty");
  return points;
}

int SweepCommand(const RunConfig& base, const std::string& axis,
                 const std::string& values, std::ostream& out, std::ostream& err) {
  if (axis != "k" && axis != "m" && axis != "method") {
    throw UsageError("--axis must be k, m or method");
  }
  const std::vector<SweepPoint> points = ExpandSweep(base, axis, values);
  const Inputs in = Load(base);
  const ShortestPathIndex index(in.network);
  const SegmentLoadCache loads(index);
  WriteCsvRow(out, {axis, "status", ValueColumn(base), "used_count", "solve_ms",
                    "subproblems"});
  for (const SweepPoint& point : points) {
    std::string status = "optimal";
    Outcome outcome;
    try {
      outcome = Execute(point.config, in, loads);
      if (!outcome.feasible) {
        status = "infeasible";
        err << "srte: " << axis << "=" << point.label << ": " << outcome.diagnostic
            << '\n';
      }
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      status = "error";
      err << "srte: " << axis << "=" << point.label << ": " << e.what() << '\n';
    }
    WriteCsvRow(out, {point.label, status, ValueCell(point.config, outcome),
                      std::to_string(outcome.used_count), CsvNumber(outcome.solve_ms),
                      std::to_string(outcome.subproblems)});
  }
  return kExitOk;
}

struct CentralityConfig {
  std::string topology_path;
  std::string measure = "sp";
  bool weighted = false;
  int k = 0;
  std::uint64_t seed = 1;
  std::string format = "csv";
};

int CentralityCommand(const CentralityConfig& config, std::ostream& out) {
  const FlowNetwork net = ParseTopology(ReadFile(config.topology_path));
  const int n = net.node_count();
  const int k = config.k == 0 ? n : config.k;
  if (k < 1 || k > n) throw UsageError("--k must lie in [1, node count]");

  std::vector<NodeIndex> order;
  std::vector<std::optional<double>> score(n);
  if (config.measure == "sp" || config.measure == "degree") {
    const CentralityScores s = config.measure == "sp"
                                   ? Betweenness(net, config.weighted)
                                   : DegreeCentrality(net, config.weighted);
    order = s.ordering;
    for (NodeIndex v = 0; v < n; ++v) score[v] = s.scores[v];
  } else if (config.measure == "gsp") {
    const GroupSelection g = GreedyGroupSelect(net, k, config.weighted);
    order = g.order;
    for (std::size_t i = 0; i < order.size(); ++i) {
      score[order[i]] = ToDouble(g.prefix_values[i]);
    }
  } else if (config.measure == "random") {
    order = RandomSelect(net, k, config.seed);
  } else if (config.measure == "flow") {
    std::vector<double> gamma(n);
    for (NodeIndex v = 0; v < n; ++v) {
      gamma[v] = FlowCentrality(net, v, {}, DefaultThreadCount());
      score[v] = gamma[v];
    }
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeIndex a, NodeIndex b) { return gamma[a] > gamma[b]; });
  } else {
    throw UsageError("--measure must be sp, gsp, degree, random or flow");
  }
  order.resize(k);

  if (config.format == "json") {
    Json rows = Json::array();
    for (int i = 0; i < k; ++i) {
      Json row;
      row["rank"] = i + 1;
      row["node"] = net.node_name(order[i]);
      if (score[order[i]]) {
        row["score"] = *score[order[i]];
      } else {
        row["score"] = nullptr;
      }
      rows.push_back(row);
    }
    out << rows.dump(2) << '\n';
  } else if (config.format == "csv") {
    WriteCsvRow(out, {"rank", "node", "score"});
    for (int i = 0; i < k; ++i) {
      const auto& s = score[order[i]];
      WriteCsvRow(out, {std::to_string(i + 1), net.node_name(order[i]),
                        s ? CsvNumber(*s) : ""});
    }
  } else {
    throw UsageError("--format must be json or csv");
  }
  return kExitOk;
}

int OracleCommand(const std::string& suite, const SuiteOptions& options,
                  std::ostream& out, std::ostream& err) {
  const SuiteReport report = RunSuite(suite, options);
  WriteCsvRow(out, report.header);
  for (const auto& row : report.rows) WriteCsvRow(out, row);
  if (report.failures > 0) {
    err << "srte: " << suite << ": " << report.failures << " of "
        << report.rows.size() << " checks failed\n";
    return kExitOracleFailure;
  }
  return kExitOk;
}

void AddInputOptions(CLI::App* app, RunConfig& config) {
  app->add_option("--topology", config.topology_path, "Topology file (EDGE lines)")
      ->required();
  app->add_option("--demands", config.demands_path, "Demand file (DEMAND lines)");
  app->add_option("--flows", config.flow_count,
                  "Generate this many gravity-model demands instead of reading a file");
  app->add_option("--demand-seed", config.demand_seed,
                  "Seed for gravity demands (defaults to --seed)");
  app->add_option("--scale", config.scale, "Multiply every demand by this factor");
}

void AddRunOptions(CLI::App* app, RunConfig& config) {
  app->add_option("--objective", config.objective, "lu or mf")
      ->check(CLI::IsMember({"lu", "mf"}));
  app->add_option("--method", config.method, "Middlepoint selection method")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kMethodNames),
                                                     std::end(kMethodNames))));
  app->add_option("--k", config.k, "Number of middlepoints (K)");
  app->add_option("--m", config.m, "Middlepoints allowed per tunnel (M)");
  app->add_flag("--exactly-one", config.exactly_one_middlepoint,
                "Every tunnel uses exactly one middlepoint (no direct tunnel)");
  app->add_flag("--weighted", config.weighted,
                "Rank centrality with inverse-capacity edge costs");
  app->add_option("--seed", config.seed, "Seed for random selection");
  app->add_option("--budget", config.budget,
                  "Subproblem cap for optimal selection");
  app->add_option("--candidates", config.candidates,
                  "Comma-separated candidate pool for optimal, greedy and all-nodes");
  app->add_flag("--timing", config.timing,
                "Report wall-clock solve_ms (output is no longer reproducible)");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Segment routing traffic engineering toolkit", "srte"};
  app.require_subcommand(1);

  RunConfig solve_config;
  CLI::App* solve = app.add_subcommand("solve", "Select middlepoints and solve");
  AddInputOptions(solve, solve_config);
  AddRunOptions(solve, solve_config);
  solve->add_option("--format", solve_config.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--dump-lp", solve_config.dump_lp_path,
                    "Write the final linear program in LP format");

  RunConfig sweep_config;
  std::string axis;
  std::string values;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep K, M or the method; prints CSV");
  AddInputOptions(sweep, sweep_config);
  AddRunOptions(sweep, sweep_config);
  sweep->add_option("--axis", axis, "k, m or method")
      ->required()
      ->check(CLI::IsMember({"k", "m", "method"}));
  sweep->add_option("--values", values,
                    "Comma list; ranges a..b for k and m, name*N repeats a method "
                    "over N consecutive seeds")
      ->required();

  CentralityConfig centrality_config;
  CLI::App* centrality = app.add_subcommand("centrality", "Rank nodes by centrality");
  centrality->add_option("--topology", centrality_config.topology_path, "Topology file")
      ->required();
  centrality->add_option("--measure", centrality_config.measure,
                         "sp, gsp, degree, random or flow")
      ->check(CLI::IsMember({"sp", "gsp", "degree", "random", "flow"}));
  centrality->add_flag("--weighted", centrality_config.weighted,
                       "Inverse-capacity edge costs");
  centrality->add_option("--k", centrality_config.k, "Rows to print (0 = all)");
  centrality->add_option("--seed", centrality_config.seed, "Seed for random");
  centrality->add_option("--format", centrality_config.format, "csv or json")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string suite;
  SuiteOptions suite_options;
  CLI::App* oracle = app.add_subcommand("oracle", "Run a cross-oracle property suite");
  oracle->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kSuiteNames),
                                                     std::end(kSuiteNames))));
  oracle->add_option("--nodes", suite_options.nodes, "Nodes per instance");
  oracle->add_option("--trials", suite_options.trials, "Number of instances");
  oracle->add_option("--seed", suite_options.seed, "Seed of the first instance");

  std::vector<const char*> argv = {"srte"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return SolveCommand(solve_config, out, err);
    if (sweep->parsed()) return SweepCommand(sweep_config, axis, values, out, err);
    if (centrality->parsed()) return CentralityCommand(centrality_config, out);
    return OracleCommand(suite, suite_options, out, err);
  } catch (const Error& e) {
    err << "srte: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace srte::cli
