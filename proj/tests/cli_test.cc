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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace srte::cli {
namespace {

const std::string kData = SRTE_TESTDATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunArgs(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> Net10(std::vector<std::string> args) {
  args.insert(args.begin() + 1, {"--topology", kData + "/net10.topo", "--demands",
                                 kData + "/net10.demands"});
  return args;
}

// Column `column` of every data row.
std::vector<std::string> CsvColumn(const std::string& csv, int column) {
  std::vector<std::string> values;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i <= column; ++i) std::getline(cells, cell, ',');
    values.push_back(cell);
  }
  return values;
}

TEST(SolveTest, JsonMatchesGolden) {
  const Result r = RunArgs(Net10({"solve", "--objective", "lu", "--method", "gsp",
                                  "--k", "4", "--m", "1"}));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, Slurp(kData + "/golden/solve_gsp_k4.json"));
  EXPECT_TRUE(r.err.empty());
}

TEST(SolveTest, MpBaselineOnSingleEdge) {
  const Result r = RunArgs({"solve", "--topology", kData + "/single.topo",
                            "--demands", kData + "/single.demands", "--method",
                            "mp-baseline", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(CsvColumn(r.out, 5), std::vector<std::string>{"0.75"});
}

TEST(SolveTest, MissingTopologyIsUsageError) {
  const Result r = RunArgs({"solve", "--topology", kData + "/absent.topo",
                            "--flows", "3"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("absent.topo"), std::string::npos);
}

TEST(SolveTest, BadArgumentsAreUsageErrors) {
  EXPECT_EQ(RunArgs({}).code, kExitUsage);
  EXPECT_EQ(RunArgs(Net10({"solve", "--method", "nope"})).code, kExitUsage);
  EXPECT_EQ(RunArgs(Net10({"solve", "--k", "0"})).code, kExitUsage);
  EXPECT_EQ(RunArgs(Net10({"solve", "--m", "0"})).code, kExitUsage);
  EXPECT_EQ(RunArgs(Net10({"solve", "--method", "optimal", "--objective", "mf"})).code,
            kExitUsage);
  EXPECT_EQ(RunArgs(Net10({"solve", "--candidates", "n0,zz", "--method", "greedy"})).code,
            kExitUsage);
}

TEST(SolveTest, UnroutableDemandIsInfeasible) {
  const std::string demands = ::testing::TempDir() + "/reverse.demands";
  std::ofstream(demands) << "DEMAND b a 1\n";
  const Result r = RunArgs({"solve", "--topology", kData + "/single.topo",
                            "--demands", demands, "--method", "all-nodes"});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.out.find("\"status\": \"infeasible\""), std::string::npos);
  EXPECT_NE(r.out.find("\"theta\": null"), std::string::npos);
  EXPECT_FALSE(r.err.empty());
}

TEST(SolveTest, MaxFlowReportsSatisfaction) {
  const Result r = RunArgs({"solve", "--topology", kData + "/single.topo",
                            "--demands", kData + "/single.demands", "--method",
                            "all-nodes", "--objective", "mf", "--scale", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"satisfaction_ratio\": 0.6666666666666666"),
            std::string::npos)
      << r.out;
}

TEST(SolveTest, DumpsLinearProgram) {
  const std::string path = ::testing::TempDir() + "/srte_dump.lp";
  const Result r = RunArgs({"solve", "--topology", kData + "/single.topo",
                            "--demands", kData + "/single.demands", "--method",
                            "all-nodes", "--dump-lp", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string lp = Slurp(path);
  EXPECT_NE(lp.find("Minimize"), std::string::npos);
  EXPECT_NE(lp.find("End"), std::string::npos);
}

TEST(SolveTest, TimingIsOptIn) {
  const Result quiet = RunArgs(Net10({"solve", "--method", "sp", "--k", "2"}));
  EXPECT_NE(quiet.out.find("\"solve_ms\": 0.0"), std::string::npos);
  const Result timed =
      RunArgs(Net10({"solve", "--method", "sp", "--k", "2", "--timing"}));
  EXPECT_EQ(timed.out.find("\"solve_ms\": 0.0,"), std::string::npos);
}

TEST(SweepTest, GroupCentralityIsMonotoneInK) {
  const Result r = RunArgs(Net10({"sweep", "--axis", "k", "--values", "1..4",
                                  "--method", "gsp"}));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(CsvColumn(r.out, 0), (std::vector<std::string>{"1", "2", "3", "4"}));
  const auto theta = CsvColumn(r.out, 2);
  for (std::size_t i = 1; i < theta.size(); ++i) {
    EXPECT_LE(std::stod(theta[i]), std::stod(theta[i - 1]) + 1e-9);
  }
}

TEST(SweepTest, LongerTunnelsNeverHurt) {
  const Result r = RunArgs(Net10({"sweep", "--axis", "m", "--values", "1,2",
                                  "--method", "all-nodes", "--candidates",
                                  "n4,n8,n9"}));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto theta = CsvColumn(r.out, 2);
  ASSERT_EQ(theta.size(), 2u);
  EXPECT_LE(std::stod(theta[1]), std::stod(theta[0]) + 1e-9);
}

TEST(SweepTest, MethodTableMatchesGolden) {
  const Result r = RunArgs(Net10({"sweep", "--axis", "method", "--values",
                                  "random*5,sp,gsp,degree", "--k", "3"}));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, Slurp(kData + "/golden/sweep_methods.csv"));
}

TEST(SweepTest, FailedPointKeepsGoing) {
  const Result r = RunArgs(Net10({"sweep", "--axis", "k", "--values", "9..11",
                                  "--method", "sp"}));
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(CsvColumn(r.out, 1),
            (std::vector<std::string>{"optimal", "optimal", "error"}));
  EXPECT_FALSE(r.err.empty());
}

TEST(CentralityTest, ChainRanksMiddleFirst) {
  const Result r = RunArgs({"centrality", "--topology", kData + "/chain.topo"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "rank,node,score\n1,b,1\n2,a,0\n3,c,0\n");
}

TEST(CentralityTest, WeightingIrrelevantUnderEqualCapacities) {
  const std::string topo = ::testing::TempDir() + "/equal.topo";
  {
    std::ofstream out(topo);
    for (const char* e : {"a b", "b c", "c d", "d a", "a c", "b d", "d b", "c e",
                          "e a"}) {
      out << "EDGE " << e << " 5\n";
    }
  }
  for (const char* measure : {"sp", "gsp", "degree"}) {
    const Result plain = RunArgs({"centrality", "--topology", topo, "--measure", measure});
    const Result weighted = RunArgs(
        {"centrality", "--topology", topo, "--measure", measure, "--weighted"});
    EXPECT_EQ(CsvColumn(plain.out, 1), CsvColumn(weighted.out, 1)) << measure;
  }
}

TEST(CentralityTest, TableMatchesGolden) {
  const Result r = RunArgs({"centrality", "--topology", kData + "/net10.topo",
                            "--measure", "sp"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, Slurp(kData + "/golden/centrality_sp.csv"));
}

TEST(OracleTest, SuitesReportPassingChecks) {
  for (const char* suite : {"betweenness", "saturation", "undirected"}) {
    const Result r = RunArgs({"oracle", suite, "--trials", "5", "--nodes", "6"});
    EXPECT_EQ(r.code, kExitOk) << suite << "\n" << r.out << r.err;
    EXPECT_EQ(r.out.find(",fail,"), std::string::npos);
  }
  EXPECT_EQ(RunArgs({"oracle", "bogus"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"oracle", "undirected", "--nodes", "40"}).code, kExitUsage);
}

TEST(DeterminismTest, RepeatedCommandsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      Net10({"solve", "--method", "greedy", "--k", "3"}),
      Net10({"solve", "--method", "random", "--k", "3", "--seed", "11"}),
      Net10({"solve", "--method", "optimal", "--k", "2", "--format", "csv"}),
      {"solve", "--topology", kData + "/net10.topo", "--flows", "15", "--seed", "4",
       "--method", "degree", "--k", "2", "--objective", "mf"},
      Net10({"sweep", "--axis", "method", "--values", "random*3,gsp"}),
      {"centrality", "--topology", kData + "/net10.topo", "--measure", "random",
       "--seed", "9"},
      {"oracle", "submodularity", "--trials", "2"},
  };
  for (const auto& args : commands) {
    const Result a = RunArgs(args);
    const Result b = RunArgs(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_FALSE(a.out.empty());
  }
}

}  // namespace
}  // namespace srte::cli
