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

#include "srte/demands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "srte/random.h"
#include "text_util.h"

namespace srte {

double DemandMatrix::TotalDemand() const {
  double total = 0;
  for (const Commodity& c : commodities) total += c.demand;
  return total;
}

DemandMatrix DemandMatrix::Scaled(double factor) const {
  DemandMatrix copy = *this;
  copy.scale *= factor;
  for (Commodity& c : copy.commodities) c.demand *= factor;
  return copy;
}

std::vector<DemandRow> ParseDemandRows(std::string_view text) {
  std::vector<DemandRow> rows;
  int line_number = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_number;
    std::vector<std::string_view> tokens = Tokenize(StripComment(line));
    if (tokens.empty()) continue;
    if (tokens[0] != "DEMAND") {
      throw ParseError(line_number,
                       "unknown directive '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() != 4) {
      throw ParseError(line_number, "expected: DEMAND <s> <t> <volume>");
    }
    if (tokens[1] == tokens[2]) {
      throw ParseError(line_number, "demand source equals sink");
    }
    Rational volume;
    try {
      volume = ParseRational(tokens[3]);
    } catch (const InvalidArgument& e) {
      throw ParseError(line_number, e.what());
    }
    if (volume < 0) throw ParseError(line_number, "negative demand");
    rows.push_back(DemandRow{std::string(tokens[1]), std::string(tokens[2]),
                             ToDouble(volume), line_number});
  }
  return rows;
}

DemandMatrix BindDemands(const std::vector<DemandRow>& rows,
                         const FlowNetwork& network, double scale) {
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw InvalidArgument("demand scale must be positive and finite");
  }
  DemandMatrix matrix;
  matrix.scale = scale;
  std::map<std::pair<NodeIndex, NodeIndex>, std::size_t> position;
  for (const DemandRow& row : rows) {
    auto s = network.FindNode(row.source);
    auto t = network.FindNode(row.sink);
    if (!s || !t) {
      throw ParseError(row.line, "unknown node '" +
                                     (s ? row.sink : row.source) + "'");
    }
    if (row.volume < 0) throw ParseError(row.line, "negative demand");
    auto [it, inserted] =
        position.emplace(std::make_pair(*s, *t), matrix.commodities.size());
    if (inserted) {
      matrix.commodities.push_back(Commodity{*s, *t, 0.0});
    }
    matrix.commodities[it->second].demand += row.volume * scale;
  }
  return matrix;
}

DemandMatrix ParseDemands(std::string_view text, const FlowNetwork& network,
                          double scale) {
  return BindDemands(ParseDemandRows(text), network, scale);
}

std::string FormatDemands(const DemandMatrix& demands,
                          const FlowNetwork& network) {
  std::ostringstream out;
  char buffer[64];
  for (const Commodity& c : demands.commodities) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", c.demand);
    out << "DEMAND " << network.node_name(c.source) << ' '
        << network.node_name(c.sink) << ' ' << buffer << '\n';
  }
  return out.str();
}

DemandMatrix GenerateGravityDemands(const FlowNetwork& network, int flow_count,
                                    std::uint64_t seed) {
  const std::uint64_t n = network.node_count();
  const std::uint64_t pairs = n * (n - 1);
  if (flow_count <= 0) throw InvalidArgument("flow_count must be positive");
  if (static_cast<std::uint64_t>(flow_count) > pairs) {
    throw InvalidArgument("flow_count " + std::to_string(flow_count) +
                          " exceeds the " + std::to_string(pairs) +
                          " available ordered pairs");
  }
  Rng rng(seed);
  std::vector<double> mass(n);
  for (double& m : mass) {
    do {
      m = rng.Exponential();
    } while (m <= 0);
  }

  std::vector<std::uint64_t> picks =
      rng.SampleWithoutReplacement(pairs, flow_count);
  std::sort(picks.begin(), picks.end());

  DemandMatrix matrix;
  double total = 0;
  for (std::uint64_t pick : picks) {
    NodeIndex s = static_cast<NodeIndex>(pick / (n - 1));
    NodeIndex t = static_cast<NodeIndex>(pick % (n - 1));
    if (t >= s) ++t;
    double volume = mass[s] * mass[t];
    total += volume;
    matrix.commodities.push_back(Commodity{s, t, volume});
  }
  const double mean = total / static_cast<double>(flow_count);
  for (Commodity& c : matrix.commodities) c.demand /= mean;
  return matrix;
}

}  // namespace srte
