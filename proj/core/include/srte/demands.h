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

#ifndef SRTE_DEMANDS_H_
#define SRTE_DEMANDS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srte/network.h"

namespace srte {

// One (s_i, t_i, D_i) triple.
struct Commodity {
  NodeIndex source = 0;
  NodeIndex sink = 0;
  double demand = 0;
};

struct DemandMatrix {
  std::vector<Commodity> commodities;
  double scale = 1;

  double TotalDemand() const;
  // Copy with every demand multiplied by `factor`.
  DemandMatrix Scaled(double factor) const;
};

// A DEMAND line before node names are resolved against a topology.
struct DemandRow {
  std::string source;
  std::string sink;
  double volume = 0;
  int line = 0;
};

// Line format, '#' starts a comment:
//   DEMAND <s> <t> <volume>
// Negative volumes and s == t are rejected here.
std::vector<DemandRow> ParseDemandRows(std::string_view text);

// Resolves names, multiplies by `scale` and sums duplicate (s, t) rows.
// Commodities keep the order of their first row.
DemandMatrix BindDemands(const std::vector<DemandRow>& rows,
                         const FlowNetwork& network, double scale = 1);

DemandMatrix ParseDemands(std::string_view text, const FlowNetwork& network,
                          double scale = 1);

// One DEMAND row per commodity carrying its (already scaled) volume.
std::string FormatDemands(const DemandMatrix& demands,
                          const FlowNetwork& network);

// Gravity model: each node draws an exponential(1) mass m_v, `flow_count`
// distinct ordered pairs are sampled uniformly and pair (s, t) gets a volume
// proportional to m_s * m_t, normalized so the mean volume is 1.
DemandMatrix GenerateGravityDemands(const FlowNetwork& network, int flow_count,
                                    std::uint64_t seed);

}  // namespace srte

#endif  // SRTE_DEMANDS_H_
