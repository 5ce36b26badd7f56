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

#ifndef SRTE_NETWORK_H_
#define SRTE_NETWORK_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srte/common.h"

namespace srte {

// A directed link. Capacity is kept both exactly (for inverse-capacity
// routing costs) and as a double (for LP coefficients).
struct Edge {
  NodeIndex tail = 0;
  NodeIndex head = 0;
  Rational exact_capacity;
  double capacity = 0;
  Rational cost = 1;
};

// Directed capacitated graph G=(V,E,c) with routing costs. Immutable once
// built; nodes are indexed densely in order of first appearance.
class FlowNetwork {
 public:
  FlowNetwork() = default;

  int node_count() const { return static_cast<int>(node_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& node_names() const { return node_names_; }
  const std::string& node_name(NodeIndex node) const { return node_names_[node]; }
  std::optional<NodeIndex> FindNode(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::optional<EdgeIndex> FindEdge(NodeIndex tail, NodeIndex head) const;

  std::span<const EdgeIndex> out_edges(NodeIndex node) const { return out_[node]; }
  std::span<const EdgeIndex> in_edges(NodeIndex node) const { return in_[node]; }

  // "u->v" label used in reports.
  std::string EdgeLabel(EdgeIndex e) const;

  // Same topology with every routing cost replaced by 1/c(e).
  FlowNetwork WithInverseCapacityCosts() const;

 private:
  friend class NetworkBuilder;

  std::vector<std::string> node_names_;
  std::map<std::string, NodeIndex, std::less<>> node_index_;
  std::vector<Edge> edges_;
  std::map<std::pair<NodeIndex, NodeIndex>, EdgeIndex> edge_index_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
};

// Incremental construction with invariant checks. Every Add* throws
// InvalidArgument on a violated invariant.
class NetworkBuilder {
 public:
  // Returns the index of `name`, creating the node on first sight.
  NodeIndex AddNode(std::string_view name);

  EdgeIndex AddEdge(std::string_view tail, std::string_view head,
                    const Rational& capacity, const Rational& cost = 1);
  EdgeIndex AddEdge(NodeIndex tail, NodeIndex head, const Rational& capacity,
                    const Rational& cost = 1);

  int node_count() const { return network_.node_count(); }

  // Throws InvalidArgument if the network has no nodes.
  FlowNetwork Build() &&;

 private:
  FlowNetwork network_;
};

// Line format, '#' starts a comment:
//   EDGE <u> <v> <capacity> [<cost>]
// Throws ParseError carrying the offending line number.
FlowNetwork ParseTopology(std::string_view text);

// Inverse of ParseTopology for networks without isolated nodes.
std::string FormatTopology(const FlowNetwork& network);

}  // namespace srte

#endif  // SRTE_NETWORK_H_
