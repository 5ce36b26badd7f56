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

#include "srte/network.h"

#include <sstream>

#include "text_util.h"

namespace srte {

std::optional<NodeIndex> FlowNetwork::FindNode(std::string_view name) const {
  auto it = node_index_.find(name);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> FlowNetwork::FindEdge(NodeIndex tail,
                                               NodeIndex head) const {
  auto it = edge_index_.find({tail, head});
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::string FlowNetwork::EdgeLabel(EdgeIndex e) const {
  const Edge& edge = edges_[e];
  return node_names_[edge.tail] + "->" + node_names_[edge.head];
}

FlowNetwork FlowNetwork::WithInverseCapacityCosts() const {
  FlowNetwork copy = *this;
  for (Edge& edge : copy.edges_) edge.cost = 1 / edge.exact_capacity;
  return copy;
}

NodeIndex NetworkBuilder::AddNode(std::string_view name) {
  if (name.empty()) throw InvalidArgument("empty node name");
  if (auto existing = network_.FindNode(name)) return *existing;
  NodeIndex index = network_.node_count();
  network_.node_names_.emplace_back(name);
  network_.node_index_.emplace(std::string(name), index);
  network_.out_.emplace_back();
  network_.in_.emplace_back();
  return index;
}

EdgeIndex NetworkBuilder::AddEdge(std::string_view tail, std::string_view head,
                                  const Rational& capacity,
                                  const Rational& cost) {
  if (tail == head) {
    throw InvalidArgument("self-loop on node '" + std::string(tail) + "'");
  }
  NodeIndex u = AddNode(tail);
  NodeIndex v = AddNode(head);
  return AddEdge(u, v, capacity, cost);
}

EdgeIndex NetworkBuilder::AddEdge(NodeIndex tail, NodeIndex head,
                                  const Rational& capacity,
                                  const Rational& cost) {
  const int n = network_.node_count();
  if (tail < 0 || tail >= n || head < 0 || head >= n) {
    throw InvalidArgument("edge endpoint out of range");
  }
  const std::string label =
      network_.node_names_[tail] + "->" + network_.node_names_[head];
  if (tail == head) throw InvalidArgument("self-loop " + label);
  if (capacity <= 0) throw InvalidArgument("non-positive capacity on " + label);
  if (cost <= 0) throw InvalidArgument("non-positive cost on " + label);
  if (network_.edge_index_.count({tail, head})) {
    throw InvalidArgument("duplicate edge " + label);
  }
  EdgeIndex index = network_.edge_count();
  network_.edges_.push_back(
      Edge{tail, head, capacity, ToDouble(capacity), cost});
  network_.edge_index_.emplace(std::make_pair(tail, head), index);
  network_.out_[tail].push_back(index);
  network_.in_[head].push_back(index);
  return index;
}

FlowNetwork NetworkBuilder::Build() && {
  if (network_.node_count() == 0) throw InvalidArgument("network has no nodes");
  return std::move(network_);
}

FlowNetwork ParseTopology(std::string_view text) {
  NetworkBuilder builder;
  int line_number = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_number;
    std::vector<std::string_view> tokens = Tokenize(StripComment(line));
    if (tokens.empty()) continue;
    if (tokens[0] != "EDGE") {
      throw ParseError(line_number,
                       "unknown directive '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() != 4 && tokens.size() != 5) {
      throw ParseError(line_number, "expected: EDGE <u> <v> <capacity> [<cost>]");
    }
    try {
      Rational capacity = ParseRational(tokens[3]);
      Rational cost = tokens.size() == 5 ? ParseRational(tokens[4]) : Rational(1);
      builder.AddEdge(tokens[1], tokens[2], capacity, cost);
    } catch (const InvalidArgument& e) {
      throw ParseError(line_number, e.what());
    }
  }
  if (builder.node_count() == 0) throw ParseError(0, "topology has no edges");
  return std::move(builder).Build();
}

std::string FormatTopology(const FlowNetwork& network) {
  std::ostringstream out;
  for (const Edge& edge : network.edges()) {
    out << "EDGE " << network.node_name(edge.tail) << ' '
        << network.node_name(edge.head) << ' '
        << FormatRational(edge.exact_capacity);
    if (edge.cost != 1) out << ' ' << FormatRational(edge.cost);
    out << '\n';
  }
  return out.str();
}

}  // namespace srte
