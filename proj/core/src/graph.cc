// Copyright 2026 The Myerson Attribution Authors.
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

#include "myerson/graph.h"

#include <stdexcept>
#include <string>

#include "myerson/parallel.h"

namespace myerson {

InteractionGraph::InteractionGraph(int num_players) {
  if (num_players < 0 || num_players > kMaxPlayers) {
    throw std::invalid_argument("graph player count out of range: " +
                                std::to_string(num_players));
  }
  adjacency_.assign(num_players, 0u);
}

InteractionGraph InteractionGraph::Complete(int num_players) {
  InteractionGraph graph(num_players);
  const std::uint32_t all = Coalition::Full(num_players).bits();
  for (int i = 0; i < num_players; ++i) {
    graph.adjacency_[i] = all & ~(std::uint32_t{1} << i);
  }
  return graph;
}

void InteractionGraph::AddEdge(PlayerId a, PlayerId b) {
  const int n = num_players();
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(a) + " " + std::to_string(b));
  }
  if (a == b) {
    throw std::invalid_argument("self-loop on player " + std::to_string(a));
  }
  adjacency_[a] |= std::uint32_t{1} << b;
  adjacency_[b] |= std::uint32_t{1} << a;
}

bool InteractionGraph::HasEdge(PlayerId a, PlayerId b) const {
  return Neighbors(a).Contains(b);
}

std::vector<std::pair<PlayerId, PlayerId>> InteractionGraph::Edges() const {
  std::vector<std::pair<PlayerId, PlayerId>> edges;
  for (int a = 0; a < num_players(); ++a) {
    for (PlayerId b : Coalition(adjacency_[a]).Members()) {
      if (a < b) edges.emplace_back(a, b);
    }
  }
  return edges;
}

int InteractionGraph::num_edges() const {
  int twice = 0;
  for (std::uint32_t row : adjacency_) twice += std::popcount(row);
  return twice / 2;
}

InteractionGraph InteractionGraph::Induced(Coalition keep) const {
  const auto members = keep.Intersection(Coalition::Full(num_players()))
                           .Members();
  std::vector<int> remap(num_players(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    remap[members[i]] = static_cast<int>(i);
  }
  InteractionGraph out(static_cast<int>(members.size()));
  for (const auto& [a, b] : Edges()) {
    if (remap[a] >= 0 && remap[b] >= 0) out.AddEdge(remap[a], remap[b]);
  }
  return out;
}

ComponentCover Components(const InteractionGraph& graph, Coalition coalition) {
  ComponentCover cover;
  ForEachComponent(graph, coalition,
                   [&](Coalition part) { cover.push_back(part); });
  return cover;
}

bool IsConnected(const InteractionGraph& graph, Coalition coalition) {
  int parts = 0;
  ForEachComponent(graph, coalition, [&](Coalition) { ++parts; });
  return parts <= 1;
}

double GraphValue(const InteractionGraph& graph,
                  const CharacteristicFunction& v, Coalition coalition) {
  double total = 0.0;
  bool first = true;
  ForEachComponent(graph, coalition, [&](Coalition part) {
    const double value = v(part);
    total = first ? value : total + value;
    first = false;
  });
  return total;
}

ComponentIndex::ComponentIndex(const InteractionGraph& graph)
    : num_players_(graph.num_players()) {
  const std::size_t size = std::size_t{1} << num_players_;
  std::vector<std::uint32_t> id_of(size, 0);
  connected_.push_back(Coalition::Empty());
  for (Coalition k : AllCoalitionsByCardinality(num_players_)) {
    if (!k.empty() && IsConnected(graph, k)) {
      id_of[k.bits()] = static_cast<std::uint32_t>(connected_.size());
      connected_.push_back(k);
    }
  }
  offsets_.assign(size + 1, 0);
  parts_.reserve(size);
  for (std::size_t bits = 0; bits < size; ++bits) {
    offsets_[bits] = static_cast<std::uint32_t>(parts_.size());
    ForEachComponent(graph, Coalition(static_cast<std::uint32_t>(bits)),
                     [&](Coalition part) { parts_.push_back(id_of[part.bits()]); });
  }
  offsets_[size] = static_cast<std::uint32_t>(parts_.size());
}

std::span<const std::uint32_t> ComponentIndex::PartsOf(
    Coalition coalition) const {
  const auto bits = coalition.bits();
  return std::span<const std::uint32_t>(parts_).subspan(
      offsets_[bits], offsets_[bits + 1] - offsets_[bits]);
}

void ComponentIndex::Synthesize(std::span<const double> connected_values,
                                std::span<double> table) const {
  const std::size_t size = std::size_t{1} << num_players_;
  if (connected_values.size() != connected_.size() || table.size() != size) {
    throw std::invalid_argument("ComponentIndex::Synthesize: size mismatch");
  }
  table[0] = connected_values[0];
  for (std::size_t bits = 1; bits < size; ++bits) {
    const std::uint32_t begin = offsets_[bits];
    const std::uint32_t end = offsets_[bits + 1];
    double total = connected_values[parts_[begin]];
    for (std::uint32_t j = begin + 1; j < end; ++j) {
      total += connected_values[parts_[j]];
    }
    table[bits] = total;
  }
}

MyersonResult ExactMyerson(const GameSpec& game, const InteractionGraph& graph,
                           const CharacteristicFunction& v,
                           const ExactOptions& options) {
  if (graph.num_players() != game.num_players()) {
    throw std::invalid_argument("graph and game disagree on player count");
  }
  const ComponentIndex index(graph);
  const auto& connected = index.connected();
  std::vector<double> memo(connected.size(), 0.0);
  ParallelFor(connected.size(), options.threads, 256,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t j = begin; j < end; ++j) {
                  try {
                    memo[j] = v(connected[j]);
                  } catch (const OracleError&) {
                    throw;
                  } catch (const std::exception& e) {
                    throw OracleError(connected[j], e.what());
                  }
                }
              });
  if (memo[0] != 0.0) {
    throw std::invalid_argument(
        "characteristic function must vanish on the empty coalition");
  }
  std::vector<double> table(std::size_t{1} << game.num_players());
  index.Synthesize(memo, table);
  MyersonResult result;
  result.values = ShapleyAccumulator(game.num_players()).Compute(table);
  result.oracle_calls = static_cast<std::int64_t>(connected.size());
  return result;
}

}  // namespace myerson
