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

#ifndef MYERSON_GRAPH_H_
#define MYERSON_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "myerson/coalition.h"
#include "myerson/shapley.h"

namespace myerson {

// Undirected simple graph over players 0..n-1 describing which players may
// cooperate directly.
class InteractionGraph {
 public:
  explicit InteractionGraph(int num_players);

  static InteractionGraph Complete(int num_players);
  static InteractionGraph Edgeless(int num_players) {
    return InteractionGraph(num_players);
  }

  int num_players() const { return static_cast<int>(adjacency_.size()); }

  // Throws std::invalid_argument on self-loops or out-of-range endpoints.
  // Adding an existing edge is a no-op.
  void AddEdge(PlayerId a, PlayerId b);
  bool HasEdge(PlayerId a, PlayerId b) const;
  Coalition Neighbors(PlayerId player) const {
    return Coalition(adjacency_.at(player));
  }
  // Edges as (a, b) with a < b, sorted.
  std::vector<std::pair<PlayerId, PlayerId>> Edges() const;
  int num_edges() const;

  // Subgraph induced by `keep`, renumbered densely in increasing order of the
  // original indices.
  InteractionGraph Induced(Coalition keep) const;

  friend bool operator==(const InteractionGraph&,
                         const InteractionGraph&) = default;

 private:
  std::vector<std::uint32_t> adjacency_;
};

// Connected components of an induced subgraph, ordered by smallest member.
using ComponentCover = std::vector<Coalition>;

// Calls fn(part) for each connected component of the subgraph induced by
// `coalition`, in order of smallest member. Does not allocate.
template <typename Fn>
void ForEachComponent(const InteractionGraph& graph, Coalition coalition,
                      Fn&& fn) {
  std::uint32_t remaining = coalition.bits();
  while (remaining != 0) {
    const std::uint32_t seed = remaining & (~remaining + 1);
    std::uint32_t part = seed;
    std::uint32_t frontier = seed;
    while (frontier != 0) {
      std::uint32_t reached = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        reached |= graph.Neighbors(std::countr_zero(f)).bits();
      }
      frontier = reached & remaining & ~part;
      part |= frontier;
    }
    fn(Coalition(part));
    remaining &= ~part;
  }
}

ComponentCover Components(const InteractionGraph& graph, Coalition coalition);

bool IsConnected(const InteractionGraph& graph, Coalition coalition);

// v restricted by the graph: the sum of v over the components of K.
double GraphValue(const InteractionGraph& graph,
                  const CharacteristicFunction& v, Coalition coalition);

// Precomputed decomposition of every coalition of a graph. Ids refer to
// positions in connected(), which lists the empty coalition first and then
// every connected coalition in cardinality-major, numeric order.
class ComponentIndex {
 public:
  explicit ComponentIndex(const InteractionGraph& graph);

  int num_players() const { return num_players_; }
  const std::vector<Coalition>& connected() const { return connected_; }
  std::span<const std::uint32_t> PartsOf(Coalition coalition) const;

  // Fills table[K] = sum of connected_values over the parts of K. The parts
  // are added in cover order starting from the first part's value, so a
  // connected coalition receives its own value bit for bit.
  void Synthesize(std::span<const double> connected_values,
                  std::span<double> table) const;

 private:
  int num_players_;
  std::vector<Coalition> connected_;
  std::vector<std::uint32_t> offsets_;  // size 2^n + 1
  std::vector<std::uint32_t> parts_;
};

struct MyersonResult {
  AttributionVector values;
  // Distinct coalitions handed to v, the empty coalition included.
  std::int64_t oracle_calls = 0;
};

// Shapley values of the graph-restricted game. v is called once per distinct
// connected coalition (and once on the empty coalition, which must yield 0).
MyersonResult ExactMyerson(const GameSpec& game, const InteractionGraph& graph,
                           const CharacteristicFunction& v,
                           const ExactOptions& options = {});

}  // namespace myerson

#endif  // MYERSON_GRAPH_H_
