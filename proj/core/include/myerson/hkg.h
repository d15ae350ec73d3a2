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

#ifndef MYERSON_HKG_H_
#define MYERSON_HKG_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "myerson/coalition.h"
#include "myerson/graph.h"

namespace myerson {

// Expert classification of an agent feature.
enum class AttributeClass { kNecessary, kActive, kPassive, kPolicy, kDynamic };

std::string_view ToString(AttributeClass cls);
// Accepts "Necessary", "Active", "Passive", "Policy", "Dynamic"
// (case-insensitive). Throws std::invalid_argument otherwise.
AttributeClass ParseAttributeClass(std::string_view text);

struct Feature {
  std::string label;
  AttributeClass cls;
};

struct AgentFeatureSpec {
  int agent_id = 0;
  // Prefix of player labels ("Warrior" -> "Warrior.AttackPower"). Defaults
  // to "agent<id>" when empty.
  std::string name;
  std::vector<Feature> features;
};

class HkgValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Which construction rule justified an edge.
enum class HkgRule {
  kActiveClique = 1,         // actives of one agent, pairwise
  kActivePolicy = 2,         // active <-> own policy
  kNecessaryPolicy = 3,      // necessary <-> own policy
  kNecessaryClique = 4,      // necessary attributes of all agents, pairwise
  kPassiveClique = 5,        // passives of one agent, pairwise
  kPassiveNecessary = 6,     // passive <-> own necessary
};

struct HkgPlayer {
  int agent_id;
  std::string agent_name;
  std::string feature;  // label within the agent
  AttributeClass cls;
  std::string label() const { return agent_name + "." + feature; }
};

struct HkgEdge {
  PlayerId a;
  PlayerId b;
  HkgRule rule;
};

struct HkgGraph {
  InteractionGraph graph{0};
  std::vector<HkgPlayer> players;  // indexed by PlayerId
  std::vector<HkgEdge> edges;      // in rule order, each with a < b
  std::vector<std::string> warnings;

  GameSpec game() const;
  // Throws std::out_of_range when absent.
  PlayerId IndexOf(int agent_id, std::string_view feature) const;
  // Players of one agent with the given class.
  Coalition PlayersOf(int agent_id, AttributeClass cls) const;
  Coalition PlayersOf(int agent_id) const;
};

// The per-rule edge generators. Each returns edges (a < b) in a fixed order.
std::vector<HkgEdge> ActiveCliqueEdges(const std::vector<HkgPlayer>& players);
std::vector<HkgEdge> ActivePolicyEdges(const std::vector<HkgPlayer>& players);
std::vector<HkgEdge> NecessaryPolicyEdges(const std::vector<HkgPlayer>& players);
std::vector<HkgEdge> NecessaryCliqueEdges(const std::vector<HkgPlayer>& players);
std::vector<HkgEdge> PassiveCliqueEdges(const std::vector<HkgPlayer>& players);
std::vector<HkgEdge> PassiveNecessaryEdges(
    const std::vector<HkgPlayer>& players);

// Builds the hierarchical knowledge graph. Dynamic features are accepted
// and left out of the player set. Players are numbered by agent in roster
// order, then Necessary < Policy < Active < Passive, then by label.
HkgGraph BuildHkg(const std::vector<AgentFeatureSpec>& roster);

// Components left after removing the agent's necessary attributes from the
// grand coalition. Throws std::invalid_argument when the agent has none.
ComponentCover DecomposabilityProbe(const HkgGraph& hkg, int agent_id);

// Roster JSON: {"agents": [{"id": 0, "name": "Warrior",
//                           "features": [{"label": "...", "class": "..."}]}]}
std::vector<AgentFeatureSpec> ParseRosterJson(std::string_view text);
// Player index table: [{"index": 0, "agent": 0, "label": "...", ...}]
std::string FormatPlayerTableJson(const HkgGraph& hkg);

}  // namespace myerson

#endif  // MYERSON_HKG_H_
