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

#include "myerson/hkg.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "json.hpp"

namespace myerson {

namespace {

int ClassRank(AttributeClass cls) {
  switch (cls) {
    case AttributeClass::kNecessary: return 0;
    case AttributeClass::kPolicy: return 1;
    case AttributeClass::kActive: return 2;
    case AttributeClass::kPassive: return 3;
    case AttributeClass::kDynamic: return 4;
  }
  return 5;
}

// Pairs (i, j), i < j, where both players satisfy `pick` and `same(i, j)`.
template <typename Pick, typename Same>
std::vector<HkgEdge> Clique(const std::vector<HkgPlayer>& players, HkgRule rule,
                            Pick pick, Same same) {
  std::vector<HkgEdge> edges;
  const int n = static_cast<int>(players.size());
  for (int i = 0; i < n; ++i) {
    if (!pick(players[i])) continue;
    for (int j = i + 1; j < n; ++j) {
      if (pick(players[j]) && same(players[i], players[j])) {
        edges.push_back({i, j, rule});
      }
    }
  }
  return edges;
}

// Pairs joining a player of class `from` to a player of class `to` of the
// same agent.
std::vector<HkgEdge> Bipartite(const std::vector<HkgPlayer>& players,
                               HkgRule rule, AttributeClass from,
                               AttributeClass to) {
  std::vector<HkgEdge> edges;
  const int n = static_cast<int>(players.size());
  for (int i = 0; i < n; ++i) {
    if (players[i].cls != from) continue;
    for (int j = 0; j < n; ++j) {
      if (players[j].cls == to && players[j].agent_id == players[i].agent_id) {
        edges.push_back({std::min(i, j), std::max(i, j), rule});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const HkgEdge& x, const HkgEdge& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  return edges;
}

bool SameAgent(const HkgPlayer& x, const HkgPlayer& y) {
  return x.agent_id == y.agent_id;
}

}  // namespace

std::string_view ToString(AttributeClass cls) {
  switch (cls) {
    case AttributeClass::kNecessary: return "Necessary";
    case AttributeClass::kActive: return "Active";
    case AttributeClass::kPassive: return "Passive";
    case AttributeClass::kPolicy: return "Policy";
    case AttributeClass::kDynamic: return "Dynamic";
  }
  return "?";
}

AttributeClass ParseAttributeClass(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "necessary") return AttributeClass::kNecessary;
  if (lower == "active") return AttributeClass::kActive;
  if (lower == "passive") return AttributeClass::kPassive;
  if (lower == "policy") return AttributeClass::kPolicy;
  if (lower == "dynamic") return AttributeClass::kDynamic;
  throw std::invalid_argument("unknown attribute class: " + std::string(text));
}

std::vector<HkgEdge> ActiveCliqueEdges(const std::vector<HkgPlayer>& players) {
  return Clique(
      players, HkgRule::kActiveClique,
      [](const HkgPlayer& p) { return p.cls == AttributeClass::kActive; },
      SameAgent);
}

std::vector<HkgEdge> ActivePolicyEdges(const std::vector<HkgPlayer>& players) {
  return Bipartite(players, HkgRule::kActivePolicy, AttributeClass::kActive,
                   AttributeClass::kPolicy);
}

std::vector<HkgEdge> NecessaryPolicyEdges(
    const std::vector<HkgPlayer>& players) {
  return Bipartite(players, HkgRule::kNecessaryPolicy,
                   AttributeClass::kNecessary, AttributeClass::kPolicy);
}

std::vector<HkgEdge> NecessaryCliqueEdges(
    const std::vector<HkgPlayer>& players) {
  return Clique(
      players, HkgRule::kNecessaryClique,
      [](const HkgPlayer& p) { return p.cls == AttributeClass::kNecessary; },
      [](const HkgPlayer&, const HkgPlayer&) { return true; });
}

std::vector<HkgEdge> PassiveCliqueEdges(const std::vector<HkgPlayer>& players) {
  return Clique(
      players, HkgRule::kPassiveClique,
      [](const HkgPlayer& p) { return p.cls == AttributeClass::kPassive; },
      SameAgent);
}

std::vector<HkgEdge> PassiveNecessaryEdges(
    const std::vector<HkgPlayer>& players) {
  return Bipartite(players, HkgRule::kPassiveNecessary,
                   AttributeClass::kPassive, AttributeClass::kNecessary);
}

GameSpec HkgGraph::game() const {
  std::vector<std::string> labels;
  labels.reserve(players.size());
  for (const auto& p : players) labels.push_back(p.label());
  return GameSpec(std::move(labels));
}

PlayerId HkgGraph::IndexOf(int agent_id, std::string_view feature) const {
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (players[i].agent_id == agent_id && players[i].feature == feature) {
      return static_cast<PlayerId>(i);
    }
  }
  throw std::out_of_range("no player " + std::string(feature) + " for agent " +
                          std::to_string(agent_id));
}

Coalition HkgGraph::PlayersOf(int agent_id, AttributeClass cls) const {
  Coalition out;
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (players[i].agent_id == agent_id && players[i].cls == cls) {
      out = out.With(static_cast<PlayerId>(i));
    }
  }
  return out;
}

Coalition HkgGraph::PlayersOf(int agent_id) const {
  Coalition out;
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (players[i].agent_id == agent_id) out = out.With(PlayerId(i));
  }
  return out;
}

HkgGraph BuildHkg(const std::vector<AgentFeatureSpec>& roster) {
  if (roster.empty()) throw HkgValidationError("roster is empty");
  HkgGraph hkg;
  std::set<int> agent_ids;
  for (const auto& agent : roster) {
    const std::string name =
        agent.name.empty() ? "agent" + std::to_string(agent.agent_id)
                           : agent.name;
    if (!agent_ids.insert(agent.agent_id).second) {
      throw HkgValidationError("duplicate agent id " +
                               std::to_string(agent.agent_id));
    }
    if (agent.features.empty()) {
      throw HkgValidationError("agent " + name + " has no features");
    }
    std::set<std::string> labels;
    int policies = 0;
    int necessary = 0;
    for (const auto& f : agent.features) {
      if (!labels.insert(f.label).second) {
        throw HkgValidationError("agent " + name + " repeats label " + f.label);
      }
      policies += f.cls == AttributeClass::kPolicy;
      necessary += f.cls == AttributeClass::kNecessary;
    }
    if (policies != 1) {
      throw HkgValidationError("agent " + name + " must have exactly one " +
                               "Policy entry, has " + std::to_string(policies));
    }
    if (necessary == 0) {
      hkg.warnings.push_back("agent " + name +
                             " has no necessary attribute; its subtree has no "
                             "removable root");
    }
    std::vector<Feature> sorted;
    for (const auto& f : agent.features) {
      if (f.cls != AttributeClass::kDynamic) sorted.push_back(f);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Feature& x, const Feature& y) {
                return std::pair(ClassRank(x.cls), x.label) <
                       std::pair(ClassRank(y.cls), y.label);
              });
    for (const auto& f : sorted) {
      hkg.players.push_back({agent.agent_id, name, f.label, f.cls});
    }
  }
  if (hkg.players.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw HkgValidationError("roster yields " +
                             std::to_string(hkg.players.size()) +
                             " players, more than " +
                             std::to_string(kMaxPlayers));
  }

  hkg.graph = InteractionGraph(static_cast<int>(hkg.players.size()));
  for (auto generator :
       {ActiveCliqueEdges, ActivePolicyEdges, NecessaryPolicyEdges,
        NecessaryCliqueEdges, PassiveCliqueEdges, PassiveNecessaryEdges}) {
    for (const HkgEdge& edge : generator(hkg.players)) {
      hkg.graph.AddEdge(edge.a, edge.b);
      hkg.edges.push_back(edge);
    }
  }
  return hkg;
}

ComponentCover DecomposabilityProbe(const HkgGraph& hkg, int agent_id) {
  const Coalition necessary =
      hkg.PlayersOf(agent_id, AttributeClass::kNecessary);
  if (necessary.empty()) {
    throw std::invalid_argument("agent " + std::to_string(agent_id) +
                                " has no necessary attribute");
  }
  const Coalition all = Coalition::Full(hkg.graph.num_players());
  return Components(hkg.graph, all.Minus(necessary));
}

std::vector<AgentFeatureSpec> ParseRosterJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw HkgValidationError(std::string("invalid roster JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("agents") ||
      !doc["agents"].is_array()) {
    throw HkgValidationError("roster JSON needs an \"agents\" array");
  }
  std::vector<AgentFeatureSpec> roster;
  try {
    for (const auto& agent : doc["agents"]) {
      AgentFeatureSpec spec;
      spec.agent_id = agent.at("id").get<int>();
      spec.name = agent.value("name", std::string());
      for (const auto& feature : agent.at("features")) {
        spec.features.push_back(
            {feature.at("label").get<std::string>(),
             ParseAttributeClass(feature.at("class").get<std::string>())});
      }
      roster.push_back(std::move(spec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw HkgValidationError(std::string("malformed roster: ") + e.what());
  }
  return roster;
}

std::string FormatPlayerTableJson(const HkgGraph& hkg) {
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < hkg.players.size(); ++i) {
    const auto& p = hkg.players[i];
    table.push_back({{"index", i},
                     {"agent", p.agent_id},
                     {"agent_name", p.agent_name},
                     {"feature", p.feature},
                     {"class", std::string(ToString(p.cls))},
                     {"label", p.label()}});
  }
  return table.dump(2) + "\n";
}

}  // namespace myerson
