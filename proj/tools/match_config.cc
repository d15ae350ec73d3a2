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

#include "match_config.h"

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace myerson::tools {

namespace {

arena::TeamSetup ParseTeam(const nlohmann::json& doc) {
  arena::TeamSetup team = arena::DefaultTeam(
      arena::ParsePolicy(doc.value("policy", std::string("NoOp"))));
  if (doc.contains("agents")) {
    for (const auto& agent : doc["agents"]) {
      const arena::Role role =
          arena::ParseRole(agent.at("role").get<std::string>());
      arena::AgentSetup& setup = team[static_cast<int>(role)];
      if (agent.contains("policy")) {
        setup.policy = arena::ParsePolicy(agent["policy"].get<std::string>());
      }
      setup.stats.max_hp = agent.value("max_hp", setup.stats.max_hp);
      setup.stats.attack_power =
          agent.value("attack_power", setup.stats.attack_power);
      setup.stats.healing_power =
          agent.value("healing_power", setup.stats.healing_power);
      setup.stats.control_chance =
          agent.value("control_chance", setup.stats.control_chance);
      setup.stats.current_hp = setup.stats.max_hp;
    }
  }
  for (const auto& agent : team) arena::ValidateStats(agent.stats);
  return team;
}

}  // namespace

arena::MatchConfig ParseMatchConfigJson(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    arena::MatchConfig config;
    if (doc.contains("team_a")) config.team_a = ParseTeam(doc["team_a"]);
    if (doc.contains("team_b")) config.team_b = ParseTeam(doc["team_b"]);
    config.t_max = doc.value("t_max", config.t_max);
    config.seed = doc.value("seed", config.seed);
    if (config.t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid match config: ") +
                                e.what());
  }
}

}  // namespace myerson::tools
