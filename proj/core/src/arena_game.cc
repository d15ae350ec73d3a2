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

#include "myerson/arena_game.h"

#include <stdexcept>

namespace myerson::arena {

std::vector<AgentFeatureSpec> ArenaRoster() {
  std::vector<AgentFeatureSpec> roster;
  for (Role role : kRoles) {
    AgentFeatureSpec agent;
    agent.agent_id = static_cast<int>(role);
    agent.name = std::string(ToString(role));
    agent.features = {
        {std::string(kMaxHealthPoints), AttributeClass::kNecessary},
        {std::string(kPolicy), AttributeClass::kPolicy},
        {std::string(kAttackPower), AttributeClass::kActive},
        {std::string(kHealingPower), AttributeClass::kActive},
        {std::string(kControlChance), AttributeClass::kActive},
        {std::string(kCurrentHealthPoints), AttributeClass::kDynamic},
    };
    roster.push_back(std::move(agent));
  }
  return roster;
}

const HkgGraph& ArenaHkg() {
  static const HkgGraph hkg = BuildHkg(ArenaRoster());
  return hkg;
}

ArenaBinding::ArenaBinding(std::vector<HkgPlayer> players, TeamSetup team_b,
                           int t_max)
    : players_(std::move(players)), team_b_(std::move(team_b)), t_max_(t_max) {
  for (const auto& agent : team_b_) ValidateStats(agent.stats);
  for (const auto& p : players_) {
    Slot slot{ParseRole(p.agent_name), Field::kMaxHp};
    if (p.feature == kMaxHealthPoints) {
      slot.field = Field::kMaxHp;
    } else if (p.feature == kAttackPower) {
      slot.field = Field::kAttack;
    } else if (p.feature == kHealingPower) {
      slot.field = Field::kHealing;
    } else if (p.feature == kControlChance) {
      slot.field = Field::kControl;
    } else if (p.feature == kPolicy) {
      slot.field = Field::kPolicy;
    } else {
      throw std::invalid_argument("arena has no feature " + p.label());
    }
    slots_.push_back(slot);
  }
}

TeamSetup ArenaBinding::TeamA(const FullAssignment& assignment) const {
  if (assignment.size() != slots_.size()) {
    throw std::invalid_argument("assignment length does not match players");
  }
  TeamSetup team;
  for (auto& agent : team) {
    agent.stats = AgentStats{0.0, 0.0, 0.0, 0.0, 0.0};
    agent.policy = PolicyKind::kNoOp;
  }
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    AgentSetup& agent = team[static_cast<int>(slots_[i].role)];
    if (slots_[i].field == Field::kPolicy) {
      const auto* name = std::get_if<std::string>(&assignment[i]);
      if (name == nullptr) {
        throw std::invalid_argument(players_[i].label() +
                                    " expects a policy name");
      }
      agent.policy = ParsePolicy(*name);
      continue;
    }
    const auto* number = std::get_if<double>(&assignment[i]);
    if (number == nullptr) {
      throw std::invalid_argument(players_[i].label() + " expects a number");
    }
    switch (slots_[i].field) {
      case Field::kMaxHp: agent.stats.max_hp = *number; break;
      case Field::kAttack: agent.stats.attack_power = *number; break;
      case Field::kHealing: agent.stats.healing_power = *number; break;
      case Field::kControl: agent.stats.control_chance = *number; break;
      case Field::kPolicy: break;
    }
  }
  for (auto& agent : team) {
    agent.stats.current_hp = agent.stats.max_hp;
    ValidateStats(agent.stats);
  }
  return team;
}

double ArenaBinding::Simulate(const FullAssignment& assignment,
                              std::uint64_t seed) const {
  MatchConfig config;
  config.team_a = TeamA(assignment);
  config.team_b = team_b_;
  config.t_max = t_max_;
  config.seed = seed;
  return RunMatch(config).score;
}

FullAssignment ArenaBinding::Baselines() const {
  FullAssignment out;
  for (const auto& slot : slots_) {
    if (slot.field == Field::kPolicy) {
      out.emplace_back(std::string(ToString(PolicyKind::kNoOp)));
    } else {
      out.emplace_back(0.0);
    }
  }
  return out;
}

FullAssignment ArenaBinding::RealValues(PolicyKind team_a_policy) const {
  const AgentStats defaults;
  FullAssignment out;
  for (const auto& slot : slots_) {
    switch (slot.field) {
      case Field::kPolicy:
        out.emplace_back(std::string(ToString(team_a_policy)));
        break;
      case Field::kMaxHp: out.emplace_back(defaults.max_hp); break;
      case Field::kAttack: out.emplace_back(defaults.attack_power); break;
      case Field::kHealing: out.emplace_back(defaults.healing_power); break;
      case Field::kControl: out.emplace_back(defaults.control_chance); break;
    }
  }
  return out;
}

RolloutGame ArenaBinding::Game(PolicyKind team_a_policy) const {
  std::vector<std::string> labels;
  for (const auto& p : players_) labels.push_back(p.label());
  return RolloutGame{
      GameSpec(std::move(labels)), Baselines(), RealValues(team_a_policy),
      [binding = *this](const FullAssignment& assignment, std::uint64_t seed) {
        return binding.Simulate(assignment, seed);
      }};
}

}  // namespace myerson::arena
