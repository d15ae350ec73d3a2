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

#ifndef MYERSON_ARENA_GAME_H_
#define MYERSON_ARENA_GAME_H_

#include <string>
#include <string_view>
#include <vector>

#include "myerson/arena.h"
#include "myerson/hkg.h"
#include "myerson/rollout.h"

namespace myerson::arena {

// Feature labels used for the arena players.
inline constexpr std::string_view kMaxHealthPoints = "MaxHealthPoints";
inline constexpr std::string_view kPolicy = "Policy";
inline constexpr std::string_view kAttackPower = "AttackPower";
inline constexpr std::string_view kHealingPower = "HealingPower";
inline constexpr std::string_view kControlChance = "ControlChance";
inline constexpr std::string_view kCurrentHealthPoints = "CurrentHealthPoints";

// Team A's roster: per role one necessary attribute (MaxHealthPoints), three
// active attributes, the policy, and the dynamic CurrentHealthPoints.
std::vector<AgentFeatureSpec> ArenaRoster();

// The 15-player knowledge graph built from ArenaRoster().
const HkgGraph& ArenaHkg();

// Binds the arena simulator to a player numbering. Attribute players carry
// numbers, policy players carry policy names; absent players fall back to 0
// and "NoOp".
class ArenaBinding {
 public:
  // `players` must describe team A features using the labels above and the
  // role names as agent names.
  ArenaBinding(std::vector<HkgPlayer> players, TeamSetup team_b,
               int t_max = kDefaultRoundLimit);
  explicit ArenaBinding(TeamSetup team_b)
      : ArenaBinding(ArenaHkg().players, std::move(team_b)) {}

  // Team A configuration encoded by a full assignment.
  TeamSetup TeamA(const FullAssignment& assignment) const;
  double Simulate(const FullAssignment& assignment, std::uint64_t seed) const;

  FullAssignment Baselines() const;
  // Default stats and the given policy for every team A agent.
  FullAssignment RealValues(PolicyKind team_a_policy) const;

  // Coalitional game for one matchup, ready for the rollout module.
  RolloutGame Game(PolicyKind team_a_policy) const;

 private:
  enum class Field { kMaxHp, kAttack, kHealing, kControl, kPolicy };
  struct Slot {
    Role role;
    Field field;
  };
  std::vector<HkgPlayer> players_;
  std::vector<Slot> slots_;
  TeamSetup team_b_;
  int t_max_;
};

}  // namespace myerson::arena

#endif  // MYERSON_ARENA_GAME_H_
