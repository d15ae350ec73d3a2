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

#ifndef MYERSON_ARENA_H_
#define MYERSON_ARENA_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace myerson::arena {

// Three-versus-three turn-based arena. Each team fields a Warrior (attacks),
// a Mage (puts enemies to sleep) and a Priest (heals teammates). Team A is
// the team under analysis; the score is 100 * (r / T + 1).

enum class Role { kWarrior = 0, kMage = 1, kPriest = 2 };
inline constexpr std::array<Role, 3> kRoles = {Role::kWarrior, Role::kMage,
                                               Role::kPriest};

enum class PolicyKind { kRandom, kSmart, kNoOp, kScriptedRL };
inline constexpr std::array<PolicyKind, 4> kPolicies = {
    PolicyKind::kRandom, PolicyKind::kSmart, PolicyKind::kNoOp,
    PolicyKind::kScriptedRL};

std::string_view ToString(Role role);
std::string_view ToString(PolicyKind policy);
// Accepts "Random", "Smart", "NoOp"/"No-Op", "ScriptedRL"/"RL"
// (case-insensitive). Throws std::invalid_argument otherwise.
PolicyKind ParsePolicy(std::string_view text);
Role ParseRole(std::string_view text);

inline constexpr int kDefaultRoundLimit = 1000;

struct AgentStats {
  double max_hp = 100.0;         // [0, 100]
  double attack_power = 10.0;    // [0, 20]
  double healing_power = 5.0;    // [0, 100]
  double control_chance = 0.5;   // [0, 0.5]
  double current_hp = 100.0;     // [0, max_hp]

  bool alive() const { return current_hp > 0.0; }
};

// Throws std::invalid_argument when a value leaves its range.
void ValidateStats(const AgentStats& stats);

struct AgentSetup {
  AgentStats stats;
  PolicyKind policy = PolicyKind::kNoOp;
};

// Indexed by Role.
using TeamSetup = std::array<AgentSetup, 3>;

// Every agent with default stats and the given policy.
TeamSetup DefaultTeam(PolicyKind policy);

struct MatchConfig {
  TeamSetup team_a = DefaultTeam(PolicyKind::kNoOp);
  TeamSetup team_b = DefaultTeam(PolicyKind::kNoOp);
  int t_max = kDefaultRoundLimit;
  std::uint64_t seed = 0;
};

struct SimulationOutcome {
  int result = 0;  // -1 team A eliminated, +1 team B eliminated, 0 draw
  int rounds = 0;
  double score = 0.0;
};

// Target HP after a warrior hit: max(0, hp - attack_power).
double WarriorAttack(double target_hp, double attack_power);
// Probability that a mage's control lands: chance * (1 + attack_power / 20).
double MageControlProbability(double control_chance, double attack_power);
// Target HP after a heal: min(hp + healing_power, max_hp).
double PriestHeal(double target_hp, double healing_power, double target_max_hp);
// 100 * (r / T + 1). Throws std::domain_error for r outside {-1,0,1} or
// T < 1.
double Score(int result, int rounds);
// Mean of the outcome scores. Throws std::domain_error on an empty list.
double MeanScore(std::span<const SimulationOutcome> outcomes);

struct AgentState {
  AgentStats stats;
  bool asleep = false;
  bool alive() const { return stats.alive(); }
};
using TeamState = std::array<AgentState, 3>;

TeamState InitialState(const TeamSetup& team);

enum class ActionType { kNone, kAttack, kControl, kHeal };

struct Action {
  ActionType type = ActionType::kNone;
  Role target = Role::kWarrior;  // enemy for attack/control, ally for heal

  friend bool operator==(const Action&, const Action&) = default;
};

// Match randomness. Draws are defined on top of the 64-bit Mersenne
// Twister output so results do not depend on the standard library's
// distribution implementations.
class MatchRng {
 public:
  explicit MatchRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound).
  int UniformIndex(int bound) {
    return static_cast<int>(((engine_() >> 32) * std::uint64_t(bound)) >> 32);
  }
  // Uniform in [0, 1).
  double UniformUnit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// Chooses what the agent in `role` of `own` does this activation.
Action SelectAction(PolicyKind policy, Role role, const TeamState& own,
                    const TeamState& enemy, MatchRng& rng);

struct MatchEvent {
  int round;
  char team;  // 'A' or 'B'
  Role role;
  std::string action;  // attack, control, heal, none, asleep
  std::optional<Role> target;
  double value;  // HP after attack/heal, 1/0 for control success
};

struct MatchHooks {
  std::vector<MatchEvent>* events = nullptr;
  // Called after every activation with both team states.
  std::function<void(const TeamState&, const TeamState&)> observer;
};

// Plays one match. Teams alternate, the starting team is drawn from the
// seed, agents act Warrior, Mage, Priest, and victory is checked after every
// activation (and once before the first). A round counts once both teams
// have moved; an unfinished last round still counts.
SimulationOutcome RunMatch(const MatchConfig& config,
                           const MatchHooks& hooks = {});

// CSV: round,team,role,action,target,value
std::string FormatEventsCsv(const std::vector<MatchEvent>& events);

}  // namespace myerson::arena

#endif  // MYERSON_ARENA_H_
