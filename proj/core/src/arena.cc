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

#include "myerson/arena.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace myerson::arena {

namespace {

std::string Lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

int Index(Role role) { return static_cast<int>(role); }

// Smart targeting order for enemies.
constexpr std::array<Role, 3> kThreatOrder = {Role::kPriest, Role::kMage,
                                              Role::kWarrior};

std::optional<Role> FirstAlive(const TeamState& team,
                               std::span<const Role> order) {
  for (Role role : order) {
    if (team[Index(role)].alive()) return role;
  }
  return std::nullopt;
}

std::optional<Role> RandomAlive(const TeamState& team, MatchRng& rng) {
  std::array<Role, 3> alive{};
  int count = 0;
  for (Role role : kRoles) {
    if (team[Index(role)].alive()) alive[count++] = role;
  }
  if (count == 0) return std::nullopt;
  return alive[rng.UniformIndex(count)];
}

// Ally minimising (or maximising) a key, ties to the earlier role.
template <typename Key>
std::optional<Role> BestAlly(const TeamState& team, Key key) {
  std::optional<Role> best;
  double best_key = 0.0;
  for (Role role : kRoles) {
    const AgentState& agent = team[Index(role)];
    if (!agent.alive()) continue;
    const double k = key(agent);
    if (!best || k < best_key) {
      best = role;
      best_key = k;
    }
  }
  return best;
}

ActionType NativeAction(Role role) {
  switch (role) {
    case Role::kWarrior: return ActionType::kAttack;
    case Role::kMage: return ActionType::kControl;
    case Role::kPriest: return ActionType::kHeal;
  }
  return ActionType::kNone;
}

Action Make(Role role, std::optional<Role> target) {
  if (!target) return {};
  return {NativeAction(role), *target};
}

Action RandomPolicy(Role role, const TeamState& own, const TeamState& enemy,
                    MatchRng& rng) {
  return Make(role, RandomAlive(role == Role::kPriest ? own : enemy, rng));
}

Action SmartPolicy(Role role, const TeamState& own, const TeamState& enemy) {
  if (role == Role::kPriest) {
    return Make(role, BestAlly(own, [](const AgentState& a) {
                  return a.stats.current_hp;
                }));
  }
  return Make(role, FirstAlive(enemy, kThreatOrder));
}

Action ScriptedPolicy(Role role, const TeamState& own, const TeamState& enemy,
                      MatchRng& rng) {
  const bool enemy_warrior_alive = enemy[Index(Role::kWarrior)].alive();
  switch (role) {
    case Role::kWarrior:
      if (enemy_warrior_alive) return Make(role, Role::kWarrior);
      return Make(role, RandomAlive(enemy, rng));
    case Role::kMage: {
      constexpr std::array<Role, 3> order = {Role::kWarrior, Role::kPriest,
                                             Role::kMage};
      return Make(role, FirstAlive(enemy, order));
    }
    case Role::kPriest: {
      const auto target = BestAlly(own, [](const AgentState& a) {
        return -(a.stats.max_hp - a.stats.current_hp);
      });
      if (!target) return {};
      const AgentState& t = own[Index(*target)];
      if (t.stats.current_hp >= t.stats.max_hp) return {};
      return Make(role, target);
    }
  }
  return {};
}

bool Eliminated(const TeamState& team) {
  return std::none_of(team.begin(), team.end(),
                      [](const AgentState& a) { return a.alive(); });
}

// True when some living warrior can still remove HP.
bool CanDealDamage(const TeamState& team, const TeamSetup& setup) {
  const AgentState& warrior = team[Index(Role::kWarrior)];
  return warrior.alive() && warrior.stats.attack_power > 0.0 &&
         setup[Index(Role::kWarrior)].policy != PolicyKind::kNoOp;
}

std::string FormatNumber(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace

std::string_view ToString(Role role) {
  switch (role) {
    case Role::kWarrior: return "Warrior";
    case Role::kMage: return "Mage";
    case Role::kPriest: return "Priest";
  }
  return "?";
}

std::string_view ToString(PolicyKind policy) {
  switch (policy) {
    case PolicyKind::kRandom: return "Random";
    case PolicyKind::kSmart: return "Smart";
    case PolicyKind::kNoOp: return "NoOp";
    case PolicyKind::kScriptedRL: return "ScriptedRL";
  }
  return "?";
}

PolicyKind ParsePolicy(std::string_view text) {
  const std::string lower = Lower(text);
  if (lower == "random") return PolicyKind::kRandom;
  if (lower == "smart") return PolicyKind::kSmart;
  if (lower == "noop" || lower == "no-op" || lower == "nothing") {
    return PolicyKind::kNoOp;
  }
  if (lower == "scriptedrl" || lower == "rl") return PolicyKind::kScriptedRL;
  throw std::invalid_argument("unknown policy: " + std::string(text));
}

Role ParseRole(std::string_view text) {
  const std::string lower = Lower(text);
  if (lower == "warrior") return Role::kWarrior;
  if (lower == "mage") return Role::kMage;
  if (lower == "priest") return Role::kPriest;
  throw std::invalid_argument("unknown role: " + std::string(text));
}

void ValidateStats(const AgentStats& s) {
  auto check = [](double value, double lo, double hi, const char* name) {
    if (!(value >= lo && value <= hi)) {
      throw std::invalid_argument(std::string(name) + " out of range: " +
                                  FormatNumber(value));
    }
  };
  check(s.max_hp, 0.0, 100.0, "max_hp");
  check(s.attack_power, 0.0, 20.0, "attack_power");
  check(s.healing_power, 0.0, 100.0, "healing_power");
  check(s.control_chance, 0.0, 0.5, "control_chance");
  check(s.current_hp, 0.0, s.max_hp, "current_hp");
}

TeamSetup DefaultTeam(PolicyKind policy) {
  TeamSetup team;
  for (auto& agent : team) agent.policy = policy;
  return team;
}

double WarriorAttack(double target_hp, double attack_power) {
  return std::max(0.0, target_hp - attack_power);
}

double MageControlProbability(double control_chance, double attack_power) {
  return control_chance * (1.0 + attack_power / 20.0);
}

double PriestHeal(double target_hp, double healing_power,
                  double target_max_hp) {
  return std::min(target_hp + healing_power, target_max_hp);
}

double Score(int result, int rounds) {
  if (result < -1 || result > 1 || rounds < 1) {
    throw std::domain_error("score needs r in {-1,0,1} and T >= 1");
  }
  return 100.0 * (static_cast<double>(result) / rounds + 1.0);
}

double MeanScore(std::span<const SimulationOutcome> outcomes) {
  if (outcomes.empty()) throw std::domain_error("no outcomes to average");
  double total = 0.0;
  for (const auto& o : outcomes) total += o.score;
  return total / static_cast<double>(outcomes.size());
}

TeamState InitialState(const TeamSetup& team) {
  TeamState state;
  for (int i = 0; i < 3; ++i) {
    state[i].stats = team[i].stats;
    state[i].stats.current_hp = team[i].stats.max_hp;
  }
  return state;
}

Action SelectAction(PolicyKind policy, Role role, const TeamState& own,
                    const TeamState& enemy, MatchRng& rng) {
  switch (policy) {
    case PolicyKind::kRandom: return RandomPolicy(role, own, enemy, rng);
    case PolicyKind::kSmart: return SmartPolicy(role, own, enemy);
    case PolicyKind::kNoOp: return {};
    case PolicyKind::kScriptedRL: return ScriptedPolicy(role, own, enemy, rng);
  }
  return {};
}

SimulationOutcome RunMatch(const MatchConfig& config, const MatchHooks& hooks) {
  if (config.t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  std::array<TeamState, 2> teams = {InitialState(config.team_a),
                                    InitialState(config.team_b)};
  const std::array<const TeamSetup*, 2> setups = {&config.team_a,
                                                  &config.team_b};
  MatchRng rng(config.seed);
  const int first = rng.UniformIndex(2);

  auto finished = [&](int round) -> std::optional<SimulationOutcome> {
    if (Eliminated(teams[0])) return SimulationOutcome{-1, round, Score(-1, round)};
    if (Eliminated(teams[1])) return SimulationOutcome{1, round, Score(1, round)};
    return std::nullopt;
  };
  if (auto outcome = finished(1)) return *outcome;

  const bool recording = hooks.events != nullptr || hooks.observer;
  for (int round = 1; round <= config.t_max; ++round) {
    // Nobody can lose HP any more: the match can only run out the clock.
    if (!recording && !CanDealDamage(teams[0], config.team_a) &&
        !CanDealDamage(teams[1], config.team_b)) {
      return {0, config.t_max, Score(0, config.t_max)};
    }
    for (int turn = 0; turn < 2; ++turn) {
      const int side = turn == 0 ? first : 1 - first;
      TeamState& own = teams[side];
      TeamState& enemy = teams[1 - side];
      for (Role role : kRoles) {
        AgentState& agent = own[Index(role)];
        if (!agent.alive()) continue;
        if (agent.asleep) {
          agent.asleep = false;
          if (hooks.events) {
            hooks.events->push_back({round, side == 0 ? 'A' : 'B', role,
                                     "asleep", std::nullopt, 0.0});
          }
          if (hooks.observer) hooks.observer(teams[0], teams[1]);
          continue;
        }
        const Action action = SelectAction((*setups[side])[Index(role)].policy,
                                           role, own, enemy, rng);
        double value = 0.0;
        switch (action.type) {
          case ActionType::kNone:
            break;
          case ActionType::kAttack: {
            AgentStats& target = enemy[Index(action.target)].stats;
            target.current_hp =
                WarriorAttack(target.current_hp, agent.stats.attack_power);
            value = target.current_hp;
            break;
          }
          case ActionType::kControl: {
            AgentState& target = enemy[Index(action.target)];
            const double p = MageControlProbability(agent.stats.control_chance,
                                                    agent.stats.attack_power);
            const bool landed = rng.UniformUnit() < p;
            if (landed && target.alive()) target.asleep = true;
            value = landed ? 1.0 : 0.0;
            break;
          }
          case ActionType::kHeal: {
            AgentStats& target = own[Index(action.target)].stats;
            target.current_hp = PriestHeal(
                target.current_hp, agent.stats.healing_power, target.max_hp);
            value = target.current_hp;
            break;
          }
        }
        if (hooks.events) {
          static constexpr std::array<const char*, 4> kNames = {
              "none", "attack", "control", "heal"};
          hooks.events->push_back(
              {round, side == 0 ? 'A' : 'B', role,
               kNames[static_cast<int>(action.type)],
               action.type == ActionType::kNone
                   ? std::nullopt
                   : std::optional<Role>(action.target),
               value});
        }
        if (hooks.observer) hooks.observer(teams[0], teams[1]);
        if (auto outcome = finished(round)) return *outcome;
      }
    }
  }
  return {0, config.t_max, Score(0, config.t_max)};
}

std::string FormatEventsCsv(const std::vector<MatchEvent>& events) {
  std::string out = "round,team,role,action,target,value\n";
  for (const auto& e : events) {
    out += std::to_string(e.round);
    out += ',';
    out += e.team;
    out += ',';
    out += ToString(e.role);
    out += ',';
    out += e.action;
    out += ',';
    if (e.target) out += ToString(*e.target);
    out += ',';
    out += FormatNumber(e.value);
    out += '\n';
  }
  return out;
}

}  // namespace myerson::arena
