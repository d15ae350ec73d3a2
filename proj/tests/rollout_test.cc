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

#include "myerson/rollout.h"

#include <cmath>
#include <numeric>
#include <sstream>

#include "gtest/gtest.h"
#include "myerson/arena_game.h"
#include "myerson/graph.h"
#include "myerson/seeding.h"
#include "support/oracles.h"

namespace myerson {
namespace {

double Numeric(const FeatureValue& value) { return std::get<double>(value); }

// Seed-dependent, non-additive simulator over numeric features that scores
// the all-zero assignment as exactly 0.
double NoisySimulator(const FullAssignment& assignment, std::uint64_t seed) {
  double linear = 0;
  double pairs = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    linear += (1.0 + 0.5 * i) * Numeric(assignment[i]);
    if (i + 1 < assignment.size()) {
      pairs += Numeric(assignment[i]) * Numeric(assignment[i + 1]);
    }
  }
  if (linear == 0 && pairs == 0) return 0.0;
  const double noise = static_cast<double>(MixSeed(seed) >> 11) * 0x1.0p-53;
  return linear + 3.0 * pairs + noise;
}

RolloutGame NumericGame(int n) {
  RolloutGame game{GameSpec::Anonymous(n), {}, {}, NoisySimulator};
  for (int i = 0; i < n; ++i) {
    game.baselines.emplace_back(0.0);
    game.real_values.emplace_back(1.0 + 0.25 * i);
  }
  return game;
}

TEST(ApplyReplacementTest, IdentityAndBaseline) {
  const FullAssignment baselines = {0.0, std::string("NoOp"), 0.0};
  const FullAssignment real = {7.0, std::string("Smart"), 3.0};
  EXPECT_EQ(ApplyReplacement(baselines, Coalition::Full(3), real), real);
  EXPECT_EQ(ApplyReplacement(baselines, Coalition(), real), baselines);
  EXPECT_EQ(ApplyReplacement(baselines, Coalition(0b010), real),
            (FullAssignment{0.0, std::string("Smart"), 0.0}));
}

TEST(ApplyReplacementTest, ArenaPolicyRemovalFallsBackToNoOp) {
  const auto& hkg = arena::ArenaHkg();
  const arena::ArenaBinding binding(arena::DefaultTeam(arena::PolicyKind::kRandom));
  const FullAssignment real = binding.RealValues(arena::PolicyKind::kSmart);
  const PlayerId policy = hkg.IndexOf(0, arena::kPolicy);
  const auto assignment = ApplyReplacement(
      binding.Baselines(), hkg.game().grand_coalition().Without(policy), real);
  const auto team = binding.TeamA(assignment);
  EXPECT_EQ(team[0].policy, arena::PolicyKind::kNoOp);
  EXPECT_EQ(team[1].policy, arena::PolicyKind::kSmart);
  EXPECT_EQ(team[2].policy, arena::PolicyKind::kSmart);
  for (const auto& agent : team) {
    EXPECT_EQ(agent.stats.max_hp, 100.0);
    EXPECT_EQ(agent.stats.attack_power, 10.0);
    EXPECT_EQ(agent.stats.healing_power, 5.0);
    EXPECT_EQ(agent.stats.control_chance, 0.5);
  }
}

TEST(RolloutSeedTest, DependsOnAllInputs) {
  const auto base = RolloutSeed(1, 2, Coalition(3));
  EXPECT_EQ(base, RolloutSeed(1, 2, Coalition(3)));
  EXPECT_NE(base, RolloutSeed(2, 2, Coalition(3)));
  EXPECT_NE(base, RolloutSeed(1, 3, Coalition(3)));
  EXPECT_NE(base, RolloutSeed(1, 2, Coalition(4)));
}

TEST(RolloutShapleyTest, DeterministicSimulatorGivesIdenticalRows) {
  RolloutGame game = NumericGame(4);
  game.simulator = [](const FullAssignment& a, std::uint64_t) {
    return NoisySimulator(a, 0);
  };
  const auto result = RolloutShapley(game, {.simulations = 2});
  for (int p = 0; p < 4; ++p) {
    EXPECT_EQ(result.samples.at(0, p), result.samples.at(1, p));
  }
}

TEST(RolloutShapleyTest, SinglePlayerTakesTheWholeScore) {
  RolloutGame game = NumericGame(1);
  const auto result = RolloutShapley(game, {.simulations = 5, .master_seed = 9});
  for (int s = 0; s < 5; ++s) {
    EXPECT_EQ(result.samples.at(s, 0), result.full_scores[s]);
    EXPECT_EQ(result.full_scores[s],
              NoisySimulator(game.real_values, RolloutSeed(9, s, Coalition(1))));
  }
}

TEST(RolloutShapleyTest, CountsEveryCoalitionOfFifteenPlayers) {
  RolloutGame game = NumericGame(15);
  const auto result = RolloutShapley(game, {.simulations = 1, .threads = 0});
  EXPECT_EQ(result.counter.distinct_evaluations_per_simulation, 32768);
  EXPECT_EQ(result.counter.total_simulator_calls, 32768);
}

TEST(RolloutShapleyTest, RowSumsMatchTheGrandCoalition) {
  const RolloutGame game = NumericGame(8);
  const auto result =
      RolloutShapley(game, {.simulations = 16, .master_seed = 4});
  for (int s = 0; s < 16; ++s) {
    const auto row = result.samples.row(s);
    const double sum = std::accumulate(row.begin(), row.end(), 0.0);
    EXPECT_NEAR(sum, result.full_scores[s],
                1e-9 * std::max(1.0, std::abs(result.full_scores[s])));
  }
}

TEST(RolloutShapleyTest, MatchesExactShapleyOfEachSimulation) {
  const RolloutGame game = NumericGame(5);
  const auto result = RolloutShapley(game, {.simulations = 3, .master_seed = 1});
  for (int s = 0; s < 3; ++s) {
    std::vector<double> table(32);
    for (std::uint32_t k = 0; k < 32; ++k) {
      table[k] = NoisySimulator(
          ApplyReplacement(game.baselines, Coalition(k), game.real_values),
          RolloutSeed(1, s, Coalition(k)));
    }
    const auto expected = testing::PermutationShapley(5, table);
    for (int p = 0; p < 5; ++p) {
      EXPECT_NEAR(result.samples.at(s, p), expected[p], 1e-9);
    }
  }
}

TEST(RolloutShapleyTest, BitIdenticalAcrossThreadCounts) {
  const RolloutGame game = NumericGame(10);
  const auto one = RolloutShapley(game, {.simulations = 6, .threads = 1});
  const auto three = RolloutShapley(game, {.simulations = 6, .threads = 3});
  EXPECT_EQ(one.samples, three.samples);
  EXPECT_EQ(one.full_scores, three.full_scores);
}

TEST(RolloutShapleyTest, RejectsNonNullBaseline) {
  RolloutGame game = NumericGame(3);
  game.simulator = [](const FullAssignment& a, std::uint64_t seed) {
    return NoisySimulator(a, seed) + 1.0;
  };
  EXPECT_THROW(RolloutShapley(game, {.simulations = 1}), ContractViolation);
  EXPECT_THROW(CheckBaselineNullity(game), ContractViolation);
}

TEST(RolloutShapleyTest, RejectsSeedDependentBaselineFailure) {
  // Passes the probe but breaks nullity inside a simulation.
  RolloutGame game = NumericGame(3);
  game.simulator = [](const FullAssignment& a, std::uint64_t seed) {
    if (seed != kBaselineProbeSeed && NoisySimulator(a, seed) == 0.0) {
      return 0.5;
    }
    return NoisySimulator(a, seed);
  };
  EXPECT_THROW(RolloutShapley(game, {.simulations = 1}), ContractViolation);
  EXPECT_THROW(RolloutMyerson(game, InteractionGraph::Complete(3),
                              {.simulations = 1}),
               ContractViolation);
}

TEST(RolloutShapleyTest, SimulatorFailureCarriesContext) {
  RolloutGame game = NumericGame(3);
  game.simulator = [](const FullAssignment& a, std::uint64_t seed) {
    if (Numeric(a[1]) != 0 && Numeric(a[2]) != 0) {
      throw std::runtime_error("bad");
    }
    return NoisySimulator(a, seed);
  };
  try {
    RolloutShapley(game, {.simulations = 2});
    FAIL() << "expected RolloutError";
  } catch (const RolloutError& e) {
    EXPECT_TRUE(e.coalition().Contains(1) && e.coalition().Contains(2));
  }
}

TEST(RolloutShapleyTest, RejectsBadShapes) {
  RolloutGame game = NumericGame(3);
  game.real_values.pop_back();
  EXPECT_THROW(RolloutShapley(game, {.simulations = 1}), std::invalid_argument);
  EXPECT_THROW(RolloutShapley(NumericGame(3), {.simulations = 0}),
               std::invalid_argument);
}

TEST(RolloutShapleyTest, TraceListsEveryCall) {
  const RolloutGame game = NumericGame(2);
  std::ostringstream trace;
  RolloutShapley(game, {.simulations = 2, .master_seed = 3, .trace = &trace});
  std::istringstream lines(trace.str());
  std::string line;
  std::vector<std::string> keys;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    int s;
    std::string hex;
    std::uint64_t seed;
    double score;
    ASSERT_TRUE(fields >> s >> hex >> seed >> score) << line;
    keys.push_back(std::to_string(s) + hex);
    EXPECT_EQ(seed, RolloutSeed(3, s, Coalition(std::stoul(hex, nullptr, 16))));
  }
  EXPECT_EQ(keys, (std::vector<std::string>{"00x0", "00x1", "00x2", "00x3",
                                            "10x0", "10x1", "10x2", "10x3"}));
}

TEST(RolloutMyersonTest, CompleteGraphMatchesShapleyExactly) {
  const RolloutGame game = NumericGame(7);
  const RolloutOptions options{.simulations = 5, .master_seed = 12};
  const auto shapley = RolloutShapley(game, options);
  const auto myerson =
      RolloutMyerson(game, InteractionGraph::Complete(7), options);
  EXPECT_EQ(shapley.samples, myerson.samples);
  EXPECT_EQ(shapley.full_scores, myerson.full_scores);
  EXPECT_EQ(myerson.counter.distinct_evaluations_per_simulation, 128);
}

TEST(RolloutMyersonTest, MatchesExactMyersonOfEachSimulation) {
  const RolloutGame game = NumericGame(6);
  const auto graph = testing::RandomGraph(6, 0.4, 17);
  const auto result =
      RolloutMyerson(game, graph, {.simulations = 3, .master_seed = 5});
  for (int s = 0; s < 3; ++s) {
    std::vector<double> table(64);
    for (std::uint32_t k = 0; k < 64; ++k) {
      table[k] = NoisySimulator(
          ApplyReplacement(game.baselines, Coalition(k), game.real_values),
          RolloutSeed(5, s, Coalition(k)));
    }
    const auto expected = testing::PermutationShapley(
        6, testing::GraphRestrictedTable(graph, table));
    for (int p = 0; p < 6; ++p) {
      EXPECT_NEAR(result.samples.at(s, p), expected[p], 1e-9);
    }
  }
}

TEST(RolloutMyersonTest, BitIdenticalAcrossThreadCounts) {
  const RolloutGame game = NumericGame(12);
  const auto graph = testing::RandomGraph(12, 0.3, 2);
  const auto one = RolloutMyerson(game, graph, {.simulations = 4, .threads = 1});
  const auto four =
      RolloutMyerson(game, graph, {.simulations = 4, .threads = 4});
  EXPECT_EQ(one.samples, four.samples);
}

TEST(RolloutMyersonTest, ArenaHkgCallCount) {
  const arena::ArenaBinding binding(arena::DefaultTeam(arena::PolicyKind::kNoOp));
  const auto game = binding.Game(arena::PolicyKind::kNoOp);
  const auto result = RolloutMyerson(game, arena::ArenaHkg().graph,
                                     {.simulations = 1, .threads = 0});
  EXPECT_LE(result.counter.distinct_evaluations_per_simulation, 1100);
  EXPECT_EQ(result.counter.distinct_evaluations_per_simulation, 1045);
  const auto row = result.samples.row(0);
  EXPECT_NEAR(std::accumulate(row.begin(), row.end(), 0.0), 100.0, 1e-9);
}

TEST(RolloutMyersonTest, WarriorOnlyComponentScoresZero) {
  const auto& hkg = arena::ArenaHkg();
  const PlayerId warrior_hp = hkg.IndexOf(0, arena::kMaxHealthPoints);
  const Coalition k = hkg.game().grand_coalition().Without(warrior_hp);
  const auto parts = Components(hkg.graph, k);
  ASSERT_EQ(parts.size(), 2u);
  const Coalition warrior_rest = hkg.PlayersOf(0).Without(warrior_hp);
  const Coalition other =
      parts[0] == warrior_rest ? parts[1] : parts[0];
  EXPECT_TRUE(parts[0] == warrior_rest || parts[1] == warrior_rest);
  EXPECT_EQ(other.size(), 10);

  const arena::ArenaBinding binding(arena::DefaultTeam(arena::PolicyKind::kRandom));
  const auto game = binding.Game(arena::PolicyKind::kSmart);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(game.simulator(ApplyReplacement(game.baselines, warrior_rest,
                                              game.real_values),
                             seed),
              0.0);
  }
}

}  // namespace
}  // namespace myerson
