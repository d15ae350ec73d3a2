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

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "myerson/arena_game.h"
#include "support/hkg_oracle.h"

namespace myerson {
namespace {

using AC = AttributeClass;
using ::myerson::testing::ExpectedHkgEdge;
using ::myerson::testing::RandomRoster;

AgentFeatureSpec Agent(int id, std::vector<Feature> features) {
  return {id, "", std::move(features)};
}

TEST(HkgTest, ArenaShape) {
  const auto& hkg = arena::ArenaHkg();
  EXPECT_EQ(hkg.graph.num_players(), 15);
  EXPECT_EQ(hkg.graph.num_edges(), 24);
  EXPECT_TRUE(hkg.warnings.empty());
  EXPECT_TRUE(IsConnected(hkg.graph, Coalition::Full(15)));
  const auto game = hkg.game();
  EXPECT_EQ(game.label(0), "Warrior.MaxHealthPoints");
  EXPECT_EQ(game.label(1), "Warrior.Policy");
  EXPECT_NO_THROW(game.IndexOf("Priest.HealingPower"));
  EXPECT_THROW(game.IndexOf("Warrior.CurrentHealthPoints"), std::out_of_range);
}

TEST(HkgTest, SingleAgentNecessaryAndPolicy) {
  const auto hkg =
      BuildHkg({Agent(0, {{"hp", AC::kNecessary}, {"pi", AC::kPolicy}})});
  EXPECT_EQ(hkg.graph.num_players(), 2);
  EXPECT_EQ(hkg.graph.num_edges(), 1);
  ASSERT_EQ(hkg.edges.size(), 1u);
  EXPECT_EQ(hkg.edges[0].rule, HkgRule::kNecessaryPolicy);
}

TEST(HkgTest, TwoAgentsWithPassives) {
  const std::vector<Feature> features = {
      {"hp", AC::kNecessary}, {"pi", AC::kPolicy}, {"armor", AC::kPassive}};
  const auto hkg = BuildHkg({Agent(0, features), Agent(1, features)});
  EXPECT_EQ(hkg.graph.num_players(), 6);
  EXPECT_EQ(hkg.graph.num_edges(), 5);
  std::multiset<HkgRule> rules;
  for (const auto& e : hkg.edges) rules.insert(e.rule);
  EXPECT_EQ(rules.count(HkgRule::kNecessaryPolicy), 2u);
  EXPECT_EQ(rules.count(HkgRule::kPassiveNecessary), 2u);
  EXPECT_EQ(rules.count(HkgRule::kNecessaryClique), 1u);
  EXPECT_EQ(rules.count(HkgRule::kPassiveClique), 0u);
}

TEST(HkgTest, RuleCompletenessOnRandomRosters) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto roster = RandomRoster(rng);
    const auto hkg = BuildHkg(roster);
    const int n = hkg.graph.num_players();
    int expected_edges = 0;
    for (int a = 0; a < n; ++a) {
      EXPECT_NE(hkg.players[a].cls, AC::kDynamic);
      for (int b = a + 1; b < n; ++b) {
        const bool expected = ExpectedHkgEdge(hkg.players[a], hkg.players[b]);
        expected_edges += expected;
        EXPECT_EQ(hkg.graph.HasEdge(a, b), expected)
            << hkg.players[a].label() << " - " << hkg.players[b].label();
      }
    }
    EXPECT_EQ(hkg.graph.num_edges(), expected_edges);
    EXPECT_EQ(static_cast<int>(hkg.edges.size()), expected_edges);
  }
}

TEST(HkgTest, RemovingNecessaryIsolatesTheAgentsSubtree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto hkg = BuildHkg(RandomRoster(rng));
    for (const auto& agent : hkg.players) {
      const Coalition necessary = hkg.PlayersOf(agent.agent_id, AC::kNecessary);
      if (necessary.empty()) continue;
      const Coalition own = hkg.PlayersOf(agent.agent_id);
      for (Coalition part : DecomposabilityProbe(hkg, agent.agent_id)) {
        // No component mixes the agent's remaining features with anyone
        // else's.
        const bool inside = part.IsSubsetOf(own);
        const bool outside = part.Intersection(own).empty();
        EXPECT_TRUE(inside || outside);
      }
    }
  }
}

TEST(HkgTest, ArenaDecompositions) {
  const auto& hkg = arena::ArenaHkg();
  const auto parts = DecomposabilityProbe(hkg, 0);
  ASSERT_EQ(parts.size(), 2u);
  std::multiset<int> sizes = {parts[0].size(), parts[1].size()};
  EXPECT_EQ(sizes, (std::multiset<int>{4, 10}));

  Coalition all_hp;
  for (int agent = 0; agent < 3; ++agent) {
    all_hp = all_hp.Union(hkg.PlayersOf(agent, AC::kNecessary));
  }
  const auto split =
      Components(hkg.graph, Coalition::Full(15).Minus(all_hp));
  ASSERT_EQ(split.size(), 3u);
  for (Coalition part : split) EXPECT_EQ(part.size(), 4);
}

TEST(HkgTest, DynamicFeaturesAreExcluded) {
  const auto hkg = BuildHkg({Agent(
      0, {{"hp", AC::kNecessary}, {"pi", AC::kPolicy}, {"now", AC::kDynamic}})});
  EXPECT_EQ(hkg.graph.num_players(), 2);
}

TEST(HkgTest, ValidationErrors) {
  EXPECT_THROW(BuildHkg({}), HkgValidationError);
  EXPECT_THROW(BuildHkg({Agent(0, {})}), HkgValidationError);
  EXPECT_THROW(BuildHkg({Agent(0, {{"hp", AC::kNecessary}})}),
               HkgValidationError);
  EXPECT_THROW(BuildHkg({Agent(0, {{"a", AC::kPolicy}, {"b", AC::kPolicy}})}),
               HkgValidationError);
  EXPECT_THROW(BuildHkg({Agent(0, {{"a", AC::kPolicy}, {"a", AC::kActive}})}),
               HkgValidationError);
  EXPECT_THROW(BuildHkg({Agent(0, {{"a", AC::kPolicy}}),
                         Agent(0, {{"a", AC::kPolicy}})}),
               HkgValidationError);
  std::vector<Feature> many = {{"pi", AC::kPolicy}};
  for (int i = 0; i < kMaxPlayers; ++i) {
    many.push_back({"x" + std::to_string(i), AC::kActive});
  }
  EXPECT_THROW(BuildHkg({Agent(0, many)}), HkgValidationError);
}

TEST(HkgTest, MissingNecessaryWarns) {
  const auto hkg =
      BuildHkg({Agent(0, {{"pi", AC::kPolicy}, {"atk", AC::kActive}})});
  EXPECT_EQ(hkg.warnings.size(), 1u);
  EXPECT_THROW(DecomposabilityProbe(hkg, 0), std::invalid_argument);
}

TEST(HkgTest, ParsesRosterJson) {
  const auto roster = ParseRosterJson(R"({"agents": [
      {"id": 4, "name": "Scout", "features": [
        {"label": "hp", "class": "Necessary"},
        {"label": "pi", "class": "policy"},
        {"label": "speed", "class": "ACTIVE"}]}]})");
  ASSERT_EQ(roster.size(), 1u);
  EXPECT_EQ(roster[0].agent_id, 4);
  const auto hkg = BuildHkg(roster);
  EXPECT_EQ(hkg.players[0].label(), "Scout.hp");
  EXPECT_EQ(hkg.graph.num_edges(), 2);
  EXPECT_NE(FormatPlayerTableJson(hkg).find("\"Scout.speed\""),
            std::string::npos);

  EXPECT_THROW(ParseRosterJson("[]"), HkgValidationError);
  EXPECT_THROW(ParseRosterJson("{"), HkgValidationError);
  EXPECT_THROW(ParseRosterJson(R"({"agents": [{"features": []}]})"),
               HkgValidationError);
  EXPECT_THROW(ParseAttributeClass("static"), std::invalid_argument);
}

}  // namespace
}  // namespace myerson
