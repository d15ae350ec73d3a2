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

#include <cstdint>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "myerson/arena.h"
#include "myerson/arena_game.h"
#include "myerson/graph.h"
#include "myerson/rollout.h"
#include "myerson/shapley.h"

namespace myerson {
namespace {

std::vector<double> RandomTable(int n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> table(std::size_t{1} << n);
  for (std::size_t k = 1; k < table.size(); ++k) table[k] = dist(rng);
  return table;
}

void BM_ExactShapley(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = RandomTable(n);
  const GameSpec game = GameSpec::Anonymous(n);
  auto v = [&](Coalition k) { return table[k.bits()]; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExactShapley(game, v));
  }
  state.SetItemsProcessed(state.iterations() * table.size());
}
BENCHMARK(BM_ExactShapley)->DenseRange(10, 18, 4);

void BM_ExactMyersonArenaHkg(benchmark::State& state) {
  const auto& hkg = arena::ArenaHkg();
  const auto table = RandomTable(15);
  auto v = [&](Coalition k) { return table[k.bits()]; };
  const GameSpec game = hkg.game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExactMyerson(game, hkg.graph, v));
  }
}
BENCHMARK(BM_ExactMyersonArenaHkg);

void BM_ComponentIndex(benchmark::State& state) {
  const auto& graph = arena::ArenaHkg().graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComponentIndex(graph));
  }
}
BENCHMARK(BM_ComponentIndex);

void BM_Components(benchmark::State& state) {
  const auto& graph = arena::ArenaHkg().graph;
  std::uint32_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Components(graph, Coalition(k)));
    k = (k + 12345) & 0x7fff;
  }
}
BENCHMARK(BM_Components);

void BM_RunMatch(benchmark::State& state) {
  arena::MatchConfig config;
  config.team_a = arena::DefaultTeam(arena::kPolicies[state.range(0)]);
  config.team_b = arena::DefaultTeam(arena::kPolicies[state.range(1)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arena::RunMatch(config));
    ++config.seed;
  }
}
BENCHMARK(BM_RunMatch)->Args({0, 0})->Args({1, 1})->Args({3, 1});

void BM_Rollout(benchmark::State& state) {
  const arena::ArenaBinding binding(arena::DefaultTeam(arena::PolicyKind::kRandom));
  const RolloutGame game = binding.Game(arena::PolicyKind::kRandom);
  const RolloutOptions options{.simulations = 1, .threads = 1};
  const bool myerson = state.range(0) == 1;
  for (auto _ : state) {
    if (myerson) {
      benchmark::DoNotOptimize(
          RolloutMyerson(game, arena::ArenaHkg().graph, options));
    } else {
      benchmark::DoNotOptimize(RolloutShapley(game, options));
    }
  }
  state.SetLabel(myerson ? "myerson" : "shapley");
}
BENCHMARK(BM_Rollout)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace myerson

BENCHMARK_MAIN();
