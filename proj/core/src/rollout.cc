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

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "myerson/parallel.h"
#include "myerson/seeding.h"
#include "myerson/shapley.h"

namespace myerson {

namespace {

using Clock = std::chrono::steady_clock;

void CheckShapes(const RolloutGame& problem) {
  const auto n = static_cast<std::size_t>(problem.game.num_players());
  if (problem.baselines.size() != n || problem.real_values.size() != n) {
    throw std::invalid_argument(
        "baselines and real values must have one entry per player");
  }
  if (!problem.simulator) {
    throw std::invalid_argument("rollout needs a simulator");
  }
}

void CheckOptions(const RolloutOptions& options) {
  if (options.simulations < 1) {
    throw std::invalid_argument("rollout needs at least one simulation");
  }
}

double Simulate(const RolloutGame& problem, const RolloutOptions& options,
                int simulation, Coalition key) {
  const FullAssignment assignment =
      ApplyReplacement(problem.baselines, key, problem.real_values);
  try {
    return problem.simulator(assignment,
                             RolloutSeed(options.master_seed, simulation, key));
  } catch (const std::exception& e) {
    throw RolloutError(simulation, key, e.what());
  }
}

void RequireNullBaseline(double value, int simulation) {
  if (value != 0.0) {
    throw ContractViolation("simulator scored the all-baseline assignment " +
                            std::to_string(value) + " in simulation " +
                            std::to_string(simulation) + " (must be 0)");
  }
}

std::string FormatDouble(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void WriteTraceLine(std::ostream& out, int simulation, Coalition key,
                    std::uint64_t seed, double score) {
  out << simulation << ' ' << key.Hex() << ' ' << seed << ' '
      << FormatDouble(score) << '\n';
}

}  // namespace

FullAssignment ApplyReplacement(const FullAssignment& baselines,
                                Coalition coalition,
                                const FullAssignment& real_values) {
  if (baselines.size() != real_values.size()) {
    throw std::invalid_argument("baseline and real assignment lengths differ");
  }
  FullAssignment out;
  out.reserve(real_values.size());
  for (std::size_t i = 0; i < real_values.size(); ++i) {
    out.push_back(coalition.Contains(static_cast<PlayerId>(i)) ? real_values[i]
                                                              : baselines[i]);
  }
  return out;
}

std::uint64_t RolloutSeed(std::uint64_t master_seed, int simulation,
                          Coalition key) {
  return CombineSeeds(
      CombineSeeds(master_seed, static_cast<std::uint64_t>(simulation)),
      key.bits());
}

RolloutError::RolloutError(int simulation, Coalition coalition,
                           const std::string& what)
    : std::runtime_error("simulator failed in simulation " +
                         std::to_string(simulation) + " on coalition " +
                         coalition.Hex() + ": " + what),
      simulation_(simulation),
      coalition_(coalition) {}

void CheckBaselineNullity(const RolloutGame& problem,
                          std::uint64_t probe_seed) {
  CheckShapes(problem);
  const double score = problem.simulator(problem.baselines, probe_seed);
  if (score != 0.0) {
    throw ContractViolation(
        "simulator must score the all-baseline assignment as 0, got " +
        FormatDouble(score));
  }
}

std::vector<double> SampleMatrix::column(PlayerId player) const {
  std::vector<double> out(simulations_);
  for (int s = 0; s < simulations_; ++s) out[s] = at(s, player);
  return out;
}

std::vector<double> SampleMatrix::ColumnMeans() const {
  std::vector<double> means(players_, 0.0);
  if (simulations_ == 0) return means;
  for (int s = 0; s < simulations_; ++s) {
    for (int p = 0; p < players_; ++p) means[p] += at(s, p);
  }
  for (double& m : means) m /= simulations_;
  return means;
}

RolloutResult RolloutShapley(const RolloutGame& problem,
                             const RolloutOptions& options) {
  const auto start = Clock::now();
  CheckOptions(options);
  CheckBaselineNullity(problem);
  const int players = problem.game.num_players();
  const int simulations = options.simulations;
  const std::size_t size = std::size_t{1} << players;

  std::vector<double> tables(size * simulations, 0.0);
  ParallelFor(tables.size(), options.threads, 512,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t idx = begin; idx < end; ++idx) {
                  const int s = static_cast<int>(idx / size);
                  const Coalition k(static_cast<std::uint32_t>(idx % size));
                  tables[idx] = Simulate(problem, options, s, k);
                }
              });

  RolloutResult result;
  result.samples = SampleMatrix(simulations, players);
  result.full_scores.resize(simulations);
  const ShapleyAccumulator accumulator(players);
  for (int s = 0; s < simulations; ++s) {
    RequireNullBaseline(tables[s * size], s);
  }
  ParallelFor(simulations, options.threads, 1,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t s = begin; s < end; ++s) {
                  std::span<const double> table(tables.data() + s * size, size);
                  accumulator.Compute(table, result.samples.row(int(s)));
                  result.full_scores[s] = table[size - 1];
                }
              });

  if (options.trace != nullptr) {
    for (int s = 0; s < simulations; ++s) {
      for (std::size_t bits = 0; bits < size; ++bits) {
        const Coalition k(static_cast<std::uint32_t>(bits));
        WriteTraceLine(*options.trace, s, k,
                       RolloutSeed(options.master_seed, s, k),
                       tables[s * size + bits]);
      }
    }
  }

  result.counter.distinct_evaluations_per_simulation =
      static_cast<std::int64_t>(size);
  result.counter.total_simulator_calls =
      static_cast<std::int64_t>(size) * simulations;
  result.counter.wall_time = Clock::now() - start;
  return result;
}

RolloutResult RolloutMyerson(const RolloutGame& problem,
                             const InteractionGraph& graph,
                             const RolloutOptions& options) {
  const auto start = Clock::now();
  CheckOptions(options);
  CheckBaselineNullity(problem);
  const int players = problem.game.num_players();
  if (graph.num_players() != players) {
    throw std::invalid_argument("graph and game disagree on player count");
  }
  const int simulations = options.simulations;
  const std::size_t size = std::size_t{1} << players;
  const ComponentIndex index(graph);
  const auto& connected = index.connected();
  const std::size_t m = connected.size();

  std::vector<double> memo(m * simulations, 0.0);
  ParallelFor(memo.size(), options.threads, 64,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t idx = begin; idx < end; ++idx) {
                  const int s = static_cast<int>(idx / m);
                  memo[idx] = Simulate(problem, options, s, connected[idx % m]);
                }
              });

  RolloutResult result;
  result.samples = SampleMatrix(simulations, players);
  result.full_scores.resize(simulations);
  const ShapleyAccumulator accumulator(players);
  for (int s = 0; s < simulations; ++s) {
    RequireNullBaseline(memo[s * m], s);
  }
  ParallelFor(simulations, options.threads, 1,
              [&](std::size_t begin, std::size_t end) {
                std::vector<double> table(size);
                for (std::size_t s = begin; s < end; ++s) {
                  index.Synthesize(
                      std::span<const double>(memo.data() + s * m, m), table);
                  accumulator.Compute(table, result.samples.row(int(s)));
                  result.full_scores[s] = table[size - 1];
                }
              });

  if (options.trace != nullptr) {
    std::vector<std::size_t> by_bits(m);
    std::iota(by_bits.begin(), by_bits.end(), std::size_t{0});
    std::sort(by_bits.begin(), by_bits.end(), [&](std::size_t a, std::size_t b) {
      return connected[a] < connected[b];
    });
    for (int s = 0; s < simulations; ++s) {
      for (std::size_t j : by_bits) {
        WriteTraceLine(*options.trace, s, connected[j],
                       RolloutSeed(options.master_seed, s, connected[j]),
                       memo[s * m + j]);
      }
    }
  }

  result.counter.distinct_evaluations_per_simulation =
      static_cast<std::int64_t>(m);
  result.counter.total_simulator_calls =
      static_cast<std::int64_t>(m) * simulations;
  result.counter.wall_time = Clock::now() - start;
  return result;
}

}  // namespace myerson
