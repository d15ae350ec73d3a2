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

#ifndef MYERSON_ROLLOUT_H_
#define MYERSON_ROLLOUT_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "myerson/coalition.h"
#include "myerson/graph.h"

namespace myerson {

// A concrete value for one player: attributes are numbers, policies are
// named (e.g. "Smart", "NoOp").
using FeatureValue = std::variant<double, std::string>;

// One value per player; simulatable as-is.
using FullAssignment = std::vector<FeatureValue>;

// f: (assignment, rollout seed) -> score. Must be deterministic in both
// arguments and return 0 for the all-baseline assignment.
using SimulatorBinding =
    std::function<double(const FullAssignment&, std::uint64_t)>;

// Players in the coalition keep their real value, the others take their
// baseline.
FullAssignment ApplyReplacement(const FullAssignment& baselines,
                                Coalition coalition,
                                const FullAssignment& real_values);

// Seed for simulation index n of the coalition (or component) `key`. Both
// rollout methods use it, so equal coalitions are simulated identically.
std::uint64_t RolloutSeed(std::uint64_t master_seed, int simulation,
                          Coalition key);

inline constexpr std::uint64_t kBaselineProbeSeed = 0x5eed0fba5e11e5ull;

class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the simulator throws during a rollout.
class RolloutError : public std::runtime_error {
 public:
  RolloutError(int simulation, Coalition coalition, const std::string& what);
  int simulation() const { return simulation_; }
  Coalition coalition() const { return coalition_; }

 private:
  int simulation_;
  Coalition coalition_;
};

struct RolloutGame {
  GameSpec game;
  FullAssignment baselines;
  FullAssignment real_values;
  SimulatorBinding simulator;
};

// Checks f(baselines) == 0 with a fixed probe seed; throws ContractViolation
// otherwise. Also validates assignment lengths.
void CheckBaselineNullity(const RolloutGame& problem,
                          std::uint64_t probe_seed = kBaselineProbeSeed);

// N x |C| matrix of per-simulation attributions, row-major.
class SampleMatrix {
 public:
  SampleMatrix() = default;
  SampleMatrix(int simulations, int players)
      : simulations_(simulations),
        players_(players),
        values_(static_cast<std::size_t>(simulations) * players, 0.0) {}

  int simulations() const { return simulations_; }
  int players() const { return players_; }
  double at(int simulation, PlayerId player) const {
    return values_[Index(simulation, player)];
  }
  std::span<double> row(int simulation) {
    return std::span<double>(values_).subspan(Index(simulation, 0), players_);
  }
  std::span<const double> row(int simulation) const {
    return std::span<const double>(values_).subspan(Index(simulation, 0),
                                                    players_);
  }
  std::vector<double> column(PlayerId player) const;
  std::vector<double> ColumnMeans() const;

  friend bool operator==(const SampleMatrix&, const SampleMatrix&) = default;

 private:
  std::size_t Index(int simulation, PlayerId player) const {
    return static_cast<std::size_t>(simulation) * players_ + player;
  }
  int simulations_ = 0;
  int players_ = 0;
  std::vector<double> values_;
};

struct EvalCounter {
  // Distinct coalition keys sent through f∘ζ for one simulation index, the
  // empty coalition included.
  std::int64_t distinct_evaluations_per_simulation = 0;
  std::int64_t total_simulator_calls = 0;
  std::chrono::duration<double> wall_time{0};
};

struct RolloutOptions {
  int simulations = 72;
  std::uint64_t master_seed = 0;
  int threads = 1;  // < 1 means all cores
  // When set, receives one line per simulator call: n, coalition (hex),
  // seed, score. Lines are written in (n, coalition) order.
  std::ostream* trace = nullptr;
};

struct RolloutResult {
  SampleMatrix samples;
  // Score of the grand coalition in each simulation; row n of `samples`
  // sums to full_scores[n].
  std::vector<double> full_scores;
  EvalCounter counter;
};

// Shapley rollout: every coalition is simulated once per simulation index.
RolloutResult RolloutShapley(const RolloutGame& problem,
                             const RolloutOptions& options);

// Myerson rollout: only connected components are simulated; other
// coalitions are summed from their components.
RolloutResult RolloutMyerson(const RolloutGame& problem,
                             const InteractionGraph& graph,
                             const RolloutOptions& options);

}  // namespace myerson

#endif  // MYERSON_ROLLOUT_H_
