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

#ifndef MYERSON_STATS_H_
#define MYERSON_STATS_H_

#include <span>
#include <string_view>
#include <vector>

#include "myerson/graph.h"
#include "myerson/hkg.h"

namespace myerson {

enum class Stars { kNone = 0, kOne = 1, kTwo = 2, kThree = 3 };

// "***" for p < 0.001, "**" for p < 0.01, "*" for p < 0.05.
Stars StarsFor(double p_value);
std::string_view ToString(Stars stars);

struct TestResult {
  double u_statistic = 0.0;  // min(U_a, U_b)
  double p_value = 1.0;      // two-sided
  Stars stars = Stars::kNone;
  // Either sample has fewer than 20 values, where the normal approximation
  // is rough.
  bool small_sample = false;
};

inline constexpr std::size_t kNormalApproximationMinSize = 20;

// Two-sided Mann-Whitney U test using the normal approximation with tie and
// continuity corrections. When every value in both samples is identical the
// p-value is 1. Throws std::domain_error on an empty sample.
TestResult MannWhitneyU(std::span<const double> a, std::span<const double> b);

// Test against a same-length sample of zeros.
TestResult ZeroAtomTest(std::span<const double> sample);

struct RelevanceVerdict {
  std::vector<bool> relevant;      // indexed by PlayerId
  std::vector<TestResult> tests;   // zero-atom test per player
  std::vector<PlayerId> kept;      // relevant players in index order
  InteractionGraph pruned{0};      // induced on `kept`, renumbered
};

inline constexpr double kRelevanceThreshold = 0.001;

// Keeps players whose samples differ from the zero atom at p < 0.001.
// samples[i] holds player i's per-simulation values.
RelevanceVerdict PruneRelevant(const InteractionGraph& graph,
                               const std::vector<std::vector<double>>& samples);

}  // namespace myerson

#endif  // MYERSON_STATS_H_
