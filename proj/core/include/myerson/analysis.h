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

#ifndef MYERSON_ANALYSIS_H_
#define MYERSON_ANALYSIS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "myerson/arena.h"
#include "myerson/rollout.h"
#include "myerson/stats.h"

namespace myerson {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Method { kShapley, kMyerson };
std::string_view ToString(Method method);

enum class GraphSource { kArenaHkg, kFile, kComplete };

struct Matchup {
  arena::PolicyKind team_a;
  arena::PolicyKind team_b;
  // "Random vs Smart"
  std::string Name() const;
  friend bool operator==(const Matchup&, const Matchup&) = default;
};

// All 16 policy pairs, team A major.
std::vector<Matchup> AllMatchups();
// The 9 pairs of Random, Smart and NoOp.
std::vector<Matchup> HandcraftedMatchups();
// "all", "handcrafted", or a comma list of "A:B" pairs such as
// "Random:Smart,NoOp:NoOp". Throws std::invalid_argument.
std::vector<Matchup> ParseMatchups(std::string_view text);

struct RunConfig {
  std::vector<Matchup> matchups = AllMatchups();
  int simulations = 72;
  std::uint64_t master_seed = 0;
  bool run_shapley = true;
  bool run_myerson = true;
  GraphSource graph_source = GraphSource::kArenaHkg;
  std::string graph_path;  // when graph_source == kFile
  std::string out_csv;
  std::string out_json;
  std::string trace_path;
  int threads = 0;  // < 1 means all cores
  bool json_timings = false;

  // Throws std::invalid_argument on N < 1, no matchups or no methods.
  void Validate() const;
};

// Accepts {"matchups": "all" | ["Random:Smart", ...], "n": 72, "seed": 7,
// "method": "shapley" | "myerson" | "both", "graph": "hkg" | "complete" |
// <path>, "out_csv": ..., "out_json": ..., "trace": ..., "threads": 0,
// "json_timings": false}. Missing keys keep their defaults.
RunConfig ParseRunConfigJson(std::string_view text);

struct MethodReport {
  Method method;
  double mean_score = 0.0;  // mean grand-coalition score
  std::vector<double> means;
  std::vector<TestResult> zero_tests;
  RolloutResult rollout;
};

struct MatchupReport {
  Matchup matchup;
  std::uint64_t seed = 0;
  std::optional<MethodReport> shapley;
  std::optional<MethodReport> myerson;
  // Shapley vs Myerson per player; empty unless both methods ran.
  std::vector<TestResult> cross_tests;

  const MethodReport* Find(Method method) const {
    return method == Method::kShapley ? (shapley ? &*shapley : nullptr)
                                      : (myerson ? &*myerson : nullptr);
  }
  // Shapley wall time over Myerson wall time, when both ran.
  std::optional<double> Speedup() const;
};

struct AttributionReport {
  RunConfig config;
  std::vector<std::string> players;
  std::vector<MatchupReport> matchups;
};

// Seed of one matchup; depends only on the master seed and the policies.
std::uint64_t MatchupSeed(std::uint64_t master_seed, const Matchup& matchup);

// Interaction graph used for the Myerson rollouts.
InteractionGraph ResolveGraph(const RunConfig& config);

// Runs every matchup under the selected methods. Progress lines go to `log`
// when given.
AttributionReport RunAnalysis(const RunConfig& config,
                              std::ostream* log = nullptr);

// One row per (matchup, method, player).
std::string FormatReportCsv(const AttributionReport& report);
// Full per-simulation matrices, counters and a config echo. Byte-stable for
// a fixed configuration; wall times only with include_timing.
std::string FormatReportJson(const AttributionReport& report,
                             bool include_timing);
// Human-readable summary in the shape of the results table, with timings.
std::string FormatSummary(const AttributionReport& report);

struct ReportPaths {
  std::string csv;
  std::string json;
  bool json_timings = false;
};

// Writes the CSV and JSON files (skipping empty paths). Throws
// std::runtime_error when a file cannot be written.
void EmitReport(const AttributionReport& report, const ReportPaths& paths);

}  // namespace myerson

#endif  // MYERSON_ANALYSIS_H_
