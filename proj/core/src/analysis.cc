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

#include "myerson/analysis.h"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "myerson/arena_game.h"
#include "myerson/graph_io.h"
#include "myerson/seeding.h"

namespace myerson {

using arena::PolicyKind;

std::string_view ToString(Method method) {
  return method == Method::kShapley ? "shapley" : "myerson";
}

std::string Matchup::Name() const {
  return std::string(arena::ToString(team_a)) + " vs " +
         std::string(arena::ToString(team_b));
}

std::vector<Matchup> AllMatchups() {
  std::vector<Matchup> out;
  for (PolicyKind a : arena::kPolicies) {
    for (PolicyKind b : arena::kPolicies) out.push_back({a, b});
  }
  return out;
}

std::vector<Matchup> HandcraftedMatchups() {
  std::vector<Matchup> out;
  for (const Matchup& m : AllMatchups()) {
    if (m.team_a != PolicyKind::kScriptedRL &&
        m.team_b != PolicyKind::kScriptedRL) {
      out.push_back(m);
    }
  }
  return out;
}

std::vector<Matchup> ParseMatchups(std::string_view text) {
  if (text == "all") return AllMatchups();
  if (text == "handcrafted") return HandcraftedMatchups();
  std::vector<Matchup> out;
  std::string item;
  std::istringstream in{std::string(text)};
  auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return std::string();
    return s.substr(begin, s.find_last_not_of(" \t") - begin + 1);
  };
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("matchup must look like A:B, got " + item);
    }
    out.push_back({arena::ParsePolicy(trim(item.substr(0, colon))),
                   arena::ParsePolicy(trim(item.substr(colon + 1)))});
  }
  return out;
}

void RunConfig::Validate() const {
  if (simulations < 1) {
    throw std::invalid_argument("number of simulations must be >= 1");
  }
  if (matchups.empty()) throw std::invalid_argument("no matchups selected");
  if (!run_shapley && !run_myerson) {
    throw std::invalid_argument("no analysis method selected");
  }
  if (graph_source == GraphSource::kFile && graph_path.empty()) {
    throw std::invalid_argument("graph file path is empty");
  }
}

RunConfig ParseRunConfigJson(std::string_view text) {
  RunConfig config;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid config JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be an object");
  try {
    if (doc.contains("matchups")) {
      const auto& m = doc["matchups"];
      if (m.is_string()) {
        config.matchups = ParseMatchups(m.get<std::string>());
      } else {
        config.matchups.clear();
        for (const auto& item : m) {
          auto parsed = ParseMatchups(item.get<std::string>());
          config.matchups.insert(config.matchups.end(), parsed.begin(),
                                 parsed.end());
        }
      }
    }
    if (doc.contains("n")) config.simulations = doc["n"].get<int>();
    if (doc.contains("seed")) config.master_seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("method")) {
      const auto method = doc["method"].get<std::string>();
      if (method == "shapley") {
        config.run_shapley = true;
        config.run_myerson = false;
      } else if (method == "myerson") {
        config.run_shapley = false;
        config.run_myerson = true;
      } else if (method == "both") {
        config.run_shapley = config.run_myerson = true;
      } else {
        throw std::invalid_argument("unknown method: " + method);
      }
    }
    if (doc.contains("graph")) {
      const auto graph = doc["graph"].get<std::string>();
      if (graph == "hkg") {
        config.graph_source = GraphSource::kArenaHkg;
      } else if (graph == "complete") {
        config.graph_source = GraphSource::kComplete;
      } else {
        config.graph_source = GraphSource::kFile;
        config.graph_path = graph;
      }
    }
    config.out_csv = doc.value("out_csv", config.out_csv);
    config.out_json = doc.value("out_json", config.out_json);
    config.trace_path = doc.value("trace", config.trace_path);
    config.threads = doc.value("threads", config.threads);
    config.json_timings = doc.value("json_timings", config.json_timings);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed config: ") + e.what());
  }
  return config;
}

std::optional<double> MatchupReport::Speedup() const {
  if (!shapley || !myerson) return std::nullopt;
  const double fast = myerson->rollout.counter.wall_time.count();
  if (fast <= 0.0) return std::nullopt;
  return shapley->rollout.counter.wall_time.count() / fast;
}

std::uint64_t MatchupSeed(std::uint64_t master_seed, const Matchup& matchup) {
  const auto code = static_cast<std::uint64_t>(matchup.team_a) * 4 +
                    static_cast<std::uint64_t>(matchup.team_b);
  return CombineSeeds(master_seed, code);
}

InteractionGraph ResolveGraph(const RunConfig& config) {
  const auto& hkg = arena::ArenaHkg();
  switch (config.graph_source) {
    case GraphSource::kArenaHkg: return hkg.graph;
    case GraphSource::kComplete:
      return InteractionGraph::Complete(hkg.graph.num_players());
    case GraphSource::kFile: {
      InteractionGraph graph = ReadGraphFile(config.graph_path);
      if (graph.num_players() != hkg.graph.num_players()) {
        throw std::invalid_argument(
            "graph file has " + std::to_string(graph.num_players()) +
            " players, the arena game has " +
            std::to_string(hkg.graph.num_players()));
      }
      return graph;
    }
  }
  return hkg.graph;
}

namespace {

MethodReport Summarise(Method method, RolloutResult rollout) {
  MethodReport report;
  report.method = method;
  report.means = rollout.samples.ColumnMeans();
  double total = 0.0;
  for (double s : rollout.full_scores) total += s;
  report.mean_score = total / static_cast<double>(rollout.full_scores.size());
  for (int p = 0; p < rollout.samples.players(); ++p) {
    report.zero_tests.push_back(ZeroAtomTest(rollout.samples.column(p)));
  }
  report.rollout = std::move(rollout);
  return report;
}

}  // namespace

AttributionReport RunAnalysis(const RunConfig& config, std::ostream* log) {
  config.Validate();
  const InteractionGraph graph = ResolveGraph(config);
  AttributionReport report;
  report.config = config;
  report.players = arena::ArenaHkg().game().labels();

  std::ofstream trace;
  if (!config.trace_path.empty()) {
    trace.open(config.trace_path);
    if (!trace) {
      throw std::runtime_error("cannot open trace file " + config.trace_path);
    }
  }

  for (const Matchup& matchup : config.matchups) {
    const arena::ArenaBinding binding(arena::DefaultTeam(matchup.team_b));
    const RolloutGame game = binding.Game(matchup.team_a);
    MatchupReport entry;
    entry.matchup = matchup;
    entry.seed = MatchupSeed(config.master_seed, matchup);
    RolloutOptions options;
    options.simulations = config.simulations;
    options.master_seed = entry.seed;
    options.threads = config.threads;
    if (trace.is_open()) options.trace = &trace;

    if (config.run_shapley) {
      if (trace.is_open()) trace << "# " << matchup.Name() << " shapley\n";
      entry.shapley = Summarise(Method::kShapley, RolloutShapley(game, options));
      if (log) {
        *log << matchup.Name() << " shapley: "
             << entry.shapley->rollout.counter.distinct_evaluations_per_simulation
             << " evaluations/simulation, "
             << entry.shapley->rollout.counter.wall_time.count() << " s\n";
      }
    }
    if (config.run_myerson) {
      if (trace.is_open()) trace << "# " << matchup.Name() << " myerson\n";
      entry.myerson =
          Summarise(Method::kMyerson, RolloutMyerson(game, graph, options));
      if (log) {
        *log << matchup.Name() << " myerson: "
             << entry.myerson->rollout.counter.distinct_evaluations_per_simulation
             << " evaluations/simulation, "
             << entry.myerson->rollout.counter.wall_time.count() << " s\n";
      }
    }
    if (entry.shapley && entry.myerson) {
      for (int p = 0; p < static_cast<int>(report.players.size()); ++p) {
        entry.cross_tests.push_back(
            MannWhitneyU(entry.shapley->rollout.samples.column(p),
                         entry.myerson->rollout.samples.column(p)));
      }
    }
    report.matchups.push_back(std::move(entry));
  }
  return report;
}

}  // namespace myerson
