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

// Command-line front end: attribution runs, single matches and knowledge
// graph construction.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "match_config.h"
#include "myerson/analysis.h"
#include "myerson/arena.h"
#include "myerson/arena_game.h"
#include "myerson/graph_io.h"
#include "myerson/hkg.h"

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct AnalyzeFlags {
  std::string config_path;
  std::string matchups;
  int n = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string method;
  std::string graph;
  std::string out_csv;
  std::string out_json;
  std::string trace;
  int threads = -1;
  bool json_timings = false;
  bool quiet = false;
};

int RunAnalyze(const AnalyzeFlags& flags) {
  myerson::RunConfig config;
  if (!flags.config_path.empty()) {
    config = myerson::ParseRunConfigJson(ReadFile(flags.config_path));
  }
  if (!flags.matchups.empty()) {
    config.matchups = myerson::ParseMatchups(flags.matchups);
  }
  if (flags.n >= 0) config.simulations = flags.n;
  if (flags.seed_set) config.master_seed = flags.seed;
  if (!flags.method.empty()) {
    config.run_shapley = flags.method == "shapley" || flags.method == "both";
    config.run_myerson = flags.method == "myerson" || flags.method == "both";
  }
  if (!flags.graph.empty()) {
    if (flags.graph == "hkg") {
      config.graph_source = myerson::GraphSource::kArenaHkg;
    } else if (flags.graph == "complete") {
      config.graph_source = myerson::GraphSource::kComplete;
    } else {
      config.graph_source = myerson::GraphSource::kFile;
      config.graph_path = flags.graph;
    }
  }
  if (!flags.out_csv.empty()) config.out_csv = flags.out_csv;
  if (!flags.out_json.empty()) config.out_json = flags.out_json;
  if (!flags.trace.empty()) config.trace_path = flags.trace;
  if (flags.threads >= 0) config.threads = flags.threads;
  if (flags.json_timings) config.json_timings = true;

  const auto report =
      myerson::RunAnalysis(config, flags.quiet ? nullptr : &std::cerr);
  myerson::EmitReport(report,
                      {config.out_csv, config.out_json, config.json_timings});
  std::cout << myerson::FormatSummary(report);
  return 0;
}

int RunMatchCommand(const std::string& config_path, const std::string& team_a,
                    const std::string& team_b, std::uint64_t seed,
                    bool seed_set, const std::string& events_path) {
  namespace arena = myerson::arena;
  arena::MatchConfig config;
  if (!config_path.empty()) {
    config = myerson::tools::ParseMatchConfigJson(ReadFile(config_path));
  }
  if (!team_a.empty()) {
    config.team_a = arena::DefaultTeam(arena::ParsePolicy(team_a));
  }
  if (!team_b.empty()) {
    config.team_b = arena::DefaultTeam(arena::ParsePolicy(team_b));
  }
  if (seed_set) config.seed = seed;
  std::vector<arena::MatchEvent> events;
  arena::MatchHooks hooks;
  if (!events_path.empty()) hooks.events = &events;
  const auto outcome = arena::RunMatch(config, hooks);
  std::cout << "r=" << outcome.result << " T=" << outcome.rounds
            << " S=" << outcome.score << "\n";
  if (!events_path.empty()) {
    const std::string csv = arena::FormatEventsCsv(events);
    if (events_path == "-") {
      std::cout << csv;
    } else {
      WriteFile(events_path, csv);
    }
  }
  return 0;
}

int RunHkgCommand(const std::string& roster_path, const std::string& format,
                  const std::string& players_path) {
  const auto roster = roster_path.empty()
                          ? myerson::arena::ArenaRoster()
                          : myerson::ParseRosterJson(ReadFile(roster_path));
  const auto hkg = myerson::BuildHkg(roster);
  for (const auto& warning : hkg.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  std::cout << (format == "json" ? myerson::FormatGraphJson(hkg.graph)
                                 : myerson::FormatEdgeList(hkg.graph));
  const std::string table = myerson::FormatPlayerTableJson(hkg);
  if (players_path == "-") {
    std::cerr << table;
  } else if (!players_path.empty()) {
    WriteFile(players_path, table);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shapley and Myerson attribution for multi-agent simulations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(myerson::kToolVersion));

  AnalyzeFlags analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Run rollout attribution over matchups");
  analyze_cmd->add_option("--config", analyze.config_path, "JSON run config");
  analyze_cmd->add_option("--matchups", analyze.matchups,
                          "all | handcrafted | A:B[,A:B...]");
  analyze_cmd->add_option("--n", analyze.n, "Simulations per matchup");
  analyze_cmd->add_option("--seed", analyze.seed, "Master seed")
      ->each([&](const std::string&) { analyze.seed_set = true; });
  analyze_cmd->add_option("--method", analyze.method)
      ->check(CLI::IsMember({"shapley", "myerson", "both"}));
  analyze_cmd->add_option("--graph", analyze.graph,
                          "hkg | complete | path to an edge list or JSON");
  analyze_cmd->add_option("--out-csv", analyze.out_csv);
  analyze_cmd->add_option("--out-json", analyze.out_json);
  analyze_cmd->add_option("--trace", analyze.trace,
                          "Write one line per simulator call");
  analyze_cmd->add_option("--threads", analyze.threads, "0 = all cores");
  analyze_cmd->add_flag("--json-timings", analyze.json_timings,
                        "Include wall times in the JSON report");
  analyze_cmd->add_flag("--quiet", analyze.quiet);

  std::string match_config;
  std::string team_a;
  std::string team_b;
  std::uint64_t match_seed = 0;
  bool match_seed_set = false;
  std::string events_path;
  auto* match_cmd = app.add_subcommand("match", "Play one arena match");
  match_cmd->add_option("--config", match_config, "JSON match config");
  match_cmd->add_option("--team-a", team_a, "Policy for every team A agent");
  match_cmd->add_option("--team-b", team_b, "Policy for every team B agent");
  match_cmd->add_option("--seed", match_seed)
      ->each([&](const std::string&) { match_seed_set = true; });
  match_cmd->add_option("--events", events_path,
                        "CSV event log path, '-' for stdout");

  std::string roster_path;
  std::string graph_format = "edges";
  std::string players_path;
  auto* hkg_cmd =
      app.add_subcommand("hkg", "Build a knowledge graph from a roster");
  hkg_cmd->add_option("--roster", roster_path,
                      "Roster JSON (default: the arena roster)");
  hkg_cmd->add_option("--format", graph_format)
      ->check(CLI::IsMember({"edges", "json"}));
  hkg_cmd->add_option("--players", players_path,
                      "Write the player index table as JSON ('-' = stderr)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return RunAnalyze(analyze);
    if (*match_cmd) {
      return RunMatchCommand(match_config, team_a, team_b, match_seed,
                             match_seed_set, events_path);
    }
    if (*hkg_cmd) return RunHkgCommand(roster_path, graph_format, players_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
