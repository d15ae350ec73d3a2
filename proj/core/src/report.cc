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

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "myerson/analysis.h"

namespace myerson {

namespace {

std::string Fixed(double value, int precision) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::fixed, precision);
  return std::string(buffer, result.ptr);
}

std::string Scientific(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::scientific, 6);
  return std::string(buffer, result.ptr);
}

std::string GraphName(const RunConfig& config) {
  switch (config.graph_source) {
    case GraphSource::kArenaHkg: return "hkg";
    case GraphSource::kComplete: return "complete";
    case GraphSource::kFile: return config.graph_path;
  }
  return "hkg";
}

nlohmann::json MethodJson(const MethodReport& m, bool include_timing) {
  nlohmann::json out;
  out["mean_score"] = m.mean_score;
  out["means"] = m.means;
  nlohmann::json p_zero = nlohmann::json::array();
  nlohmann::json stars = nlohmann::json::array();
  for (const auto& t : m.zero_tests) {
    p_zero.push_back(t.p_value);
    stars.push_back(std::string(ToString(t.stars)));
  }
  out["p_zero"] = std::move(p_zero);
  out["stars"] = std::move(stars);
  const auto& counter = m.rollout.counter;
  out["distinct_evaluations_per_simulation"] =
      counter.distinct_evaluations_per_simulation;
  out["total_simulator_calls"] = counter.total_simulator_calls;
  if (include_timing) out["wall_time_seconds"] = counter.wall_time.count();
  out["full_scores"] = m.rollout.full_scores;
  nlohmann::json samples = nlohmann::json::array();
  for (int s = 0; s < m.rollout.samples.simulations(); ++s) {
    const auto row = m.rollout.samples.row(s);
    samples.push_back(std::vector<double>(row.begin(), row.end()));
  }
  out["samples"] = std::move(samples);
  return out;
}

}  // namespace

std::string FormatReportCsv(const AttributionReport& report) {
  std::string out =
      "matchup,team_a,team_b,method,player,mean,p_zero,stars,cross_p,"
      "cross_stars\n";
  for (const auto& entry : report.matchups) {
    for (Method method : {Method::kShapley, Method::kMyerson}) {
      const MethodReport* m = entry.Find(method);
      if (m == nullptr) continue;
      for (std::size_t p = 0; p < report.players.size(); ++p) {
        out += entry.matchup.Name();
        out += ',';
        out += arena::ToString(entry.matchup.team_a);
        out += ',';
        out += arena::ToString(entry.matchup.team_b);
        out += ',';
        out += ToString(method);
        out += ',';
        out += report.players[p];
        out += ',';
        out += Fixed(m->means[p], 6);
        out += ',';
        out += Scientific(m->zero_tests[p].p_value);
        out += ',';
        out += ToString(m->zero_tests[p].stars);
        out += ',';
        if (!entry.cross_tests.empty()) {
          out += Scientific(entry.cross_tests[p].p_value);
          out += ',';
          out += ToString(entry.cross_tests[p].stars);
        } else {
          out += ',';
        }
        out += '\n';
      }
    }
  }
  return out;
}

std::string FormatReportJson(const AttributionReport& report,
                             bool include_timing) {
  nlohmann::json doc;
  doc["tool"] = "myerson";
  doc["version"] = std::string(kToolVersion);
  nlohmann::json config;
  nlohmann::json matchups = nlohmann::json::array();
  for (const auto& m : report.config.matchups) {
    matchups.push_back(std::string(arena::ToString(m.team_a)) + ":" +
                       std::string(arena::ToString(m.team_b)));
  }
  config["matchups"] = std::move(matchups);
  config["n"] = report.config.simulations;
  config["seed"] = report.config.master_seed;
  config["methods"] = nlohmann::json::array();
  if (report.config.run_shapley) config["methods"].push_back("shapley");
  if (report.config.run_myerson) config["methods"].push_back("myerson");
  config["graph"] = GraphName(report.config);
  doc["config"] = std::move(config);
  doc["players"] = report.players;

  nlohmann::json results = nlohmann::json::array();
  for (const auto& entry : report.matchups) {
    nlohmann::json item;
    item["matchup"] = entry.matchup.Name();
    item["team_a"] = std::string(arena::ToString(entry.matchup.team_a));
    item["team_b"] = std::string(arena::ToString(entry.matchup.team_b));
    item["seed"] = entry.seed;
    if (entry.shapley) item["shapley"] = MethodJson(*entry.shapley, include_timing);
    if (entry.myerson) item["myerson"] = MethodJson(*entry.myerson, include_timing);
    if (!entry.cross_tests.empty()) {
      nlohmann::json p = nlohmann::json::array();
      nlohmann::json stars = nlohmann::json::array();
      for (const auto& t : entry.cross_tests) {
        p.push_back(t.p_value);
        stars.push_back(std::string(ToString(t.stars)));
      }
      item["cross_p"] = std::move(p);
      item["cross_stars"] = std::move(stars);
    }
    if (include_timing) {
      if (auto speedup = entry.Speedup()) item["speedup"] = *speedup;
    }
    results.push_back(std::move(item));
  }
  doc["results"] = std::move(results);
  return doc.dump(1) + "\n";
}

std::string FormatSummary(const AttributionReport& report) {
  std::string out;
  char line[256];
  for (const auto& entry : report.matchups) {
    out += "== " + entry.matchup.Name() + " ==\n";
    const MethodReport* sh = entry.Find(Method::kShapley);
    const MethodReport* my = entry.Find(Method::kMyerson);
    std::snprintf(line, sizeof(line), "%-28s %14s %14s\n", "feature",
                  sh ? "shapley" : "", my ? "myerson" : "");
    out += line;
    auto cell = [](const MethodReport* m, double value, Stars stars) {
      if (m == nullptr) return std::string();
      return Fixed(value, 2) + std::string(ToString(stars));
    };
    std::snprintf(line, sizeof(line), "%-28s %14s %14s\n", "total score",
                  sh ? Fixed(sh->mean_score, 2).c_str() : "",
                  my ? Fixed(my->mean_score, 2).c_str() : "");
    out += line;
    std::snprintf(
        line, sizeof(line), "%-28s %14s %14s\n", "evaluations/simulation",
        sh ? std::to_string(
                 sh->rollout.counter.distinct_evaluations_per_simulation)
                 .c_str()
           : "",
        my ? std::to_string(
                 my->rollout.counter.distinct_evaluations_per_simulation)
                 .c_str()
           : "");
    out += line;
    std::snprintf(line, sizeof(line), "%-28s %14s %14s\n", "wall time (s)",
                  sh ? Fixed(sh->rollout.counter.wall_time.count(), 2).c_str()
                     : "",
                  my ? Fixed(my->rollout.counter.wall_time.count(), 2).c_str()
                     : "");
    out += line;
    for (std::size_t p = 0; p < report.players.size(); ++p) {
      std::string s = sh ? cell(sh, sh->means[p], sh->zero_tests[p].stars) : "";
      std::string m = my ? cell(my, my->means[p], my->zero_tests[p].stars) : "";
      if (!entry.cross_tests.empty() &&
          entry.cross_tests[p].p_value < 0.05) {
        s = "[" + s + "]";
        m = "[" + m + "]";
      }
      std::snprintf(line, sizeof(line), "%-28s %14s %14s\n",
                    report.players[p].c_str(), s.c_str(), m.c_str());
      out += line;
    }
    if (auto speedup = entry.Speedup()) {
      out += "myerson speedup: " + Fixed(*speedup, 1) + "x\n";
    }
    out += "\n";
  }
  return out;
}

void EmitReport(const AttributionReport& report, const ReportPaths& paths) {
  auto write = [](const std::string& path, const std::string& content) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("failed while writing " + path);
  };
  write(paths.csv, FormatReportCsv(report));
  write(paths.json, FormatReportJson(report, paths.json_timings));
}

}  // namespace myerson
