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

#include "myerson/graph_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace myerson {

namespace {

InteractionGraph Build(long long n,
                       const std::vector<std::pair<long long, long long>>& edges) {
  if (n < 1 || n > kMaxPlayers) {
    throw GraphFormatError("player count out of range: " + std::to_string(n));
  }
  InteractionGraph graph(static_cast<int>(n));
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw GraphFormatError("invalid edge " + std::to_string(a) + " " +
                             std::to_string(b));
    }
    graph.AddEdge(static_cast<int>(a), static_cast<int>(b));
  }
  return graph;
}

}  // namespace

InteractionGraph ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long long n = -1;
  std::vector<std::pair<long long, long long>> edges;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string extra;
    if (n < 0) {
      if (!(fields >> n) || (fields >> extra)) {
        throw GraphFormatError("line " + std::to_string(line_number) +
                               ": expected the player count");
      }
      continue;
    }
    long long a = 0;
    long long b = 0;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw GraphFormatError("line " + std::to_string(line_number) +
                             ": expected \"a b\"");
    }
    edges.emplace_back(a, b);
  }
  if (n < 0) throw GraphFormatError("missing player count header");
  return Build(n, edges);
}

std::string FormatEdgeList(const InteractionGraph& graph) {
  std::string out = std::to_string(graph.num_players()) + "\n";
  for (const auto& [a, b] : graph.Edges()) {
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

InteractionGraph ParseGraphJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphFormatError(std::string("invalid graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") ||
      !doc["n"].is_number_integer()) {
    throw GraphFormatError("graph JSON needs an integer \"n\"");
  }
  std::vector<std::pair<long long, long long>> edges;
  if (doc.contains("edges")) {
    for (const auto& edge : doc["edges"]) {
      if (!edge.is_array() || edge.size() != 2 ||
          !edge[0].is_number_integer() || !edge[1].is_number_integer()) {
        throw GraphFormatError("each edge must be a pair of integers");
      }
      edges.emplace_back(edge[0].get<long long>(), edge[1].get<long long>());
    }
  }
  return Build(doc["n"].get<long long>(), edges);
}

std::string FormatGraphJson(const InteractionGraph& graph) {
  nlohmann::json doc;
  doc["n"] = graph.num_players();
  doc["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : graph.Edges()) {
    doc["edges"].push_back({a, b});
  }
  return doc.dump(2) + "\n";
}

InteractionGraph ParseGraph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return ParseGraphJson(text);
  }
  return ParseEdgeList(text);
}

InteractionGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open graph file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

}  // namespace myerson
