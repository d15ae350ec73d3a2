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

#ifndef MYERSON_GRAPH_IO_H_
#define MYERSON_GRAPH_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "myerson/graph.h"

namespace myerson {

class GraphFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text: a first line holding n, then one "a b" pair per line,
// 0-based. Blank lines and lines starting with '#' are ignored.
InteractionGraph ParseEdgeList(std::string_view text);
std::string FormatEdgeList(const InteractionGraph& graph);

// JSON: {"n": 6, "edges": [[0, 1], [1, 2]]}
InteractionGraph ParseGraphJson(std::string_view text);
std::string FormatGraphJson(const InteractionGraph& graph);

// Accepts either format; JSON is recognised by a leading '{'.
InteractionGraph ParseGraph(std::string_view text);
InteractionGraph ReadGraphFile(const std::string& path);

}  // namespace myerson

#endif  // MYERSON_GRAPH_IO_H_
