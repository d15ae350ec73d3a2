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

#ifndef MYERSON_TOOLS_MATCH_CONFIG_H_
#define MYERSON_TOOLS_MATCH_CONFIG_H_

#include <string_view>

#include "myerson/arena.h"

namespace myerson::tools {

// {"team_a": {"policy": "Smart", "agents": [{"role": "Warrior",
//   "max_hp": 100, "attack_power": 10, "healing_power": 5,
//   "control_chance": 0.5, "policy": "Random"}]},
//  "team_b": {...}, "t_max": 1000, "seed": 7}
// A team's "policy" applies to every agent unless an agent overrides it;
// omitted stats keep their defaults. Throws std::invalid_argument.
arena::MatchConfig ParseMatchConfigJson(std::string_view text);

}  // namespace myerson::tools

#endif  // MYERSON_TOOLS_MATCH_CONFIG_H_
