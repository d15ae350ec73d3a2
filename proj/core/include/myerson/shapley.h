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

#ifndef MYERSON_SHAPLEY_H_
#define MYERSON_SHAPLEY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "myerson/coalition.h"

namespace myerson {

// One value per player, in the units of the characteristic function.
using AttributionVector = std::vector<double>;

struct ExactOptions {
  int threads = 1;  // < 1 means all cores
};

struct ShapleyResult {
  AttributionVector values;
  // Distinct coalitions handed to the characteristic function.
  std::int64_t oracle_calls = 0;
};

// Turns a dense table of coalition values (indexed by bit pattern, size 2^n)
// into Shapley values. The summation order per player is fixed: coalitions
// are visited by cardinality, then numerically, and each cardinality class is
// summed before it is weighted. Results therefore do not depend on how the
// table was filled.
class ShapleyAccumulator {
 public:
  explicit ShapleyAccumulator(int num_players);

  int num_players() const { return num_players_; }
  void Compute(std::span<const double> table, std::span<double> out) const;
  AttributionVector Compute(std::span<const double> table) const;

 private:
  int num_players_;
  std::vector<double> weights_;
  std::vector<std::uint32_t> order_;  // all coalitions, cardinality-major
  std::vector<std::uint32_t> class_begin_;  // offsets into order_, size n+2
};

// Exact Shapley values by full enumeration. Every coalition is evaluated
// exactly once; v(empty) must be 0 (std::invalid_argument otherwise).
// Failures of v are rethrown as OracleError.
ShapleyResult ExactShapley(const GameSpec& game,
                           const CharacteristicFunction& v,
                           const ExactOptions& options = {});

}  // namespace myerson

#endif  // MYERSON_SHAPLEY_H_
