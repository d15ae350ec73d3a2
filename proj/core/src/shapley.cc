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

#include "myerson/shapley.h"

#include <stdexcept>

#include "myerson/parallel.h"

namespace myerson {

ShapleyAccumulator::ShapleyAccumulator(int num_players)
    : num_players_(num_players), weights_(ShapleyWeights(num_players)) {
  const auto all = AllCoalitionsByCardinality(num_players);
  order_.reserve(all.size());
  class_begin_.assign(num_players + 2, 0);
  for (Coalition k : all) {
    order_.push_back(k.bits());
    ++class_begin_[k.size() + 1];
  }
  for (int k = 1; k <= num_players + 1; ++k) {
    class_begin_[k] += class_begin_[k - 1];
  }
}

void ShapleyAccumulator::Compute(std::span<const double> table,
                                 std::span<double> out) const {
  const std::size_t expected = std::size_t{1} << num_players_;
  if (table.size() != expected || out.size() != std::size_t(num_players_)) {
    throw std::invalid_argument("ShapleyAccumulator: size mismatch");
  }
  for (int player = 0; player < num_players_; ++player) {
    const std::uint32_t bit = std::uint32_t{1} << player;
    double total = 0.0;
    for (int k = 0; k < num_players_; ++k) {
      double class_sum = 0.0;
      for (std::uint32_t j = class_begin_[k]; j < class_begin_[k + 1]; ++j) {
        const std::uint32_t without = order_[j];
        if (without & bit) continue;
        class_sum += table[without | bit] - table[without];
      }
      total += weights_[k] * class_sum;
    }
    out[player] = total;
  }
}

AttributionVector ShapleyAccumulator::Compute(
    std::span<const double> table) const {
  AttributionVector out(num_players_);
  Compute(table, out);
  return out;
}

ShapleyResult ExactShapley(const GameSpec& game,
                           const CharacteristicFunction& v,
                           const ExactOptions& options) {
  const int n = game.num_players();
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> table(size, 0.0);
  // Each slot is written by exactly one chunk.
  ParallelFor(size, options.threads, 1024,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t bits = begin; bits < end; ++bits) {
                  const Coalition k(static_cast<std::uint32_t>(bits));
                  try {
                    table[bits] = v(k);
                  } catch (const OracleError&) {
                    throw;
                  } catch (const std::exception& e) {
                    throw OracleError(k, e.what());
                  }
                }
              });
  if (table[0] != 0.0) {
    throw std::invalid_argument(
        "characteristic function must vanish on the empty coalition");
  }
  ShapleyResult result;
  result.values = ShapleyAccumulator(n).Compute(table);
  result.oracle_calls = static_cast<std::int64_t>(size);
  return result;
}

}  // namespace myerson
