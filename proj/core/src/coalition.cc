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

#include "myerson/coalition.h"

#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace myerson {

std::vector<PlayerId> Coalition::Members() const {
  std::vector<PlayerId> members;
  members.reserve(size());
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    members.push_back(std::countr_zero(rest));
  }
  return members;
}

std::string Coalition::Hex() const {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "0x%x", bits_);
  return buffer;
}

GameSpec::GameSpec(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("a game needs at least one player");
  }
  if (labels_.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw std::invalid_argument("too many players: " +
                                std::to_string(labels_.size()) + " > " +
                                std::to_string(kMaxPlayers));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate player label: " + label);
    }
  }
}

GameSpec GameSpec::Anonymous(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return GameSpec(std::move(labels));
}

PlayerId GameSpec::IndexOf(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<PlayerId>(i);
  }
  throw std::out_of_range("unknown player label: " + label);
}

namespace {

// Binomial coefficients up to C(23, k) are below 2^53, so they convert to
// double exactly and the weight is rounded once.
std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int j = 1; j <= k; ++j) {
    result = result * static_cast<std::uint64_t>(n - k + j) /
             static_cast<std::uint64_t>(j);
  }
  return result;
}

}  // namespace

double ShapleyWeight(int k, int n) {
  if (n <= 0 || n > kMaxPlayers || k < 0 || k >= n) {
    throw std::domain_error("ShapleyWeight requires 0 <= k < n <= " +
                            std::to_string(kMaxPlayers) + ", got k=" +
                            std::to_string(k) + " n=" + std::to_string(n));
  }
  const auto denominator =
      static_cast<double>(static_cast<std::uint64_t>(n) * Binomial(n - 1, k));
  return 1.0 / denominator;
}

std::vector<double> ShapleyWeights(int n) {
  std::vector<double> weights(n);
  for (int k = 0; k < n; ++k) weights[k] = ShapleyWeight(k, n);
  return weights;
}

std::vector<Coalition> AllCoalitionsByCardinality(int n) {
  if (n < 0 || n > kMaxPlayers) {
    throw std::domain_error("player count out of range");
  }
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << n);
  out.push_back(Coalition::Empty());
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack walks the k-subsets in increasing numeric order.
    std::uint64_t bits = (std::uint64_t{1} << k) - 1;
    while (bits < limit) {
      out.emplace_back(static_cast<std::uint32_t>(bits));
      const std::uint64_t lowest = bits & (~bits + 1);
      const std::uint64_t ripple = bits + lowest;
      bits = (((ripple ^ bits) >> 2) / lowest) | ripple;
    }
  }
  return out;
}

std::vector<Coalition> SubsetsExcluding(const GameSpec& game,
                                        PlayerId player) {
  if (player < 0 || player >= game.num_players()) {
    throw std::out_of_range("player index out of range");
  }
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << (game.num_players() - 1));
  for (Coalition k : AllCoalitionsByCardinality(game.num_players())) {
    if (!k.Contains(player)) out.push_back(k);
  }
  return out;
}

}  // namespace myerson
