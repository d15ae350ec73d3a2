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

#ifndef MYERSON_COALITION_H_
#define MYERSON_COALITION_H_

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace myerson {

// Coalitions are bit patterns, so the player count is bounded by the width
// of the pattern we are willing to enumerate densely.
inline constexpr int kMaxPlayers = 24;

using PlayerId = int;

// A subset of the player set. Bit j is set iff player j is a member.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

  static constexpr Coalition Empty() { return Coalition(); }
  static constexpr Coalition Singleton(PlayerId player) {
    return Coalition(std::uint32_t{1} << player);
  }
  // All players 0..n-1.
  static constexpr Coalition Full(int n) {
    return Coalition(n >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << n) - 1u);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool Contains(PlayerId player) const {
    return (bits_ >> player) & 1u;
  }
  constexpr Coalition With(PlayerId player) const {
    return Coalition(bits_ | (std::uint32_t{1} << player));
  }
  constexpr Coalition Without(PlayerId player) const {
    return Coalition(bits_ & ~(std::uint32_t{1} << player));
  }
  constexpr Coalition Union(Coalition other) const {
    return Coalition(bits_ | other.bits_);
  }
  constexpr Coalition Intersection(Coalition other) const {
    return Coalition(bits_ & other.bits_);
  }
  constexpr Coalition Minus(Coalition other) const {
    return Coalition(bits_ & ~other.bits_);
  }
  constexpr bool IsSubsetOf(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Index of the smallest member; undefined for the empty coalition.
  constexpr PlayerId Lowest() const { return std::countr_zero(bits_); }

  std::vector<PlayerId> Members() const;
  // Lower-case hex of the bit pattern, e.g. "0x7fff".
  std::string Hex() const;

  friend constexpr bool operator==(Coalition, Coalition) = default;
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Player set of a coalitional game.
class GameSpec {
 public:
  // Throws std::invalid_argument when labels are empty, exceed kMaxPlayers,
  // or contain duplicates.
  explicit GameSpec(std::vector<std::string> labels);
  // Players labelled "p0", "p1", ...
  static GameSpec Anonymous(int n);

  int num_players() const { return static_cast<int>(labels_.size()); }
  const std::string& label(PlayerId player) const { return labels_.at(player); }
  const std::vector<std::string>& labels() const { return labels_; }
  Coalition grand_coalition() const { return Coalition::Full(num_players()); }
  bool IsValid(Coalition coalition) const {
    return coalition.IsSubsetOf(grand_coalition());
  }
  // Throws std::out_of_range for an unknown label.
  PlayerId IndexOf(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
};

// The characteristic function v. Must return exactly 0 for the empty
// coalition and be a pure function of the coalition for one analysis run.
using CharacteristicFunction = std::function<double(Coalition)>;

// Raised when the characteristic function throws; carries the coalition
// that was being evaluated.
class OracleError : public std::runtime_error {
 public:
  OracleError(Coalition coalition, const std::string& what)
      : std::runtime_error("characteristic function failed on coalition " +
                           coalition.Hex() + ": " + what),
        coalition_(coalition) {}
  Coalition coalition() const { return coalition_; }

 private:
  Coalition coalition_;
};

// k!(n-k-1)!/n!, the weight of a coalition of size k (not containing the
// player) in a game of n players. Throws std::domain_error unless 0 <= k < n.
double ShapleyWeight(int k, int n);

// Table of ShapleyWeight(k, n) for k = 0..n-1.
std::vector<double> ShapleyWeights(int n);

// Every subset of C \ {player}, ordered by cardinality and then by numeric
// bit pattern.
std::vector<Coalition> SubsetsExcluding(const GameSpec& game, PlayerId player);

// Every subset of {0..n-1} in the same cardinality-major order.
std::vector<Coalition> AllCoalitionsByCardinality(int n);

}  // namespace myerson

#endif  // MYERSON_COALITION_H_
