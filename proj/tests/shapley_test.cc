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

#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gtest/gtest.h"
#include "support/oracles.h"

namespace myerson {
namespace {

using ::myerson::testing::PermutationShapley;
using ::myerson::testing::RandomTable;
using ::myerson::testing::TableOracle;

double Sum(const std::vector<double>& values) {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

TEST(ExactShapleyTest, TwoPlayerHandExample) {
  const std::vector<double> table = {0.0, 1.0, 2.0, 4.0};
  const auto result = ExactShapley(GameSpec::Anonymous(2), TableOracle(table));
  EXPECT_DOUBLE_EQ(result.values[0], 1.5);
  EXPECT_DOUBLE_EQ(result.values[1], 2.5);
  EXPECT_EQ(result.oracle_calls, 4);
}

TEST(ExactShapleyTest, GloveGame) {
  auto v = [](Coalition k) {
    return k.Contains(0) && (k.Contains(1) || k.Contains(2)) ? 1.0 : 0.0;
  };
  const auto result = ExactShapley(GameSpec::Anonymous(3), v);
  EXPECT_NEAR(result.values[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(result.values[1], 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(result.values[2], 1.0 / 6.0, 1e-15);
}

TEST(ExactShapleyTest, AdditiveGame) {
  const std::vector<double> c = {3.0, -1.5, 0.25, 7.0, 0.0, 2.0};
  auto v = [&](Coalition k) {
    double sum = 0;
    for (PlayerId i : k.Members()) sum += c[i];
    return sum;
  };
  const auto result = ExactShapley(GameSpec::Anonymous(6), v);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(result.values[i], c[i], 1e-12);
}

TEST(ExactShapleyTest, MatchesPermutationBruteForce) {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto table = RandomTable(n, 100 * n + seed);
      const auto expected = PermutationShapley(n, table);
      const auto result =
          ExactShapley(GameSpec::Anonymous(n), TableOracle(table));
      for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(result.values[i], expected[i], 1e-9)
            << "n=" << n << " seed=" << seed << " i=" << i;
      }
    }
  }
}

TEST(ExactShapleyTest, Efficiency) {
  for (int n = 1; n <= 10; ++n) {
    const auto table = RandomTable(n, 7 + n);
    const auto result =
        ExactShapley(GameSpec::Anonymous(n), TableOracle(table));
    EXPECT_NEAR(Sum(result.values), table.back(), 1e-9) << n;
  }
}

TEST(ExactShapleyTest, SymmetricPlayersGetEqualValues) {
  // Players 1 and 3 are interchangeable: v depends on them only through
  // how many of the two are present.
  const int n = 6;
  auto table = RandomTable(n, 42);
  for (std::uint32_t k = 0; k < table.size(); ++k) {
    const std::uint32_t swapped = (k & ~0b1010u) | ((k >> 1 & 1u) << 3) |
                                  ((k >> 3 & 1u) << 1);
    if (swapped < k) table[k] = table[swapped];
  }
  const auto result =
      ExactShapley(GameSpec::Anonymous(n), TableOracle(table));
  EXPECT_NEAR(result.values[1], result.values[3], 1e-12);
}

TEST(ExactShapleyTest, NullPlayerGetsZero) {
  for (int n = 2; n <= 10; ++n) {
    const PlayerId null_player = n / 2;
    auto table = RandomTable(n, 3 * n);
    const std::uint32_t bit = 1u << null_player;
    for (std::uint32_t k = 0; k < table.size(); ++k) {
      if (k & bit) table[k] = table[k & ~bit];
    }
    const auto result =
        ExactShapley(GameSpec::Anonymous(n), TableOracle(table));
    EXPECT_NEAR(result.values[null_player], 0.0, 1e-12) << n;
  }
}

TEST(ExactShapleyTest, Linearity) {
  for (int n = 1; n <= 10; ++n) {
    const auto a = RandomTable(n, 11 * n);
    const auto b = RandomTable(n, 13 * n);
    std::vector<double> combined(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      combined[k] = 2.5 * a[k] - 0.75 * b[k];
    }
    const GameSpec game = GameSpec::Anonymous(n);
    const auto pa = ExactShapley(game, TableOracle(a)).values;
    const auto pb = ExactShapley(game, TableOracle(b)).values;
    const auto pc = ExactShapley(game, TableOracle(combined)).values;
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(pc[i], 2.5 * pa[i] - 0.75 * pb[i], 1e-9);
    }
  }
}

TEST(ExactShapleyTest, ThreadCountDoesNotChangeBits) {
  const int n = 12;
  const auto table = RandomTable(n, 5);
  const GameSpec game = GameSpec::Anonymous(n);
  const auto one = ExactShapley(game, TableOracle(table), {.threads = 1});
  const auto four = ExactShapley(game, TableOracle(table), {.threads = 4});
  EXPECT_EQ(one.values, four.values);
}

TEST(ExactShapleyTest, EvaluatesEachCoalitionOnce) {
  std::atomic<int> calls{0};
  auto v = [&](Coalition k) {
    ++calls;
    return static_cast<double>(k.size());
  };
  const auto result = ExactShapley(GameSpec::Anonymous(9), v);
  EXPECT_EQ(calls.load(), 512);
  EXPECT_EQ(result.oracle_calls, 512);
}

TEST(ExactShapleyTest, OracleFailureCarriesCoalition) {
  auto v = [](Coalition k) -> double {
    if (k.bits() == 0b101) throw std::runtime_error("boom");
    return 0.0;
  };
  try {
    ExactShapley(GameSpec::Anonymous(3), v);
    FAIL() << "expected OracleError";
  } catch (const OracleError& e) {
    EXPECT_EQ(e.coalition().bits(), 0b101u);
  }
}

TEST(ExactShapleyTest, RejectsNonzeroEmptyCoalition) {
  auto v = [](Coalition) { return 1.0; };
  EXPECT_THROW(ExactShapley(GameSpec::Anonymous(2), v), std::invalid_argument);
}

TEST(ShapleyAccumulatorTest, SinglePlayer) {
  const ShapleyAccumulator accumulator(1);
  const std::vector<double> table = {0.0, 3.25};
  EXPECT_EQ(accumulator.Compute(table), (std::vector<double>{3.25}));
}

}  // namespace
}  // namespace myerson
