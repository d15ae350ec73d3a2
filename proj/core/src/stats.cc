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

#include "myerson/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace myerson {

Stars StarsFor(double p_value) {
  if (p_value < 0.001) return Stars::kThree;
  if (p_value < 0.01) return Stars::kTwo;
  if (p_value < 0.05) return Stars::kOne;
  return Stars::kNone;
}

std::string_view ToString(Stars stars) {
  switch (stars) {
    case Stars::kNone: return "";
    case Stars::kOne: return "*";
    case Stars::kTwo: return "**";
    case Stars::kThree: return "***";
  }
  return "";
}

TestResult MannWhitneyU(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::domain_error("Mann-Whitney U needs two non-empty samples");
  }
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t total = na + nb;

  // (value, from_a) sorted by value; ranks averaged over ties.
  std::vector<std::pair<double, bool>> pooled;
  pooled.reserve(total);
  for (double x : a) pooled.emplace_back(x, true);
  for (double x : b) pooled.emplace_back(x, false);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  double rank_sum_a = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i;
    while (j < total && pooled[j].first == pooled[i].first) ++j;
    const double t = static_cast<double>(j - i);
    const double average_rank = (static_cast<double>(i + 1 + j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].second) rank_sum_a += average_rank;
    }
    tie_term += t * t * t - t;
    i = j;
  }

  const double dna = static_cast<double>(na);
  const double dnb = static_cast<double>(nb);
  const double dn = static_cast<double>(total);
  const double u_a = rank_sum_a - dna * (dna + 1.0) / 2.0;
  const double u_b = dna * dnb - u_a;

  TestResult result;
  result.u_statistic = std::min(u_a, u_b);
  result.small_sample = na < kNormalApproximationMinSize ||
                        nb < kNormalApproximationMinSize;
  const double mean = dna * dnb / 2.0;
  const double variance =
      dna * dnb / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
  if (!(variance > 0.0)) {
    result.p_value = 1.0;
  } else {
    const double deviation =
        std::max(0.0, std::abs(result.u_statistic - mean) - 0.5);
    const double z = deviation / std::sqrt(variance);
    result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  }
  result.stars = StarsFor(result.p_value);
  return result;
}

TestResult ZeroAtomTest(std::span<const double> sample) {
  const std::vector<double> zeros(sample.size(), 0.0);
  return MannWhitneyU(sample, zeros);
}

RelevanceVerdict PruneRelevant(
    const InteractionGraph& graph,
    const std::vector<std::vector<double>>& samples) {
  if (samples.size() != static_cast<std::size_t>(graph.num_players())) {
    throw std::invalid_argument("need one sample per player");
  }
  RelevanceVerdict verdict;
  Coalition keep;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const TestResult test = ZeroAtomTest(samples[i]);
    const bool relevant = test.p_value < kRelevanceThreshold;
    verdict.tests.push_back(test);
    verdict.relevant.push_back(relevant);
    if (relevant) {
      verdict.kept.push_back(static_cast<PlayerId>(i));
      keep = keep.With(static_cast<PlayerId>(i));
    }
  }
  verdict.pruned = graph.Induced(keep);
  return verdict;
}

}  // namespace myerson
