// Copyright 2026 The nonum Authors.
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

#include <algorithm>
#include <set>

#include "nonum/reductions.hpp"

namespace nonum::reductions {

Multiset subsetsum_to_partition(const Multiset& a, const Integer& s) {
  const Integer total = a.total();
  if (s < 0 || s > total) {
    throw TargetOutOfRange("target " + s.str() + " is outside [0, " + total.str() + "]");
  }
  const Integer target = 2 * s <= total ? s : total - s;
  Multiset out = a;
  out.add(total - 2 * target);
  return out;
}

EwmmInstance heat_to_ewmm(const HeatInstance& heat) {
  const std::uint64_t k = heat.threshold;
  std::uint64_t jobs = 0;
  for (const auto& [level, count] : heat.job_census) {
    if (level > 2 * k) {
      throw std::invalid_argument("heat level " + std::to_string(level) + " exceeds 2k = " +
                                  std::to_string(2 * k));
    }
    jobs += count;
  }
  if (jobs > heat.deadline) {
    throw std::invalid_argument(std::to_string(jobs) + " jobs do not fit before deadline " +
                                std::to_string(heat.deadline));
  }

  auto state = [](std::uint64_t t) { return "T" + std::to_string(t); };
  std::vector<std::string> states;
  for (std::uint64_t t = 0; t <= k; ++t) states.push_back(state(t));
  std::vector<std::string> output;
  for (std::uint64_t h = 0; h <= 2 * k; ++h) output.push_back(std::to_string(h));

  std::vector<mealy::Transition> transitions;
  for (std::uint64_t t = 0; t <= k; ++t) {
    for (std::uint64_t h = 0; h <= 2 * k; ++h) {
      const std::uint64_t next = (t + h + 1) / 2;  // ceil((t + h) / 2)
      if (next > k) continue;
      transitions.push_back({state(t), "tick", state(next), std::to_string(h)});
    }
  }

  CensusRequirement census;
  for (const auto& [level, count] : heat.job_census) census.add(std::to_string(level), count);
  census.add("0", heat.deadline - jobs);
  return {MealyMachine(states, state(0), {"tick"}, output, transitions), census};
}

GwmmInstance splits_to_gwmm(const SplitsInstance& splits) {
  std::uint64_t jobs = 0;
  std::uint64_t longest = 0;
  for (const auto& [length, count] : splits.job_census) {
    if (length == 0) throw std::invalid_argument("job lengths must be positive");
    jobs += count;
    if (count > 0) longest = std::max(longest, length);
  }
  if (jobs != splits.gaps.size()) {
    throw CensusSizeMismatch("census asks for " + std::to_string(jobs) + " jobs but there are " +
                             std::to_string(splits.gaps.size()) + " gaps");
  }
  std::set<std::uint64_t> gap_values;
  for (std::uint64_t g : splits.gaps) {
    if (g == 0) throw std::invalid_argument("gaps must be positive");
    gap_values.insert(g);
  }

  const std::string overflow = "overflow";
  auto lag = [](std::uint64_t d) { return "d" + std::to_string(d); };
  auto after = [&](std::uint64_t d) { return d <= longest ? lag(d) : overflow; };

  std::vector<std::string> states;
  for (std::uint64_t d = 0; d <= longest; ++d) states.push_back(lag(d));
  states.push_back(overflow);
  std::vector<std::string> input;
  for (std::uint64_t g : gap_values) input.push_back(std::to_string(g));
  std::vector<std::string> output;
  for (std::uint64_t len = 1; len <= longest; ++len) output.push_back(std::to_string(len));

  std::vector<mealy::Transition> transitions;
  for (std::uint64_t d = 0; d <= longest; ++d) {
    for (std::uint64_t g : gap_values) {
      const std::string gap = std::to_string(g);
      if (g <= longest) transitions.push_back({lag(d), gap, after(d + g), gap});
      // With d = 0 both processors stop at the deadline; one move covers both.
      if (d > 0 && d + g <= longest) {
        transitions.push_back({lag(d), gap, lag(g), std::to_string(d + g)});
      }
    }
  }
  for (std::uint64_t g : gap_values) {
    if (g <= longest) {
      transitions.push_back({overflow, std::to_string(g), overflow, std::to_string(g)});
    }
  }

  Word word;
  for (std::uint64_t g : splits.gaps) word.push_back(std::to_string(g));
  CensusRequirement census;
  for (const auto& [length, count] : splits.job_census) census.add(std::to_string(length), count);
  return {MealyMachine(states, lag(0), input, output, transitions), word, census};
}

}  // namespace nonum::reductions
