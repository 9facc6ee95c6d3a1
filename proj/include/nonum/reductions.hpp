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

#ifndef NONUM_REDUCTIONS_HPP_
#define NONUM_REDUCTIONS_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nonum/mealy.hpp"
#include "nonum/multiset.hpp"

namespace nonum::reductions {

using mealy::CensusRequirement;
using mealy::MealyMachine;
using mealy::Word;

struct GwmmInstance {
  MealyMachine machine;
  Word word;
  CensusRequirement census;
};

struct EwmmInstance {
  MealyMachine machine;
  CensusRequirement census;
};

class TargetOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Subset Sum (a, s) to Partition. For 2s <= total the value total - 2s is
// added; otherwise the complement target total - s is used, which adds
// 2s - total. Requires 0 <= s <= total.
Multiset subsetsum_to_partition(const Multiset& a, const Integer& s);

// ---------------------------------------------------------------------------
// Multicolored clique to the given-word census problem. The machine has one
// part per color class and depends only on k; the graph is encoded in the
// word, and the census ties the parts together.
// ---------------------------------------------------------------------------

// Vertices are named; classes[i] is color class i + 1. Edge order matters:
// it fixes the numbering of the edges between every pair of classes.
struct MulticoloredGraph {
  std::vector<std::vector<std::string>> classes;
  std::vector<std::pair<std::string, std::string>> edges;

  std::size_t k() const { return classes.size(); }
};

class MalformedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws MalformedGraph for k < 2, repeated or unknown vertices, repeated
// edges, edges inside a class, or a disconnected graph.
void validate(const MulticoloredGraph& graph);

GwmmInstance mcc_to_gwmm(const MulticoloredGraph& graph);

// ---------------------------------------------------------------------------
// Heat-sensitive scheduling to the exists-word census problem.
// ---------------------------------------------------------------------------

// Unit jobs with heat levels 0..2k; temperature moves to ceil((T + H) / 2)
// and may never exceed k. Idle slots have heat 0. The processor starts cold
// (temperature 0).
struct HeatInstance {
  std::uint64_t threshold = 0;                        // k
  std::map<std::uint64_t, std::uint64_t> job_census;  // heat level -> jobs
  std::uint64_t deadline = 0;
};

// States "T0".."Tk"; output letter "H" for heat level H; one dummy input
// letter. Idle time becomes extra heat-0 letters so the census totals the
// deadline. Throws std::invalid_argument for a heat level above 2k or more
// jobs than slots.
EwmmInstance heat_to_ewmm(const HeatInstance& heat);

// ---------------------------------------------------------------------------
// Two-processor splits game to the given-word census problem.
// ---------------------------------------------------------------------------

struct SplitsInstance {
  std::vector<std::uint64_t> gaps;                    // the word read by Nature
  std::map<std::uint64_t, std::uint64_t> job_census;  // job length -> count
};

class CensusSizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The state is the lag d of the idle processor behind the current deadline
// ("d0".."d<Lmax>") plus an absorbing "overflow" state once the lag exceeds
// the longest required job. On gap g the player either extends the leading
// processor (job g, lag d + g) or the lagging one (job d + g, lag g).
// Throws CensusSizeMismatch unless the census counts sum to |gaps|, and
// std::invalid_argument for a zero gap or job length.
GwmmInstance splits_to_gwmm(const SplitsInstance& splits);

}  // namespace nonum::reductions

#endif  // NONUM_REDUCTIONS_HPP_
