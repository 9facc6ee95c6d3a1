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

#ifndef NONUM_ORACLE_HPP_
#define NONUM_ORACLE_HPP_

// Exhaustive reference solvers, written from the problem statements alone.
// They answer yes/no only.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nonum/mealy.hpp"
#include "nonum/multiset.hpp"
#include "nonum/reductions.hpp"

namespace nonum::oracle {

class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Caps {
  std::size_t cardinality = 20;      // multiset elements, counted with repetition
  std::size_t states = 64;
  std::size_t word_length = 64;
  std::uint64_t census_total = 32;
  std::size_t vertices_per_class = 16;
  std::size_t gaps = 24;
};

bool brute_subset_sum(const Multiset& a, const Integer& s, const Caps& caps = {});
bool brute_partition(const Multiset& a, const Caps& caps = {});
// Throws std::invalid_argument when |a| is not a multiple of three.
bool brute_3partition(const Multiset& a, const Caps& caps = {});
bool brute_num3dm(const Multiset& a, const Multiset& b, const Multiset& c, const Integer& s,
                  const Caps& caps = {});
bool brute_nmts(const Multiset& a, const Multiset& b, const Multiset& s, const Caps& caps = {});

bool brute_gwmm(const mealy::MealyMachine& machine, const mealy::Word& word,
                const mealy::CensusRequirement& census, const Caps& caps = {});
bool brute_ewmm(const mealy::MealyMachine& machine, const mealy::CensusRequirement& census,
                const Caps& caps = {});

// One vertex per class, pairwise adjacent.
bool brute_mcc_clique(const reductions::MulticoloredGraph& graph, const Caps& caps = {});
// Starting cold, can every job run within the deadline while the temperature
// never exceeds the threshold? An idle slot has heat 0.
bool brute_heat_schedule(const reductions::HeatInstance& heat, const Caps& caps = {});
// Can the two-processor game be played so that the job lengths are exactly
// the census?
bool brute_splits_game(const reductions::SplitsInstance& splits, const Caps& caps = {});

}  // namespace nonum::oracle

#endif  // NONUM_ORACLE_HPP_
