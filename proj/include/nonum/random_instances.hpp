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

#ifndef NONUM_RANDOM_INSTANCES_HPP_
#define NONUM_RANDOM_INSTANCES_HPP_

// Seeded generators for small instances. Every random choice in the toolkit
// goes through Rng.

#include <cstdint>
#include <random>
#include <vector>

#include "nonum/mealy.hpp"
#include "nonum/multiset.hpp"
#include "nonum/reductions.hpp"

namespace nonum::random {

inline constexpr std::uint64_t kDefaultSeed = 42;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, size - 1)); }
  bool chance(double p);
  // Independent generator for one work item, so parallel loops stay
  // reproducible.
  Rng fork();

 private:
  std::mt19937_64 engine_;
};

Multiset random_multiset(Rng& rng, std::size_t max_cardinality = 12, std::int64_t max_value = 20,
                         std::size_t min_cardinality = 0);

struct MachineShape {
  std::size_t max_states = 3;
  std::size_t max_input_letters = 3;
  std::size_t max_output_letters = 3;
  std::size_t max_transitions = 8;
  bool empty_input = true;   // may declare the empty input letter
  bool empty_output = true;  // may declare the empty output letter
};

mealy::MealyMachine random_machine(Rng& rng, const MachineShape& shape = {});

// A random computation from the start state: transition indices of length at
// most max_steps, stopping early at a state without transitions.
std::vector<std::size_t> random_computation(Rng& rng, const mealy::MealyMachine& machine,
                                            std::size_t max_steps);

// Either the census of a random computation or random counts over the output
// letters (occasionally a letter the machine cannot write). The total never
// exceeds max_total.
mealy::CensusRequirement random_census(Rng& rng, const mealy::MealyMachine& machine,
                                       std::uint64_t max_total);

struct WordInstance {
  mealy::Word word;
  mealy::CensusRequirement census;
};

// Word and census for the given-word problem: taken from a random
// computation, perturbed, or drawn independently.
WordInstance random_word_instance(Rng& rng, const mealy::MealyMachine& machine,
                                  std::size_t max_length, std::uint64_t max_total);

// Connected, with edges only between classes.
reductions::MulticoloredGraph random_multicolored_graph(Rng& rng, std::size_t k = 3,
                                                        std::size_t max_per_class = 3);

// A machine whose underlying digraph has at most one arc per ordered pair.
mealy::MealyMachine random_simple_digraph(Rng& rng, std::size_t max_vertices = 6);

}  // namespace nonum::random

#endif  // NONUM_RANDOM_INSTANCES_HPP_
