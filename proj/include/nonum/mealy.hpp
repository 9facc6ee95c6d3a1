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

#ifndef NONUM_MEALY_HPP_
#define NONUM_MEALY_HPP_

// Nondeterministic Mealy machines with an optional empty letter, output
// censuses, and the walk decomposition used by the exists-word solver.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nonum/integer.hpp"

namespace nonum::mealy {

using Letter = std::string;
using Word = std::vector<Letter>;

// The empty letter. It is an ordinary member of an alphabet when declared,
// and is written "_" in every text format.
inline const Letter kEmpty = "_";

struct Transition {
  std::string from;
  Letter read;
  std::string to;
  Letter write;

  friend bool operator==(const Transition&, const Transition&) = default;
};

class InvalidMachine : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MealyMachine {
 public:
  // Index form of a transition. `read` indexes input_letters() and `write`
  // indexes output_letters(); kNone marks the empty letter.
  struct Arc {
    std::size_t from;
    std::size_t to;
    int read;
    int write;
  };
  static constexpr int kNone = -1;

  // Throws InvalidMachine when the start state or a transition endpoint is
  // undeclared, a letter is outside its alphabet, or a state, letter or
  // transition is repeated.
  MealyMachine(std::vector<std::string> states, std::string start,
               std::vector<Letter> input_alphabet, std::vector<Letter> output_alphabet,
               std::vector<Transition> transitions);

  const std::vector<std::string>& states() const { return states_; }
  const std::string& start() const { return start_; }
  const std::vector<Letter>& input_alphabet() const { return input_alphabet_; }
  const std::vector<Letter>& output_alphabet() const { return output_alphabet_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  std::size_t num_states() const { return states_.size(); }
  std::size_t start_index() const { return start_index_; }
  std::optional<std::size_t> find_state(const std::string& name) const;
  std::size_t state_index(const std::string& name) const;

  // Non-empty letters in declaration order.
  const std::vector<Letter>& input_letters() const { return input_letters_; }
  const std::vector<Letter>& output_letters() const { return output_letters_; }
  int input_letter_index(const Letter& letter) const;   // kNone if absent
  int output_letter_index(const Letter& letter) const;  // kNone if absent
  bool input_has_empty() const { return input_has_empty_; }
  bool output_has_empty() const { return output_has_empty_; }

  const std::vector<Arc>& arcs() const { return arcs_; }
  // Transition indices leaving each state, in declaration order.
  const std::vector<std::size_t>& out_arcs(std::size_t state) const { return out_[state]; }

 private:
  std::vector<std::string> states_;
  std::string start_;
  std::vector<Letter> input_alphabet_;
  std::vector<Letter> output_alphabet_;
  std::vector<Transition> transitions_;

  std::size_t start_index_ = 0;
  std::unordered_map<std::string, std::size_t> state_index_;
  std::vector<Letter> input_letters_;
  std::vector<Letter> output_letters_;
  std::unordered_map<Letter, int> input_index_;
  std::unordered_map<Letter, int> output_index_;
  bool input_has_empty_ = false;
  bool output_has_empty_ = false;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

// Exact number of occurrences required for each non-empty output letter.
// Letters without an entry are required zero times; zero counts are not
// stored, so equality compares the requirement as a function.
class CensusRequirement {
 public:
  CensusRequirement() = default;
  CensusRequirement(std::initializer_list<std::pair<const Letter, std::uint64_t>> counts);

  // Throws std::invalid_argument for the empty letter.
  void set(const Letter& letter, std::uint64_t count);
  void add(const Letter& letter, std::uint64_t count = 1);

  std::uint64_t count(const Letter& letter) const;
  std::uint64_t total() const;
  const std::map<Letter, std::uint64_t>& counts() const { return counts_; }

  friend bool operator==(const CensusRequirement&, const CensusRequirement&) = default;

 private:
  std::map<Letter, std::uint64_t> counts_;
};

// Letter counts of a word; the empty letter is dropped.
CensusRequirement census_of(const Word& word);

// Splits every transition (from, read) -> (to, write) into
// (from, read) -> (t_i, write) followed by (t_i, _) -> (to, _) through a fresh
// state. Fresh states are named "t<i>" after the transition's declaration
// index (primed until unique). Subdivided transition 2i is the first half of
// transition i and 2i + 1 the second half. The empty letter is added to both
// alphabets. The result has at most one transition per ordered state pair.
MealyMachine subdivide(const MealyMachine& machine);

class IllegalChoice : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputNotConsumed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Replays a computation. Each choice is a transition index that must leave
// the current state and read either the empty letter or the next unread input
// letter. Returns the non-empty output letters.
Word run(const MealyMachine& machine, const Word& input, std::span<const std::size_t> choices);

// Input letters consumed by a transition sequence (empty reads dropped).
Word input_of(const MealyMachine& machine, std::span<const std::size_t> transitions);

// A walk written as a base walk plus anchored closed walks, each executed
// `count` times when the base walk first reaches its anchor.
struct Loop {
  std::size_t anchor;
  std::vector<std::size_t> cycle;
  Integer count;
};

struct WalkDecomposition {
  std::vector<std::size_t> base_walk;
  std::vector<Loop> loops;
};

class NotAWalk : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rewrites a walk from the start state as a base walk of length at most
// |S|^2 plus simple cycles (length at most |S|) anchored on the base walk.
// Every transition is used exactly as often as in the input walk. Throws
// NotAWalk when consecutive transitions do not chain from the start state.
WalkDecomposition decompose_walk(const MealyMachine& machine,
                                 std::span<const std::size_t> walk);

// Concatenates the base walk with every loop spliced in at the first visit of
// its anchor. Throws NotAWalk if an anchor is never visited.
std::vector<std::size_t> expand(const MealyMachine& machine,
                                const WalkDecomposition& decomposition);

// Times each transition index is used.
std::map<std::size_t, Integer> arc_census(std::span<const std::size_t> walk);
std::map<std::size_t, Integer> arc_census(const WalkDecomposition& decomposition);

}  // namespace nonum::mealy

#endif  // NONUM_MEALY_HPP_
