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

#include "nonum/mealy.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace nonum::mealy {

MealyMachine::MealyMachine(std::vector<std::string> states, std::string start,
                           std::vector<Letter> input_alphabet,
                           std::vector<Letter> output_alphabet,
                           std::vector<Transition> transitions)
    : states_(std::move(states)),
      start_(std::move(start)),
      input_alphabet_(std::move(input_alphabet)),
      output_alphabet_(std::move(output_alphabet)),
      transitions_(std::move(transitions)) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!state_index_.emplace(states_[i], i).second) {
      throw InvalidMachine("duplicate state '" + states_[i] + "'");
    }
  }
  auto start_it = state_index_.find(start_);
  if (start_it == state_index_.end()) {
    throw InvalidMachine("start state '" + start_ + "' is not declared");
  }
  start_index_ = start_it->second;

  for (const Letter& l : input_alphabet_) {
    if (l == kEmpty) {
      if (input_has_empty_) throw InvalidMachine("duplicate input letter '_'");
      input_has_empty_ = true;
      continue;
    }
    if (!input_index_.emplace(l, static_cast<int>(input_letters_.size())).second) {
      throw InvalidMachine("duplicate input letter '" + l + "'");
    }
    input_letters_.push_back(l);
  }
  for (const Letter& l : output_alphabet_) {
    if (l == kEmpty) {
      if (output_has_empty_) throw InvalidMachine("duplicate output letter '_'");
      output_has_empty_ = true;
      continue;
    }
    if (!output_index_.emplace(l, static_cast<int>(output_letters_.size())).second) {
      throw InvalidMachine("duplicate output letter '" + l + "'");
    }
    output_letters_.push_back(l);
  }

  out_.resize(states_.size());
  std::set<std::tuple<std::string, Letter, std::string, Letter>> seen;
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const Transition& t = transitions_[i];
    if (!seen.emplace(t.from, t.read, t.to, t.write).second) {
      throw InvalidMachine("duplicate transition " + t.from + " " + t.read + " -> " + t.to +
                           " " + t.write);
    }
    const auto from = find_state(t.from);
    const auto to = find_state(t.to);
    if (!from || !to) {
      throw InvalidMachine("transition " + std::to_string(i) + " uses an undeclared state");
    }
    Arc arc{*from, *to, kNone, kNone};
    if (t.read == kEmpty) {
      if (!input_has_empty_) throw InvalidMachine("transition reads '_' but '_' is not an input letter");
    } else {
      arc.read = input_letter_index(t.read);
      if (arc.read == kNone) throw InvalidMachine("unknown input letter '" + t.read + "'");
    }
    if (t.write == kEmpty) {
      if (!output_has_empty_) throw InvalidMachine("transition writes '_' but '_' is not an output letter");
    } else {
      arc.write = output_letter_index(t.write);
      if (arc.write == kNone) throw InvalidMachine("unknown output letter '" + t.write + "'");
    }
    arcs_.push_back(arc);
    out_[arc.from].push_back(i);
  }
}

std::optional<std::size_t> MealyMachine::find_state(const std::string& name) const {
  auto it = state_index_.find(name);
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MealyMachine::state_index(const std::string& name) const {
  auto index = find_state(name);
  if (!index) throw std::out_of_range("unknown state '" + name + "'");
  return *index;
}

int MealyMachine::input_letter_index(const Letter& letter) const {
  auto it = input_index_.find(letter);
  return it == input_index_.end() ? kNone : it->second;
}

int MealyMachine::output_letter_index(const Letter& letter) const {
  auto it = output_index_.find(letter);
  return it == output_index_.end() ? kNone : it->second;
}

CensusRequirement::CensusRequirement(
    std::initializer_list<std::pair<const Letter, std::uint64_t>> counts) {
  for (const auto& [letter, count] : counts) set(letter, count);
}

void CensusRequirement::set(const Letter& letter, std::uint64_t count) {
  if (letter == kEmpty) throw std::invalid_argument("the empty letter has no census entry");
  if (count == 0) {
    counts_.erase(letter);
  } else {
    counts_[letter] = count;
  }
}

void CensusRequirement::add(const Letter& letter, std::uint64_t count) {
  set(letter, this->count(letter) + count);
}

std::uint64_t CensusRequirement::count(const Letter& letter) const {
  auto it = counts_.find(letter);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t CensusRequirement::total() const {
  std::uint64_t sum = 0;
  for (const auto& [letter, count] : counts_) sum += count;
  return sum;
}

CensusRequirement census_of(const Word& word) {
  CensusRequirement census;
  for (const Letter& l : word) {
    if (l != kEmpty) census.add(l);
  }
  return census;
}

MealyMachine subdivide(const MealyMachine& machine) {
  std::vector<std::string> states = machine.states();
  std::set<std::string> taken(states.begin(), states.end());
  std::vector<Transition> transitions;
  for (std::size_t i = 0; i < machine.transitions().size(); ++i) {
    const Transition& t = machine.transitions()[i];
    std::string fresh = "t" + std::to_string(i);
    while (taken.count(fresh)) fresh += '\'';
    taken.insert(fresh);
    states.push_back(fresh);
    transitions.push_back({t.from, t.read, fresh, t.write});
    transitions.push_back({fresh, kEmpty, t.to, kEmpty});
  }
  std::vector<Letter> input = machine.input_alphabet();
  if (!machine.input_has_empty()) input.push_back(kEmpty);
  std::vector<Letter> output = machine.output_alphabet();
  if (!machine.output_has_empty()) output.push_back(kEmpty);
  return MealyMachine(std::move(states), machine.start(), std::move(input), std::move(output),
                      std::move(transitions));
}

Word run(const MealyMachine& machine, const Word& input, std::span<const std::size_t> choices) {
  std::size_t state = machine.start_index();
  std::size_t pos = 0;
  Word output;
  for (std::size_t step = 0; step < choices.size(); ++step) {
    const std::size_t choice = choices[step];
    if (choice >= machine.arcs().size()) {
      throw IllegalChoice("step " + std::to_string(step) + ": no transition " +
                          std::to_string(choice));
    }
    const auto& arc = machine.arcs()[choice];
    const Transition& t = machine.transitions()[choice];
    if (arc.from != state) {
      throw IllegalChoice("step " + std::to_string(step) + ": transition " +
                          std::to_string(choice) + " does not leave state " +
                          machine.states()[state]);
    }
    if (arc.read != MealyMachine::kNone) {
      if (pos >= input.size() || input[pos] != t.read) {
        throw IllegalChoice("step " + std::to_string(step) + ": transition " +
                            std::to_string(choice) + " reads '" + t.read +
                            "' which is not the next input letter");
      }
      ++pos;
    }
    if (arc.write != MealyMachine::kNone) output.push_back(t.write);
    state = arc.to;
  }
  if (pos != input.size()) {
    throw InputNotConsumed("computation stops after " + std::to_string(pos) + " of " +
                           std::to_string(input.size()) + " input letters");
  }
  return output;
}

Word input_of(const MealyMachine& machine, std::span<const std::size_t> transitions) {
  Word word;
  for (std::size_t t : transitions) {
    if (machine.arcs().at(t).read != MealyMachine::kNone) {
      word.push_back(machine.transitions()[t].read);
    }
  }
  return word;
}

WalkDecomposition decompose_walk(const MealyMachine& machine,
                                 std::span<const std::size_t> walk) {
  const auto& arcs = machine.arcs();
  std::vector<std::size_t> vertices{machine.start_index()};
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] >= arcs.size()) {
      throw NotAWalk("step " + std::to_string(i) + " names no transition");
    }
    if (arcs[walk[i]].from != vertices.back()) {
      throw NotAWalk("step " + std::to_string(i) + " does not continue from state " +
                     machine.states()[vertices.back()]);
    }
    vertices.push_back(arcs[walk[i]].to);
  }
  std::vector<std::size_t> edges(walk.begin(), walk.end());

  WalkDecomposition result;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> bucket;
  std::set<std::size_t> anchors;

  // Excise the simple cycle closed at the first repeated vertex, unless that
  // would drop the last visit of an existing anchor; rescan after each cut.
  // Every segment between first visits then ends up as a simple path, which
  // bounds the base walk by |S|^2.
  bool cut = true;
  while (cut) {
    cut = false;
    std::unordered_map<std::size_t, std::size_t> last;
    for (std::size_t j = 0; j < vertices.size() && !cut; ++j) {
      auto it = last.find(vertices[j]);
      if (it != last.end()) {
        const std::size_t i = it->second;
        std::set<std::size_t> interior(vertices.begin() + i + 1, vertices.begin() + j);
        const bool simple = interior.size() == j - i - 1 && !interior.count(vertices[j]);
        bool keeps_anchors = true;
        for (std::size_t u : interior) {
          if (!anchors.count(u)) continue;
          const bool elsewhere =
              std::find(vertices.begin(), vertices.begin() + i + 1, u) != vertices.begin() + i + 1 ||
              std::find(vertices.begin() + j, vertices.end(), u) != vertices.end();
          if (!elsewhere) keeps_anchors = false;
        }
        if (simple && keeps_anchors) {
          std::vector<std::size_t> cycle(edges.begin() + i, edges.begin() + j);
          std::vector<std::size_t> key = cycle;
          std::sort(key.begin(), key.end());
          const std::size_t anchor = vertices[i];
          auto [slot, inserted] = bucket.try_emplace({anchor, key}, result.loops.size());
          if (inserted) {
            result.loops.push_back({anchor, std::move(cycle), 0});
            anchors.insert(anchor);
          }
          result.loops[slot->second].count += 1;
          edges.erase(edges.begin() + i, edges.begin() + j);
          vertices.erase(vertices.begin() + i + 1, vertices.begin() + j + 1);
          cut = true;
          break;
        }
      }
      last[vertices[j]] = j;
    }
  }
  result.base_walk = std::move(edges);
  return result;
}

std::vector<std::size_t> expand(const MealyMachine& machine,
                                const WalkDecomposition& decomposition) {
  const auto& arcs = machine.arcs();
  std::vector<std::size_t> vertices{machine.start_index()};
  for (std::size_t e : decomposition.base_walk) vertices.push_back(arcs.at(e).to);

  std::vector<std::vector<const Loop*>> splice(vertices.size());
  for (const Loop& loop : decomposition.loops) {
    auto it = std::find(vertices.begin(), vertices.end(), loop.anchor);
    if (it == vertices.end()) {
      throw NotAWalk("loop anchor " + machine.states().at(loop.anchor) +
                     " is not on the base walk");
    }
    splice[static_cast<std::size_t>(it - vertices.begin())].push_back(&loop);
  }
  std::vector<std::size_t> walk;
  for (std::size_t pos = 0; pos < vertices.size(); ++pos) {
    for (const Loop* loop : splice[pos]) {
      for (Integer n = 0; n < loop->count; ++n) {
        walk.insert(walk.end(), loop->cycle.begin(), loop->cycle.end());
      }
    }
    if (pos < decomposition.base_walk.size()) walk.push_back(decomposition.base_walk[pos]);
  }
  return walk;
}

std::map<std::size_t, Integer> arc_census(std::span<const std::size_t> walk) {
  std::map<std::size_t, Integer> census;
  for (std::size_t e : walk) census[e] += 1;
  return census;
}

std::map<std::size_t, Integer> arc_census(const WalkDecomposition& decomposition) {
  std::map<std::size_t, Integer> census = arc_census(decomposition.base_walk);
  for (const Loop& loop : decomposition.loops) {
    if (loop.count == 0) continue;
    for (std::size_t e : loop.cycle) census[e] += loop.count;
  }
  return census;
}

}  // namespace nonum::mealy
