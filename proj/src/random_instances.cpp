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

#include "nonum/random_instances.hpp"

#include <algorithm>
#include <string>

namespace nonum::random {
namespace {

const std::vector<std::string> kInputNames = {"a", "b", "c", "d", "e"};
const std::vector<std::string> kOutputNames = {"x", "y", "z", "w", "v"};

}  // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

bool Rng::chance(double p) { return std::bernoulli_distribution(p)(engine_); }

Rng Rng::fork() { return Rng(engine_()); }

Multiset random_multiset(Rng& rng, std::size_t max_cardinality, std::int64_t max_value,
                         std::size_t min_cardinality) {
  const auto n = static_cast<std::size_t>(rng.uniform(min_cardinality, max_cardinality));
  // Sometimes a narrow value range, giving many repeated values.
  const std::int64_t hi = rng.chance(0.3) ? std::min<std::int64_t>(max_value, 5) : max_value;
  std::vector<Integer> values;
  for (std::size_t i = 0; i < n; ++i) values.emplace_back(rng.uniform(0, hi));
  return Multiset::from_values(values);
}

mealy::MealyMachine random_machine(Rng& rng, const MachineShape& shape) {
  const auto num_states = static_cast<std::size_t>(rng.uniform(1, shape.max_states));
  const auto num_in = static_cast<std::size_t>(rng.uniform(1, shape.max_input_letters));
  const auto num_out = static_cast<std::size_t>(rng.uniform(1, shape.max_output_letters));
  std::vector<std::string> states;
  for (std::size_t i = 0; i < num_states; ++i) states.push_back("q" + std::to_string(i));
  std::vector<mealy::Letter> input(kInputNames.begin(), kInputNames.begin() + num_in);
  std::vector<mealy::Letter> output(kOutputNames.begin(), kOutputNames.begin() + num_out);
  if (shape.empty_input && rng.chance(0.4)) input.push_back(mealy::kEmpty);
  if (shape.empty_output && rng.chance(0.5)) output.push_back(mealy::kEmpty);

  const auto num_transitions = static_cast<std::size_t>(rng.uniform(1, shape.max_transitions));
  std::vector<mealy::Transition> transitions;
  for (std::size_t attempt = 0; attempt < 4 * num_transitions; ++attempt) {
    if (transitions.size() == num_transitions) break;
    mealy::Transition t{states[rng.index(states.size())], input[rng.index(input.size())],
                        states[rng.index(states.size())], output[rng.index(output.size())]};
    if (std::find(transitions.begin(), transitions.end(), t) == transitions.end()) {
      transitions.push_back(std::move(t));
    }
  }
  return mealy::MealyMachine(states, states[0], input, output, transitions);
}

std::vector<std::size_t> random_computation(Rng& rng, const mealy::MealyMachine& machine,
                                            std::size_t max_steps) {
  std::vector<std::size_t> path;
  std::size_t state = machine.start_index();
  const auto steps = static_cast<std::size_t>(rng.uniform(0, max_steps));
  while (path.size() < steps) {
    const auto& out = machine.out_arcs(state);
    if (out.empty()) break;
    const std::size_t t = out[rng.index(out.size())];
    path.push_back(t);
    state = machine.arcs()[t].to;
  }
  return path;
}

mealy::CensusRequirement random_census(Rng& rng, const mealy::MealyMachine& machine,
                                       std::uint64_t max_total) {
  mealy::CensusRequirement census;
  const auto& letters = machine.output_letters();
  if (rng.chance(0.5)) {
    for (std::size_t t : random_computation(rng, machine, 2 * max_total + 2)) {
      const int w = machine.arcs()[t].write;
      if (w == mealy::MealyMachine::kNone) continue;
      if (census.total() == max_total) break;
      census.add(letters[w]);
    }
    return census;
  }
  const auto total = static_cast<std::uint64_t>(rng.uniform(0, max_total));
  for (std::uint64_t i = 0; i < total; ++i) {
    if (letters.empty() || rng.chance(0.05)) {
      census.add("u");
    } else {
      census.add(letters[rng.index(letters.size())]);
    }
  }
  return census;
}

WordInstance random_word_instance(Rng& rng, const mealy::MealyMachine& machine,
                                  std::size_t max_length, std::uint64_t max_total) {
  const auto& in = machine.input_letters();
  const auto& out = machine.output_letters();
  const double roll = rng.uniform(0, 99) / 100.0;
  if (roll < 0.6) {
    WordInstance inst;
    std::size_t state = machine.start_index();
    for (std::size_t step = 0; step < 4 * max_length + 4; ++step) {
      const auto& arcs = machine.out_arcs(state);
      if (arcs.empty() || rng.chance(0.1)) break;
      const auto& arc = machine.arcs()[arcs[rng.index(arcs.size())]];
      if (arc.read != mealy::MealyMachine::kNone && inst.word.size() == max_length) break;
      if (arc.write != mealy::MealyMachine::kNone && inst.census.total() == max_total) break;
      if (arc.read != mealy::MealyMachine::kNone) inst.word.push_back(in[arc.read]);
      if (arc.write != mealy::MealyMachine::kNone) inst.census.add(out[arc.write]);
      state = arc.to;
    }
    if (roll < 0.4) return inst;
    // Perturb one coordinate of an attainable instance.
    if (!out.empty() && rng.chance(0.5)) {
      const auto& letter = out[rng.index(out.size())];
      const std::uint64_t c = inst.census.count(letter);
      if (c > 0 && rng.chance(0.5)) {
        inst.census.set(letter, c - 1);
      } else if (inst.census.total() < max_total) {
        inst.census.set(letter, c + 1);
      }
    } else if (!inst.word.empty() && !in.empty()) {
      inst.word[rng.index(inst.word.size())] = in[rng.index(in.size())];
    }
    return inst;
  }
  WordInstance inst;
  if (!in.empty()) {
    const auto length = static_cast<std::size_t>(rng.uniform(0, max_length));
    for (std::size_t i = 0; i < length; ++i) inst.word.push_back(in[rng.index(in.size())]);
  }
  const auto total = static_cast<std::uint64_t>(rng.uniform(0, max_total));
  for (std::uint64_t i = 0; i < total && !out.empty(); ++i) {
    inst.census.add(out[rng.index(out.size())]);
  }
  return inst;
}

reductions::MulticoloredGraph random_multicolored_graph(Rng& rng, std::size_t k,
                                                        std::size_t max_per_class) {
  while (true) {
    reductions::MulticoloredGraph graph;
    for (std::size_t i = 0; i < k; ++i) {
      const auto size = static_cast<std::size_t>(rng.uniform(1, max_per_class));
      std::vector<std::string> cls;
      for (std::size_t p = 0; p < size; ++p) {
        cls.push_back(std::string(1, static_cast<char>('a' + i)) + std::to_string(p + 1));
      }
      graph.classes.push_back(std::move(cls));
    }
    const double density = rng.uniform(25, 90) / 100.0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (const auto& u : graph.classes[i]) {
          for (const auto& v : graph.classes[j]) {
            if (rng.chance(density)) graph.edges.emplace_back(u, v);
          }
        }
      }
    }
    // Shuffled edge order.
    for (std::size_t e = graph.edges.size(); e > 1; --e) {
      std::swap(graph.edges[e - 1], graph.edges[rng.index(e)]);
      if (rng.chance(0.5)) std::swap(graph.edges[e - 1].first, graph.edges[e - 1].second);
    }
    try {
      reductions::validate(graph);
      return graph;
    } catch (const reductions::MalformedGraph&) {
    }
  }
}

mealy::MealyMachine random_simple_digraph(Rng& rng, std::size_t max_vertices) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, max_vertices));
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back("v" + std::to_string(i));
  const double density = rng.uniform(20, 70) / 100.0;
  std::vector<mealy::Transition> transitions;
  for (std::size_t u = 0; u < n; ++u) {
    bool any = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (rng.chance(u == v ? density / 3 : density)) {
        transitions.push_back({states[u], "a", states[v], "x"});
        any = true;
      }
    }
    if (!any) {
      const std::size_t v = rng.index(n);
      transitions.push_back({states[u], "a", states[v], "x"});
    }
  }
  return mealy::MealyMachine(states, states[0], {"a"}, {"x"}, transitions);
}

}  // namespace nonum::random
