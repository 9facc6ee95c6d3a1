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

#include "nonum/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace nonum::oracle {
namespace {

using Counts = std::map<Integer, Integer>;

Counts counts_of(const Multiset& m) {
  Counts out;
  for (const auto& e : m.entries()) out[e.value] += e.multiplicity;
  return out;
}

void check_cardinality(const Multiset& m, const Caps& caps) {
  if (m.cardinality() > caps.cardinality) {
    throw InstanceTooLarge("multiset has " + to_string(m.cardinality()) +
                           " elements, cap is " + std::to_string(caps.cardinality));
  }
}

void take(Counts& counts, const Integer& value) {
  if (--counts[value] == 0) counts.erase(value);
}

// Repeatedly removes the smallest remaining value of `first` together with a
// partner from `second` and the element of `third` that `third_for` names.
bool match_triples(Counts first, Counts second, Counts third,
                   const std::function<std::optional<Integer>(const Integer&, const Integer&)>&
                       third_for) {
  if (first.empty()) return second.empty() && third.empty();
  const Integer a = first.begin()->first;
  take(first, a);
  for (const auto& [b, count_b] : second) {
    const std::optional<Integer> c = third_for(a, b);
    if (!c || !third.contains(*c)) continue;
    Counts s = second;
    Counts t = third;
    take(s, b);
    take(t, *c);
    if (match_triples(first, s, t, third_for)) return true;
  }
  return false;
}

bool split_into_triples(Counts counts, const Integer& s) {
  if (counts.empty()) return true;
  const Integer x = counts.begin()->first;
  take(counts, x);
  for (const auto& [y, count_y] : counts) {
    const Integer z = s - x - y;
    if (z < y) break;
    Counts rest = counts;
    take(rest, y);
    if (!rest.contains(z)) continue;
    take(rest, z);
    if (split_into_triples(rest, s)) return true;
  }
  return false;
}

struct MachineView {
  std::map<std::string, std::vector<const mealy::Transition*>> out;
  std::vector<mealy::Letter> letters;  // census letters, in map order
  std::vector<std::uint64_t> target;
};

MachineView view(const mealy::MealyMachine& machine, const mealy::CensusRequirement& census,
                 const Caps& caps) {
  if (machine.states().size() > caps.states) throw InstanceTooLarge("too many states");
  if (census.total() > caps.census_total) throw InstanceTooLarge("census total too large");
  MachineView v;
  for (const auto& t : machine.transitions()) v.out[t.from].push_back(&t);
  for (const auto& [letter, count] : census.counts()) {
    v.letters.push_back(letter);
    v.target.push_back(count);
  }
  return v;
}

// Applies a written letter to a partial census; false if it overshoots.
bool write(const MachineView& v, std::vector<std::uint64_t>& partial,
           const mealy::Letter& letter) {
  if (letter == mealy::kEmpty) return true;
  auto it = std::find(v.letters.begin(), v.letters.end(), letter);
  if (it == v.letters.end()) return false;
  const std::size_t j = it - v.letters.begin();
  return ++partial[j] <= v.target[j];
}

}  // namespace

bool brute_subset_sum(const Multiset& a, const Integer& s, const Caps& caps) {
  check_cardinality(a, caps);
  const auto& entries = a.entries();
  std::vector<Integer> pick(entries.size(), 0);
  while (true) {
    Integer sum = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) sum += pick[i] * entries[i].value;
    if (sum == s) return true;
    std::size_t i = 0;
    while (i < entries.size() && pick[i] == entries[i].multiplicity) pick[i++] = 0;
    if (i == entries.size()) return false;
    ++pick[i];
  }
}

bool brute_partition(const Multiset& a, const Caps& caps) {
  check_cardinality(a, caps);
  const std::vector<Integer> values = a.expand();
  Integer total = 0;
  for (const auto& v : values) total += v;
  const std::uint64_t subsets = std::uint64_t{1} << values.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Integer side = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (mask >> i & 1) side += values[i];
    }
    if (2 * side == total) return true;
  }
  return false;
}

bool brute_3partition(const Multiset& a, const Caps& caps) {
  check_cardinality(a, caps);
  if (a.cardinality() % 3 != 0) throw std::invalid_argument("size is not a multiple of 3");
  if (a.empty()) return true;
  const Integer n = a.cardinality() / 3;
  if (a.total() % n != 0) return false;
  return split_into_triples(counts_of(a), a.total() / n);
}

bool brute_num3dm(const Multiset& a, const Multiset& b, const Multiset& c, const Integer& s,
                  const Caps& caps) {
  check_cardinality(a, caps);
  if (a.cardinality() != b.cardinality() || a.cardinality() != c.cardinality()) return false;
  return match_triples(counts_of(a), counts_of(b), counts_of(c),
                       [&](const Integer& x, const Integer& y) -> std::optional<Integer> {
                         return s - x - y;
                       });
}

bool brute_nmts(const Multiset& a, const Multiset& b, const Multiset& s, const Caps& caps) {
  check_cardinality(a, caps);
  if (a.cardinality() != b.cardinality() || a.cardinality() != s.cardinality()) return false;
  return match_triples(counts_of(a), counts_of(b), counts_of(s),
                       [](const Integer& x, const Integer& y) -> std::optional<Integer> {
                         return x + y;
                       });
}

bool brute_gwmm(const mealy::MealyMachine& machine, const mealy::Word& word,
                const mealy::CensusRequirement& census, const Caps& caps) {
  if (word.size() > caps.word_length) throw InstanceTooLarge("word too long");
  const MachineView v = view(machine, census, caps);
  using Node = std::tuple<std::string, std::size_t, std::vector<std::uint64_t>>;
  std::set<Node> visited;
  std::vector<Node> stack{{machine.start(), 0, std::vector<std::uint64_t>(v.letters.size(), 0)}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(node).second) continue;
    const auto& [state, position, partial] = node;
    if (position == word.size() && partial == v.target) return true;
    auto it = v.out.find(state);
    if (it == v.out.end()) continue;
    for (const mealy::Transition* t : it->second) {
      std::size_t next = position;
      if (t->read != mealy::kEmpty) {
        if (position == word.size() || word[position] != t->read) continue;
        ++next;
      }
      std::vector<std::uint64_t> p = partial;
      if (!write(v, p, t->write)) continue;
      stack.emplace_back(t->to, next, std::move(p));
    }
  }
  return false;
}

bool brute_ewmm(const mealy::MealyMachine& machine, const mealy::CensusRequirement& census,
                const Caps& caps) {
  const MachineView v = view(machine, census, caps);
  using Node = std::pair<std::string, std::vector<std::uint64_t>>;
  std::set<Node> visited;
  std::vector<Node> queue{{machine.start(), std::vector<std::uint64_t>(v.letters.size(), 0)}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Node node = queue[head];
    if (!visited.insert(node).second) continue;
    if (node.second == v.target) return true;
    auto it = v.out.find(node.first);
    if (it == v.out.end()) continue;
    for (const mealy::Transition* t : it->second) {
      std::vector<std::uint64_t> p = node.second;
      if (!write(v, p, t->write)) continue;
      Node next{t->to, std::move(p)};
      if (!visited.contains(next)) queue.push_back(std::move(next));
    }
  }
  return false;
}

bool brute_mcc_clique(const reductions::MulticoloredGraph& graph, const Caps& caps) {
  for (const auto& cls : graph.classes) {
    if (cls.size() > caps.vertices_per_class) throw InstanceTooLarge("color class too large");
  }
  std::set<std::pair<std::string, std::string>> adjacent;
  for (const auto& [u, v] : graph.edges) {
    adjacent.emplace(u, v);
    adjacent.emplace(v, u);
  }
  const std::size_t k = graph.classes.size();
  std::vector<std::string> chosen;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == k) return true;
    for (const auto& v : graph.classes[i]) {
      bool ok = true;
      for (const auto& u : chosen) ok = ok && adjacent.contains({u, v});
      if (!ok) continue;
      chosen.push_back(v);
      if (extend(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(0);
}

bool brute_heat_schedule(const reductions::HeatInstance& heat, const Caps& caps) {
  std::vector<std::uint64_t> levels;
  std::vector<std::uint64_t> jobs;
  std::uint64_t total = 0;
  for (const auto& [level, count] : heat.job_census) {
    if (count == 0) continue;
    levels.push_back(level);
    jobs.push_back(count);
    total += count;
  }
  if (total > caps.census_total) throw InstanceTooLarge("too many jobs");
  if (total > heat.deadline) return false;
  const std::uint64_t k = heat.threshold;
  using Node = std::tuple<std::uint64_t, std::vector<std::uint64_t>, std::uint64_t>;
  std::set<Node> visited;
  std::vector<Node> queue{{0, jobs, heat.deadline}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [temperature, left, time] = queue[head];
    if (std::all_of(left.begin(), left.end(), [](std::uint64_t n) { return n == 0; })) {
      return true;
    }
    if (time == 0) continue;
    auto push = [&](std::uint64_t next_temperature, std::vector<std::uint64_t> next_left) {
      if (next_temperature > k) return;
      Node next{next_temperature, std::move(next_left), time - 1};
      if (visited.insert(next).second) queue.push_back(std::move(next));
    };
    push((temperature + 1) / 2, left);
    for (std::size_t j = 0; j < levels.size(); ++j) {
      if (left[j] == 0) continue;
      std::vector<std::uint64_t> next = left;
      --next[j];
      push((temperature + levels[j] + 1) / 2, std::move(next));
    }
  }
  return false;
}

bool brute_splits_game(const reductions::SplitsInstance& splits, const Caps& caps) {
  if (splits.gaps.size() > caps.gaps) throw InstanceTooLarge("too many gaps");
  std::map<std::uint64_t, std::uint64_t> need;
  for (const auto& [length, count] : splits.job_census) {
    if (count > 0) need[length] = count;
  }
  std::map<std::uint64_t, std::uint64_t> have;
  std::function<bool(std::size_t, std::uint64_t, std::uint64_t, std::uint64_t)> play =
      [&](std::size_t step, std::uint64_t deadline, std::uint64_t stop0, std::uint64_t stop1) {
        if (step == splits.gaps.size()) return have == need;
        const std::uint64_t next = deadline + splits.gaps[step];
        for (int processor = 0; processor < 2; ++processor) {
          const std::uint64_t stop = processor == 0 ? stop0 : stop1;
          const std::uint64_t length = next - stop;
          auto it = need.find(length);
          auto held = have.find(length);
          if (it == need.end() || (held != have.end() && held->second == it->second)) continue;
          ++have[length];
          const bool won = processor == 0 ? play(step + 1, next, next, stop1)
                                          : play(step + 1, next, stop0, next);
          if (--have[length] == 0) have.erase(length);
          if (won) return true;
        }
        return false;
      };
  return play(0, 0, 0, 0);
}

}  // namespace nonum::oracle
