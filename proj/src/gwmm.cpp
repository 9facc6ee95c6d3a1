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

#include <limits>
#include <unordered_set>

#include "nonum/census_solvers.hpp"

namespace nonum::census {

// True entries of one input position, kept in discovery order so that the
// closure over same-position moves can run as a worklist.
struct GwmmTable::Layer {
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> bitmap;  // dense layout
  std::unordered_set<std::uint64_t> set;  // sparse layout

  bool insert(std::uint64_t key, bool dense) {
    if (dense) {
      std::uint64_t& word = bitmap[key / 64];
      const std::uint64_t mask = std::uint64_t{1} << (key % 64);
      if (word & mask) return false;
      word |= mask;
    } else if (!set.insert(key).second) {
      return false;
    }
    keys.push_back(key);
    return true;
  }

  bool contains(std::uint64_t key, bool dense) const {
    if (dense) return (bitmap[key / 64] >> (key % 64)) & 1U;
    return set.count(key) != 0;
  }
};

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("census table index space exceeds 64 bits");
  }
  return out;
}

// For every position and state: whether the rest of the word can still be
// read from there, and the fewest and most copies of each output letter such
// a completion writes. Maxima saturate at the target count.
struct SuffixBounds {
  std::vector<std::vector<bool>> alive;
  std::vector<std::vector<std::vector<std::uint64_t>>> low;
  std::vector<std::vector<std::vector<std::uint64_t>>> high;
};

SuffixBounds suffix_bounds(const MealyMachine& m, const std::vector<int>& letters,
                           const std::vector<std::uint64_t>& target) {
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  const std::size_t n = letters.size();
  const std::size_t S = m.num_states();
  const std::size_t sigma = target.size();
  SuffixBounds b;
  b.alive.assign(n + 1, std::vector<bool>(S, false));
  b.low.assign(n + 1, std::vector<std::vector<std::uint64_t>>(S, std::vector<std::uint64_t>(sigma, kInf)));
  b.high.assign(n + 1, std::vector<std::vector<std::uint64_t>>(S, std::vector<std::uint64_t>(sigma, 0)));

  // Relaxes `from` at position i through `arc` into (to, at) and reports a
  // change.
  auto relax = [&](std::size_t i, const MealyMachine::Arc& arc, std::size_t at) {
    if (!b.alive[at][arc.to]) return false;
    bool changed = !b.alive[i][arc.from];
    b.alive[i][arc.from] = true;
    for (std::size_t j = 0; j < sigma; ++j) {
      const std::uint64_t w = arc.write == static_cast<int>(j) ? 1 : 0;
      const std::uint64_t lo = b.low[at][arc.to][j] + w;
      const std::uint64_t hi = std::min(target[j], b.high[at][arc.to][j] + w);
      if (lo < b.low[i][arc.from][j]) {
        b.low[i][arc.from][j] = lo;
        changed = true;
      }
      if (hi > b.high[i][arc.from][j]) {
        b.high[i][arc.from][j] = hi;
        changed = true;
      }
    }
    return changed;
  };

  for (std::size_t i = n + 1; i-- > 0;) {
    if (i == n) {
      for (std::size_t s = 0; s < S; ++s) {
        b.alive[n][s] = true;
        std::fill(b.low[n][s].begin(), b.low[n][s].end(), 0);
      }
    } else {
      for (const auto& arc : m.arcs()) {
        if (arc.read != MealyMachine::kNone && arc.read == letters[i]) relax(i, arc, i + 1);
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& arc : m.arcs()) {
        if (arc.read == MealyMachine::kNone) changed = relax(i, arc, i) || changed;
      }
    }
  }
  return b;
}

}  // namespace

// Key layout: ((census index * P) + p) * |S| + state, where the census index
// is mixed radix with digit j in [0, c_j].
std::uint64_t GwmmTable::encode(std::size_t state, const std::vector<std::uint64_t>& partial,
                                std::size_t p) const {
  std::uint64_t key = state + num_states_ * p;
  for (std::size_t j = 0; j < partial.size(); ++j) key += partial[j] * letter_stride_[j];
  return key;
}

bool GwmmTable::has(std::size_t position, std::uint64_t key) const {
  return layers_[position]->contains(key, dense_);
}

GwmmTable GwmmTable::build(const MealyMachine& machine, const Word& word,
                           const CensusRequirement& census, const GwmmOptions& options) {
  GwmmTable table;
  table.machine_ = std::make_shared<const MealyMachine>(machine);
  table.word_ = word;
  const MealyMachine& m = *table.machine_;

  std::vector<int> letters;
  for (const auto& letter : word) {
    if (letter == mealy::kEmpty) {
      throw std::invalid_argument("the input word may not contain the empty letter");
    }
    letters.push_back(m.input_letter_index(letter));  // kNone: nothing can read it
  }
  for (const auto& [letter, count] : census.counts()) {
    if (m.output_letter_index(letter) == MealyMachine::kNone) table.feasible_census_ = false;
  }
  if (!table.feasible_census_) return table;

  const std::size_t sigma = m.output_letters().size();
  for (const auto& letter : m.output_letters()) table.target_.push_back(census.count(letter));
  table.num_states_ = m.num_states();
  table.num_p_ = m.num_states();
  std::uint64_t stride = checked_mul(table.num_states_, table.num_p_);
  for (std::size_t j = 0; j < sigma; ++j) {
    table.letter_stride_.push_back(stride);
    stride = checked_mul(stride, table.target_[j] + 1);
  }
  const std::uint64_t layer_size = stride;
  const std::uint64_t positions = word.size() + 1;
  table.dense_ = layer_size <= options.dense_cap / positions;

  const std::uint64_t S = table.num_states_;
  const std::uint64_t P = table.num_p_;
  auto digit = [&](std::uint64_t key, std::size_t j) {
    return (key / table.letter_stride_[j]) % (table.target_[j] + 1);
  };
  const SuffixBounds bounds =
      options.prune ? suffix_bounds(m, letters, table.target_) : SuffixBounds{};
  auto completable = [&](std::size_t position, std::uint64_t key) {
    if (!options.prune) return true;
    const std::size_t s = key % S;
    if (!bounds.alive[position][s]) return false;
    for (std::size_t j = 0; j < sigma; ++j) {
      const std::uint64_t have = digit(key, j);
      const std::uint64_t need = table.target_[j] - have;
      if (bounds.low[position][s][j] > need || bounds.high[position][s][j] < need) return false;
    }
    return true;
  };
  // Same key with state replaced and p reset to 0.
  auto retarget = [&](std::uint64_t key, std::size_t to) {
    return key - key % (S * P) + to;
  };

  auto new_layer = [&]() {
    auto layer = std::make_shared<Layer>();
    if (table.dense_) layer->bitmap.assign((layer_size + 63) / 64, 0);
    return layer;
  };

  // Moves that read the empty letter keep the position: writing a letter
  // starts a fresh chain (p = 0), an empty/empty move extends it by one.
  auto close = [&](Layer& layer, std::size_t position) {
    for (std::size_t idx = 0; idx < layer.keys.size(); ++idx) {
      const std::uint64_t key = layer.keys[idx];
      const std::size_t s = key % S;
      const std::uint64_t p = (key / S) % P;
      for (std::size_t e : m.out_arcs(s)) {
        const auto& arc = m.arcs()[e];
        if (arc.read != MealyMachine::kNone) continue;
        if (arc.write == MealyMachine::kNone) {
          const std::uint64_t next = key - s + arc.to + S;
          if (p + 1 < P && completable(position, next)) layer.insert(next, table.dense_);
          continue;
        }
        const auto j = static_cast<std::size_t>(arc.write);
        if (digit(key, j) == table.target_[j]) continue;
        const std::uint64_t next = retarget(key, arc.to) + table.letter_stride_[j];
        if (completable(position, next)) layer.insert(next, table.dense_);
      }
    }
  };

  table.layers_.push_back(new_layer());
  if (completable(0, m.start_index())) table.layers_[0]->insert(m.start_index(), table.dense_);
  close(*table.layers_[0], 0);
  for (std::size_t i = 1; i <= word.size(); ++i) {
    auto layer = new_layer();
    const int letter = letters[i - 1];
    if (letter != MealyMachine::kNone) {
      for (const std::uint64_t key : table.layers_[i - 1]->keys) {
        for (std::size_t e : m.out_arcs(key % S)) {
          const auto& arc = m.arcs()[e];
          if (arc.read != letter) continue;
          std::uint64_t next = retarget(key, arc.to);
          if (arc.write != MealyMachine::kNone) {
            const auto j = static_cast<std::size_t>(arc.write);
            if (digit(key, j) == table.target_[j]) continue;
            next += table.letter_stride_[j];
          }
          if (completable(i, next)) layer->insert(next, table.dense_);
        }
      }
    }
    close(*layer, i);
    table.layers_.push_back(std::move(layer));
  }
  return table;
}

bool GwmmTable::contains(std::size_t state, const std::vector<std::uint64_t>& partial,
                         std::size_t position, std::size_t p) const {
  if (!feasible_census_ || position >= layers_.size()) return false;
  if (state >= num_states_ || p >= num_p_ || partial.size() != target_.size()) return false;
  for (std::size_t j = 0; j < partial.size(); ++j) {
    if (partial[j] > target_[j]) return false;
  }
  return has(position, encode(state, partial, p));
}

std::size_t GwmmTable::true_entries(std::size_t position) const {
  if (position >= layers_.size()) return 0;
  return layers_[position]->keys.size();
}

std::optional<std::vector<std::size_t>> GwmmTable::trace() const {
  if (!feasible_census_) return std::nullopt;
  const MealyMachine& m = *machine_;
  const std::uint64_t S = num_states_;
  const std::uint64_t P = num_p_;
  std::size_t position = word_.size();

  std::optional<std::uint64_t> current;
  for (std::size_t p = 0; p < P && !current; ++p) {
    for (std::size_t s = 0; s < S && !current; ++s) {
      const std::uint64_t key = encode(s, target_, p);
      if (has(position, key)) current = key;
    }
  }
  if (!current) return std::nullopt;

  std::vector<std::vector<std::size_t>> in_arcs(S);
  for (std::size_t e = 0; e < m.arcs().size(); ++e) in_arcs[m.arcs()[e].to].push_back(e);

  const std::uint64_t origin = m.start_index();
  std::vector<std::size_t> reversed;
  std::uint64_t key = *current;
  while (!(position == 0 && key == origin)) {
    const std::size_t s = key % S;
    const std::uint64_t p = (key / S) % P;
    const std::uint64_t census_part = key - key % (S * P);
    std::optional<std::pair<std::size_t, std::uint64_t>> step;  // (transition, key)
    std::size_t step_position = position;

    for (std::size_t e : in_arcs[s]) {
      if (step) break;
      const auto& arc = m.arcs()[e];
      const bool silent = arc.read == MealyMachine::kNone && arc.write == MealyMachine::kNone;
      if (p > 0) {
        if (!silent) continue;
        const std::uint64_t pred = census_part + (p - 1) * S + arc.from;
        if (has(position, pred)) step = {{e, pred}};
        continue;
      }
      if (silent) continue;
      std::uint64_t pred_census = census_part;
      if (arc.write != MealyMachine::kNone) {
        const auto j = static_cast<std::size_t>(arc.write);
        if ((key / letter_stride_[j]) % (target_[j] + 1) == 0) continue;
        pred_census -= letter_stride_[j];
      }
      std::size_t pred_position = position;
      if (arc.read != MealyMachine::kNone) {
        if (position == 0 || m.transitions()[e].read != word_[position - 1]) continue;
        pred_position = position - 1;
      }
      for (std::uint64_t q = 0; q < P && !step; ++q) {
        const std::uint64_t pred = pred_census + q * S + arc.from;
        if (has(pred_position, pred)) {
          step = {{e, pred}};
          step_position = pred_position;
        }
      }
    }
    if (!step) throw std::logic_error("inconsistent census table during trace reconstruction");
    reversed.push_back(step->first);
    key = step->second;
    position = step_position;
  }
  return std::vector<std::size_t>(reversed.rbegin(), reversed.rend());
}

std::optional<std::vector<std::size_t>> solve_gwmm(const MealyMachine& machine,
                                                   const Word& word,
                                                   const CensusRequirement& census,
                                                   const GwmmOptions& options) {
  return GwmmTable::build(machine, word, census, options).trace();
}

std::optional<std::vector<std::size_t>> solve_gwmm_binary_guard(
    const MealyMachine& machine, const Word& word, const CensusRequirement& census,
    const GwmmOptions& options) {
  if (machine.input_has_empty()) {
    throw EmptyLetterPresent("the empty letter is in the input alphabet");
  }
  // Every move reads one letter and writes at most one.
  if (census.total() > word.size()) return std::nullopt;
  return solve_gwmm(machine, word, census, options);
}

}  // namespace nonum::census
