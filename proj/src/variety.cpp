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

#include "nonum/variety.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace nonum::variety {
namespace {

std::string subset_var(std::size_t i) { return "x" + std::to_string(i + 1); }

std::string triple_var(const std::array<std::size_t, 3>& p) {
  return "x" + std::to_string(p[0] + 1) + "_" + std::to_string(p[1] + 1) + "_" +
         std::to_string(p[2] + 1);
}

SubsetCertificate extract_subset(const Multiset& a, const ilp::Assignment& values) {
  SubsetCertificate cert;
  for (std::size_t i = 0; i < a.variety(); ++i) {
    const Integer& x = values.at(subset_var(i));
    if (x != 0) cert.counts[a.entries()[i].value] = x;
  }
  return cert;
}

// Adds one "= multiplicity" row per entry of `m`; `position` selects which
// slot of a pattern refers to `m`.
void add_usage_rows(TripleProgram& tp, const Multiset& m, std::size_t position) {
  for (std::size_t idx = 0; idx < m.variety(); ++idx) {
    std::map<std::string, Integer> row;
    for (const auto& p : tp.patterns) {
      if (p[position] == idx) row[triple_var(p)] = 1;
    }
    tp.program.add_constraint(std::move(row), ilp::Relation::kEqual,
                              m.entries()[idx].multiplicity);
  }
}

std::optional<TripleCover> solve_matching(const TripleProgram& tp, const Multiset& a,
                                          const Multiset& b, const Multiset& c) {
  const ilp::FeasibilityResult result = ilp::solve_feasibility(tp.program);
  if (!result.feasible()) return std::nullopt;
  TripleCover cover;
  for (const auto& p : tp.patterns) {  // patterns are generated in index order
    const Integer& x = result.assignment->at(triple_var(p));
    if (x == 0) continue;
    cover.triples.push_back(
        {a.entries()[p[0]].value, b.entries()[p[1]].value, c.entries()[p[2]].value, x});
  }
  return cover;
}

// Every pair sum a + b; used by the 3DM/NMTS pre-filters.
std::set<Integer> pair_sums(const Multiset& a, const Multiset& b) {
  std::set<Integer> sums;
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) sums.insert(x.value + y.value);
  }
  return sums;
}

std::pair<Integer, Integer> value_range(const Multiset& m) {
  auto [lo, hi] = std::minmax_element(
      m.entries().begin(), m.entries().end(),
      [](const Multiset::Entry& x, const Multiset::Entry& y) { return x.value < y.value; });
  return {lo->value, hi->value};
}

void require_equal_cardinality(const Multiset& a, const Multiset& b, const Multiset& c) {
  if (a.cardinality() != b.cardinality() || a.cardinality() != c.cardinality()) {
    throw CardinalityMismatch("multisets have cardinalities " + a.cardinality().str() + ", " +
                              b.cardinality().str() + ", " + c.cardinality().str());
  }
}

}  // namespace

ilp::IntegerProgram subset_sum_program(const Multiset& a, const Integer& s) {
  ilp::IntegerProgram program;
  std::map<std::string, Integer> sum;
  for (std::size_t i = 0; i < a.variety(); ++i) {
    const auto& e = a.entries()[i];
    program.add_variable(subset_var(i), 0, e.multiplicity);
    if (e.value != 0) sum[subset_var(i)] = e.value;
  }
  program.add_constraint(std::move(sum), ilp::Relation::kEqual, s);
  return program;
}

std::optional<ilp::IntegerProgram> partition_program(const Multiset& a) {
  const Integer total = a.total();
  if (total % 2 != 0) return std::nullopt;
  return subset_sum_program(a, total / 2);
}

TripleProgram num_3dm_program(const Multiset& a, const Multiset& b, const Multiset& c,
                              const Integer& s) {
  TripleProgram tp;
  for (std::size_t i = 0; i < a.variety(); ++i) {
    for (std::size_t j = 0; j < b.variety(); ++j) {
      for (std::size_t l = 0; l < c.variety(); ++l) {
        if (a.entries()[i].value + b.entries()[j].value + c.entries()[l].value != s) continue;
        tp.patterns.push_back({i, j, l});
      }
    }
  }
  for (const auto& p : tp.patterns) {
    // a triple can occur at most as often as its scarcest member
    const Integer ub = std::min({a.entries()[p[0]].multiplicity, b.entries()[p[1]].multiplicity,
                                 c.entries()[p[2]].multiplicity});
    tp.program.add_variable(triple_var(p), 0, ub);
  }
  add_usage_rows(tp, a, 0);
  add_usage_rows(tp, b, 1);
  add_usage_rows(tp, c, 2);
  return tp;
}

TripleProgram nmts_program(const Multiset& a, const Multiset& b, const Multiset& s) {
  TripleProgram tp;
  for (std::size_t i = 0; i < a.variety(); ++i) {
    for (std::size_t j = 0; j < b.variety(); ++j) {
      for (std::size_t l = 0; l < s.variety(); ++l) {
        if (a.entries()[i].value + b.entries()[j].value != s.entries()[l].value) continue;
        tp.patterns.push_back({i, j, l});
      }
    }
  }
  for (const auto& p : tp.patterns) {
    const Integer ub = std::min({a.entries()[p[0]].multiplicity, b.entries()[p[1]].multiplicity,
                                 s.entries()[p[2]].multiplicity});
    tp.program.add_variable(triple_var(p), 0, ub);
  }
  add_usage_rows(tp, a, 0);
  add_usage_rows(tp, b, 1);
  add_usage_rows(tp, s, 2);
  return tp;
}

TripleProgram three_partition_program(const Multiset& a, const Integer& target) {
  TripleProgram tp;
  const std::size_t k = a.variety();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (a.entries()[i].value + a.entries()[j].value + a.entries()[l].value != target) {
          continue;
        }
        tp.patterns.push_back({i, j, l});
      }
    }
  }
  for (const auto& p : tp.patterns) {
    Integer ub = a.entries()[p[0]].multiplicity;
    for (std::size_t t : p) {
      const auto uses = static_cast<int>(std::count(p.begin(), p.end(), t));
      ub = std::min(ub, Integer(a.entries()[t].multiplicity / uses));
    }
    tp.program.add_variable(triple_var(p), 0, ub);
  }
  for (std::size_t t = 0; t < k; ++t) {
    std::map<std::string, Integer> row;
    for (const auto& p : tp.patterns) {
      const auto uses = std::count(p.begin(), p.end(), t);
      if (uses > 0) row[triple_var(p)] = static_cast<int>(uses);
    }
    tp.program.add_constraint(std::move(row), ilp::Relation::kEqual, a.entries()[t].multiplicity);
  }
  return tp;
}

std::optional<SubsetCertificate> solve_subset_sum(const Multiset& a, const Integer& s) {
  const ilp::FeasibilityResult result = ilp::solve_feasibility(subset_sum_program(a, s));
  if (!result.feasible()) return std::nullopt;
  return extract_subset(a, *result.assignment);
}

std::optional<SubsetCertificate> solve_partition(const Multiset& a) {
  const auto program = partition_program(a);
  if (!program) return std::nullopt;
  const ilp::FeasibilityResult result = ilp::solve_feasibility(*program);
  if (!result.feasible()) return std::nullopt;
  return extract_subset(a, *result.assignment);
}

std::optional<TripleCover> solve_num_3dm(const Multiset& a, const Multiset& b,
                                         const Multiset& c, const Integer& s) {
  require_equal_cardinality(a, b, c);
  if (a.empty()) return TripleCover{};
  const auto [a_lo, a_hi] = value_range(a);
  const auto [b_lo, b_hi] = value_range(b);
  const auto [c_lo, c_hi] = value_range(c);
  if (s < a_lo + b_lo + c_lo || s > a_hi + b_hi + c_hi) return std::nullopt;
  // Distinct C values need distinct partner sums s - c.
  if (c.variety() > pair_sums(a, b).size()) return std::nullopt;
  return solve_matching(num_3dm_program(a, b, c, s), a, b, c);
}

std::optional<TripleCover> solve_nmts(const Multiset& a, const Multiset& b, const Multiset& s) {
  require_equal_cardinality(a, b, s);
  if (a.empty()) return TripleCover{};
  const auto [a_lo, a_hi] = value_range(a);
  const auto [b_lo, b_hi] = value_range(b);
  const auto [s_lo, s_hi] = value_range(s);
  if (s_lo < a_lo + b_lo || s_hi > a_hi + b_hi) return std::nullopt;
  if (s.variety() > pair_sums(a, b).size()) return std::nullopt;
  return solve_matching(nmts_program(a, b, s), a, b, s);
}

std::optional<TripleCover> solve_3partition(const Multiset& a) {
  const Integer size = a.cardinality();
  if (size % 3 != 0) {
    throw NotDivisibleBy3("3-partition needs a multiple of 3 elements, got " + size.str());
  }
  if (size == 0) return TripleCover{};
  const Integer n = size / 3;
  const Integer total = a.total();
  if (total % n != 0) return std::nullopt;
  const TripleProgram tp = three_partition_program(a, total / n);
  const ilp::FeasibilityResult result = ilp::solve_feasibility(tp.program);
  if (!result.feasible()) return std::nullopt;

  // Fold ordered patterns into unordered triples keyed by sorted indices.
  std::map<std::array<std::size_t, 3>, Integer> folded;
  for (const auto& p : tp.patterns) {
    const Integer& x = result.assignment->at(triple_var(p));
    if (x == 0) continue;
    auto key = p;
    std::sort(key.begin(), key.end());
    folded[key] += x;
  }
  TripleCover cover;
  for (const auto& [key, count] : folded) {
    cover.triples.push_back({a.entries()[key[0]].value, a.entries()[key[1]].value,
                             a.entries()[key[2]].value, count});
  }
  return cover;
}

}  // namespace nonum::variety
