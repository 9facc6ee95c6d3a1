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

#ifndef NONUM_VARIETY_HPP_
#define NONUM_VARIETY_HPP_

// Solvers for the classic multiset problems parameterized by variety (the
// number of distinct values). Each solver builds an integer program whose
// number of variables depends only on the variety, hands it to the ILP engine
// and turns the witness into a certificate.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nonum/ilp.hpp"
#include "nonum/multiset.hpp"

namespace nonum::variety {

// How many copies of each distinct value are selected. Values with a zero
// count are omitted.
struct SubsetCertificate {
  std::map<Integer, Integer> counts;

  friend bool operator==(const SubsetCertificate&, const SubsetCertificate&) = default;
};

struct Triple {
  Integer first;
  Integer second;
  Integer third;
  Integer count;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleCover {
  std::vector<Triple> triples;

  friend bool operator==(const TripleCover&, const TripleCover&) = default;
};

class CardinalityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotDivisibleBy3 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A program whose variable v counts triples of the index pattern
// patterns[v] (indices into the entry lists of the source multisets).
struct TripleProgram {
  ilp::IntegerProgram program;
  std::vector<std::array<std::size_t, 3>> patterns;
};

// x_i in [0, m_i], sum x_i * a_i = s.
ilp::IntegerProgram subset_sum_program(const Multiset& a, const Integer& s);

// Returns std::nullopt when the total is odd (no program is needed).
std::optional<ilp::IntegerProgram> partition_program(const Multiset& a);

// One variable per (i, j, l) with a_i + b_j + c_l = s; each distinct value of
// each multiset is used exactly its multiplicity.
TripleProgram num_3dm_program(const Multiset& a, const Multiset& b, const Multiset& c,
                              const Integer& s);

// Same shape with a_i + b_j = s_l in place of the fixed target.
TripleProgram nmts_program(const Multiset& a, const Multiset& b, const Multiset& s);

// One variable per ordered pattern (i, j, l) with a_i + a_j + a_l = target.
// Value t is consumed once per position of the pattern equal to t, so
// repeated indices weigh 2 or 3.
TripleProgram three_partition_program(const Multiset& a, const Integer& target);

std::optional<SubsetCertificate> solve_subset_sum(const Multiset& a, const Integer& s);

std::optional<SubsetCertificate> solve_partition(const Multiset& a);

// Throws CardinalityMismatch unless |a| = |b| = |c|.
std::optional<TripleCover> solve_num_3dm(const Multiset& a, const Multiset& b,
                                         const Multiset& c, const Integer& s);

// Throws CardinalityMismatch unless |a| = |b| = |s|.
std::optional<TripleCover> solve_nmts(const Multiset& a, const Multiset& b, const Multiset& s);

// Throws NotDivisibleBy3 when |a| is not a multiple of 3. A total that is not
// divisible by |a|/3 yields std::nullopt without building a program.
std::optional<TripleCover> solve_3partition(const Multiset& a);

}  // namespace nonum::variety

#endif  // NONUM_VARIETY_HPP_
