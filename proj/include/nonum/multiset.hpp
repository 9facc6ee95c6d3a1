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

#ifndef NONUM_MULTISET_HPP_
#define NONUM_MULTISET_HPP_

#include <stdexcept>
#include <vector>

#include "nonum/integer.hpp"

namespace nonum {

class InvalidMultiset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A multiset of integers stored as (value, multiplicity) pairs. Entries keep
// their insertion order; values are pairwise distinct and multiplicities are
// positive.
class Multiset {
 public:
  struct Entry {
    Integer value;
    Integer multiplicity;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Multiset() = default;
  // Throws InvalidMultiset on a repeated value or a multiplicity below 1.
  explicit Multiset(std::vector<Entry> entries);

  // Counts repeated values; first occurrence fixes the entry order.
  static Multiset from_values(const std::vector<Integer>& values);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Integer cardinality() const;                 // |A|
  std::size_t variety() const { return entries_.size(); }  // ||A||
  Integer total() const;                       // sum of all elements
  Integer multiplicity(const Integer& value) const;

  // Adds `count` copies of `value`, merging with an existing entry.
  void add(const Integer& value, const Integer& count = 1);

  // Every element listed with repetition, in entry order.
  std::vector<Integer> expand() const;

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace nonum

#endif  // NONUM_MULTISET_HPP_
