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

#include "nonum/multiset.hpp"

#include <set>

namespace nonum {

Multiset::Multiset(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::set<Integer> seen;
  for (const Entry& e : entries_) {
    if (!seen.insert(e.value).second) {
      throw InvalidMultiset("duplicate value " + e.value.str());
    }
    if (e.multiplicity < 1) {
      throw InvalidMultiset("value " + e.value.str() + " has non-positive multiplicity " +
                            e.multiplicity.str());
    }
  }
}

Multiset Multiset::from_values(const std::vector<Integer>& values) {
  Multiset result;
  for (const Integer& v : values) result.add(v);
  return result;
}

Integer Multiset::cardinality() const {
  Integer n = 0;
  for (const Entry& e : entries_) n += e.multiplicity;
  return n;
}

Integer Multiset::total() const {
  Integer sum = 0;
  for (const Entry& e : entries_) sum += e.value * e.multiplicity;
  return sum;
}

Integer Multiset::multiplicity(const Integer& value) const {
  for (const Entry& e : entries_) {
    if (e.value == value) return e.multiplicity;
  }
  return 0;
}

void Multiset::add(const Integer& value, const Integer& count) {
  if (count < 1) throw InvalidMultiset("cannot add a non-positive count");
  for (Entry& e : entries_) {
    if (e.value == value) {
      e.multiplicity += count;
      return;
    }
  }
  entries_.push_back({value, count});
}

std::vector<Integer> Multiset::expand() const {
  std::vector<Integer> out;
  for (const Entry& e : entries_) {
    for (Integer i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
  }
  return out;
}

}  // namespace nonum
