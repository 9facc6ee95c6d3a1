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

#ifndef NONUM_INSTANCE_IO_HPP_
#define NONUM_INSTANCE_IO_HPP_

// Text formats for every instance kind. All readers skip blank lines and
// '#' comments and accept any run of spaces or tabs between tokens. Writers
// produce the normalized form, which reads back to an equal instance.

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "nonum/mealy.hpp"
#include "nonum/multiset.hpp"
#include "nonum/reductions.hpp"

namespace nonum::io {

class ParseError : public std::runtime_error {
 public:
  // line and column are 1-based; 0 means the error concerns the whole input.
  ParseError(const std::string& source, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// value multiplicity
// ...
// s=<integer>          (optional; required by subset sum and 3-dim matching)
struct MultisetInstance {
  Multiset values;
  std::optional<Integer> target;
};

// A:
// value multiplicity
// B:
// ...
// C:                   ("S:" for the sum-triples problem)
// ...
// s=<integer>
struct TripleInstance {
  Multiset a;
  Multiset b;
  Multiset c;  // the S multiset for the sum-triples problem
  std::optional<Integer> target;
};

// states: q0 q1
// start: q0
// input: a b _
// output: x _
// word: a b a          (given-word problem only)
// census:
// x 2
// q0 a -> q1 x         (from read -> to write, anywhere in the file)
struct MachineInstance {
  mealy::MealyMachine machine;
  std::optional<mealy::Word> word;
  mealy::CensusRequirement census;
};

MultisetInstance parse_multiset(std::istream& in, const std::string& source);
// `third` names the third section: 'C' or 'S'.
TripleInstance parse_triples(std::istream& in, const std::string& source, char third = 'C');
MachineInstance parse_machine(std::istream& in, const std::string& source);
// k 3
// class 1: a1 a2
// edge a1 b1
reductions::MulticoloredGraph parse_graph(std::istream& in, const std::string& source);
// k 1
// deadline 7
// job <heat level> <count>
reductions::HeatInstance parse_heat(std::istream& in, const std::string& source);
// gaps: 4 1 2
// job <length> <count>
reductions::SplitsInstance parse_splits(std::istream& in, const std::string& source);

void write_multiset(std::ostream& out, const MultisetInstance& instance);
void write_triples(std::ostream& out, const TripleInstance& instance, char third = 'C');
void write_machine(std::ostream& out, const MachineInstance& instance);
void write_graph(std::ostream& out, const reductions::MulticoloredGraph& graph);
void write_heat(std::ostream& out, const reductions::HeatInstance& heat);
void write_splits(std::ostream& out, const reductions::SplitsInstance& splits);

}  // namespace nonum::io

#endif  // NONUM_INSTANCE_IO_HPP_
