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

#ifndef NONUM_ILP_HPP_
#define NONUM_ILP_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonum/integer.hpp"

namespace nonum::ilp {

// An integer variable restricted to the closed box [lower, upper].
struct Variable {
  std::string name;
  Integer lower;
  Integer upper;
};

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

// sum(coefficients[v] * v) <relation> rhs
struct Constraint {
  std::map<std::string, Integer> coefficients;
  Relation relation = Relation::kEqual;
  Integer rhs;
};

// A feasibility-only integer program over box-bounded variables. There is no
// objective. Programs are plain values; validity is checked by the solver.
struct IntegerProgram {
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;

  // Convenience builders. add_variable returns the variable's position.
  std::size_t add_variable(std::string name, Integer lower, Integer upper);
  void add_constraint(std::map<std::string, Integer> coefficients, Relation relation,
                      Integer rhs);

  const Variable* find(const std::string& name) const;
};

using Assignment = std::map<std::string, Integer>;

struct FeasibilityResult {
  std::optional<Assignment> assignment;  // set iff feasible
  std::uint64_t nodes = 0;               // branch-and-bound nodes visited

  bool feasible() const { return assignment.has_value(); }
};

class MalformedProgram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws MalformedProgram for an empty box (lower > upper), a coefficient on
// an undeclared variable, or a duplicated variable name.
void validate(const IntegerProgram& program);

// Exact feasibility over the variable boxes: depth-first branch and bound
// with interval propagation and gcd cuts at every node. The engine is
// complete, so an empty result is a proof of infeasibility. The witness is
// deterministic for a fixed variable order.
FeasibilityResult solve_feasibility(const IntegerProgram& program);

// Tightens every box by interval propagation until a fixpoint is reached.
// Returns std::nullopt when propagation proves the program infeasible. The
// returned program has the same constraints and the same integer solutions.
std::optional<IntegerProgram> propagate_bounds(const IntegerProgram& program);

// True iff the assignment lies in every box and satisfies every constraint.
// Evaluated directly from the program text.
bool satisfies(const IntegerProgram& program, const Assignment& assignment);

// Debug text: one "lower <= name <= upper" line per variable, then one
// constraint per line in "c1*x1 + c2*x2 <= b" form.
void dump(const IntegerProgram& program, std::ostream& out);
std::string to_string(Relation relation);

}  // namespace nonum::ilp

#endif  // NONUM_ILP_HPP_
