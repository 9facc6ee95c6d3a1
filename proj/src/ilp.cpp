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

#include "nonum/ilp.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <utility>

namespace nonum::ilp {
namespace {

struct Term {
  std::size_t var;
  Integer coef;
};

struct Row {
  std::vector<Term> terms;
  Relation relation;
  Integer rhs;
};

// Index-based form of a validated program.
struct Compiled {
  std::vector<Row> rows;
  std::vector<std::vector<std::size_t>> rows_of_var;
};

Compiled compile(const IntegerProgram& program) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < program.variables.size(); ++i) {
    index.emplace(program.variables[i].name, i);
  }
  Compiled compiled;
  compiled.rows_of_var.resize(program.variables.size());
  for (const Constraint& constraint : program.constraints) {
    Row row{{}, constraint.relation, constraint.rhs};
    for (const auto& [name, coef] : constraint.coefficients) {
      if (coef == 0) continue;
      row.terms.push_back({index.at(name), coef});
    }
    const std::size_t r = compiled.rows.size();
    for (const Term& term : row.terms) compiled.rows_of_var[term.var].push_back(r);
    compiled.rows.push_back(std::move(row));
  }
  return compiled;
}

struct Box {
  std::vector<Integer> lo;
  std::vector<Integer> hi;
};

// Tightens one row. Returns false when the row is unsatisfiable in the box.
// Variables whose bounds moved are appended to `changed`.
bool tighten_row(const Row& row, Box& box, std::vector<std::size_t>& changed) {
  Integer min_act = 0;
  Integer max_act = 0;
  Integer fixed_sum = 0;
  Integer g = 0;
  for (const Term& t : row.terms) {
    const Integer& lo = box.lo[t.var];
    const Integer& hi = box.hi[t.var];
    if (t.coef > 0) {
      min_act += t.coef * lo;
      max_act += t.coef * hi;
    } else {
      min_act += t.coef * hi;
      max_act += t.coef * lo;
    }
    if (lo == hi) {
      fixed_sum += t.coef * lo;
    } else {
      g = boost::multiprecision::gcd(g, abs(t.coef));
    }
  }
  const bool has_upper = row.relation != Relation::kGreaterEqual;
  const bool has_lower = row.relation != Relation::kLessEqual;
  if (has_upper && min_act > row.rhs) return false;
  if (has_lower && max_act < row.rhs) return false;
  if (row.relation == Relation::kEqual && g != 0) {
    if ((row.rhs - fixed_sum) % g != 0) return false;
  }

  for (const Term& t : row.terms) {
    Integer& lo = box.lo[t.var];
    Integer& hi = box.hi[t.var];
    if (lo == hi) continue;
    const Integer cmin = t.coef > 0 ? Integer(t.coef * lo) : Integer(t.coef * hi);
    const Integer cmax = t.coef > 0 ? Integer(t.coef * hi) : Integer(t.coef * lo);
    Integer new_lo = lo;
    Integer new_hi = hi;
    if (has_upper) {
      // coef * x <= rhs - (min activity of the other terms)
      const Integer bound = row.rhs - (min_act - cmin);
      if (t.coef > 0) {
        new_hi = std::min(new_hi, floor_div(bound, t.coef));
      } else {
        new_lo = std::max(new_lo, ceil_div(bound, t.coef));
      }
    }
    if (has_lower) {
      const Integer bound = row.rhs - (max_act - cmax);
      if (t.coef > 0) {
        new_lo = std::max(new_lo, ceil_div(bound, t.coef));
      } else {
        new_hi = std::min(new_hi, floor_div(bound, t.coef));
      }
    }
    if (new_lo > new_hi) return false;
    if (new_lo != lo || new_hi != hi) {
      lo = std::move(new_lo);
      hi = std::move(new_hi);
      changed.push_back(t.var);
    }
  }
  return true;
}

// Worklist propagation. `step_limit` caps the number of row visits (0 means
// run to the fixpoint); stopping early is sound, only less tight.
bool propagate(const Compiled& compiled, Box& box, std::size_t step_limit) {
  const std::size_t num_rows = compiled.rows.size();
  std::deque<std::size_t> queue;
  std::vector<char> queued(num_rows, 1);
  for (std::size_t r = 0; r < num_rows; ++r) queue.push_back(r);
  std::vector<std::size_t> changed;
  std::size_t steps = 0;
  while (!queue.empty()) {
    if (step_limit != 0 && steps++ >= step_limit) break;
    const std::size_t r = queue.front();
    queue.pop_front();
    queued[r] = 0;
    changed.clear();
    if (!tighten_row(compiled.rows[r], box, changed)) return false;
    for (std::size_t var : changed) {
      for (std::size_t other : compiled.rows_of_var[var]) {
        if (!queued[other]) {
          queued[other] = 1;
          queue.push_back(other);
        }
      }
    }
  }
  return true;
}

bool row_holds(const Row& row, const std::vector<Integer>& values) {
  Integer lhs = 0;
  for (const Term& t : row.terms) lhs += t.coef * values[t.var];
  switch (row.relation) {
    case Relation::kLessEqual:
      return lhs <= row.rhs;
    case Relation::kEqual:
      return lhs == row.rhs;
    case Relation::kGreaterEqual:
      return lhs >= row.rhs;
  }
  return false;
}

constexpr int kEnumerateWidth = 16;

class BranchAndBound {
 public:
  explicit BranchAndBound(const Compiled& compiled)
      : compiled_(compiled),
        node_step_limit_(std::max<std::size_t>(64, 32 * compiled.rows.size())) {}

  bool search(Box box) {
    ++nodes_;
    if (!propagate(compiled_, box, node_step_limit_)) return false;

    // Narrowest open box first; ties go to the lower index.
    std::optional<std::size_t> pick;
    Integer best_width;
    for (std::size_t v = 0; v < box.lo.size(); ++v) {
      if (box.lo[v] == box.hi[v]) continue;
      Integer width = box.hi[v] - box.lo[v];
      if (!pick || width < best_width) {
        pick = v;
        best_width = std::move(width);
      }
    }
    if (!pick) {
      for (const Row& row : compiled_.rows) {
        if (!row_holds(row, box.lo)) return false;
      }
      solution_ = std::move(box.lo);
      return true;
    }

    const std::size_t v = *pick;
    if (best_width < kEnumerateWidth) {
      for (Integer value = box.lo[v]; value <= box.hi[v]; ++value) {
        Box child = box;
        child.lo[v] = value;
        child.hi[v] = value;
        if (search(std::move(child))) return true;
      }
      return false;
    }
    const Integer mid = floor_div(box.lo[v] + box.hi[v], 2);
    Box left = box;
    left.hi[v] = mid;
    if (search(std::move(left))) return true;
    box.lo[v] = mid + 1;
    return search(std::move(box));
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Integer>& solution() const { return solution_; }

 private:
  const Compiled& compiled_;
  std::size_t node_step_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<Integer> solution_;
};

Box initial_box(const IntegerProgram& program) {
  Box box;
  for (const Variable& v : program.variables) {
    box.lo.push_back(v.lower);
    box.hi.push_back(v.upper);
  }
  return box;
}

}  // namespace

std::size_t IntegerProgram::add_variable(std::string name, Integer lower, Integer upper) {
  variables.push_back({std::move(name), std::move(lower), std::move(upper)});
  return variables.size() - 1;
}

void IntegerProgram::add_constraint(std::map<std::string, Integer> coefficients,
                                    Relation relation, Integer rhs) {
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

const Variable* IntegerProgram::find(const std::string& name) const {
  for (const Variable& v : variables) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

void validate(const IntegerProgram& program) {
  std::set<std::string> names;
  for (const Variable& v : program.variables) {
    if (!names.insert(v.name).second) {
      throw MalformedProgram("duplicate variable '" + v.name + "'");
    }
    if (v.lower > v.upper) {
      throw MalformedProgram("empty box for '" + v.name + "': [" + v.lower.str() + ", " +
                             v.upper.str() + "]");
    }
  }
  for (const Constraint& c : program.constraints) {
    for (const auto& [name, coef] : c.coefficients) {
      if (!names.count(name)) {
        throw MalformedProgram("coefficient on undeclared variable '" + name + "'");
      }
    }
  }
}

FeasibilityResult solve_feasibility(const IntegerProgram& program) {
  validate(program);
  const Compiled compiled = compile(program);
  BranchAndBound search(compiled);
  FeasibilityResult result;
  if (search.search(initial_box(program))) {
    Assignment assignment;
    for (std::size_t v = 0; v < program.variables.size(); ++v) {
      assignment.emplace(program.variables[v].name, search.solution()[v]);
    }
    result.assignment = std::move(assignment);
  }
  result.nodes = search.nodes();
  return result;
}

std::optional<IntegerProgram> propagate_bounds(const IntegerProgram& program) {
  validate(program);
  const Compiled compiled = compile(program);
  Box box = initial_box(program);
  if (!propagate(compiled, box, 0)) return std::nullopt;
  IntegerProgram tightened = program;
  for (std::size_t v = 0; v < tightened.variables.size(); ++v) {
    tightened.variables[v].lower = box.lo[v];
    tightened.variables[v].upper = box.hi[v];
  }
  return tightened;
}

bool satisfies(const IntegerProgram& program, const Assignment& assignment) {
  if (assignment.size() != program.variables.size()) return false;
  for (const Variable& v : program.variables) {
    auto it = assignment.find(v.name);
    if (it == assignment.end()) return false;
    if (it->second < v.lower || it->second > v.upper) return false;
  }
  for (const Constraint& c : program.constraints) {
    Integer lhs = 0;
    for (const auto& [name, coef] : c.coefficients) {
      auto it = assignment.find(name);
      if (it == assignment.end()) return false;
      lhs += coef * it->second;
    }
    const bool ok = c.relation == Relation::kLessEqual ? lhs <= c.rhs
                    : c.relation == Relation::kEqual   ? lhs == c.rhs
                                                       : lhs >= c.rhs;
    if (!ok) return false;
  }
  return true;
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

void dump(const IntegerProgram& program, std::ostream& out) {
  for (const Variable& v : program.variables) {
    out << v.lower << " <= " << v.name << " <= " << v.upper << '\n';
  }
  for (const Constraint& c : program.constraints) {
    bool first = true;
    for (const auto& [name, coef] : c.coefficients) {
      if (first) {
        if (coef < 0) out << '-';
      } else {
        out << (coef < 0 ? " - " : " + ");
      }
      out << abs(coef) << '*' << name;
      first = false;
    }
    if (first) out << '0';
    out << ' ' << to_string(c.relation) << ' ' << c.rhs << '\n';
  }
}

}  // namespace nonum::ilp
