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

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "nonum/census_solvers.hpp"
#include "nonum/parallel.hpp"

namespace nonum::census {
namespace {

using Counts = std::vector<std::uint64_t>;
using Bits = std::vector<std::uint64_t>;

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = v.size();
    for (std::uint64_t x : v) {
      h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool test_bit(const Bits& bits, std::size_t i) { return (bits[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

// Everything the walk search needs, computed once per instance.
struct Prepared {
  MealyMachine sub;
  Counts target;
  std::vector<LoopVariable> loop_vars;  // distinct vectors, first-seen anchor
  std::vector<Bits> loops_at;           // loop ids available at each vertex
  std::vector<std::unordered_map<std::size_t, std::vector<std::size_t>>> cycle_at;
  std::size_t words = 1;
};

Prepared prepare(const MealyMachine& machine, const Counts& target, bool parallel) {
  Prepared prep{subdivide(machine), target, {}, {}, {}, 1};
  const std::size_t n = prep.sub.num_states();
  std::vector<std::vector<LoopVariable>> per_vertex(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t v = 0; v < n; ++v) {
    per_vertex[v] = short_loops(prep.sub, v, target);
  }

  std::unordered_map<Counts, std::size_t, VectorHash> ids;
  std::vector<std::vector<std::size_t>> id_lists(n);
  prep.cycle_at.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (LoopVariable& loop : per_vertex[v]) {
      auto [it, inserted] = ids.try_emplace(loop.census_vector, prep.loop_vars.size());
      if (inserted) prep.loop_vars.push_back(loop);
      id_lists[v].push_back(it->second);
      prep.cycle_at[v].emplace(it->second, std::move(loop.cycle));
    }
  }
  prep.words = std::max<std::size_t>(1, (prep.loop_vars.size() + 63) / 64);
  prep.loops_at.assign(n, Bits(prep.words, 0));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t id : id_lists[v]) set_bit(prep.loops_at[v], id);
  }
  return prep;
}

std::string loop_var_name(std::size_t id) { return "y" + std::to_string(id); }

// Loop-count program for a base walk with output `counts` and available
// loops `bits`.
ilp::IntegerProgram loop_program(const Prepared& prep, const Counts& counts, const Bits& bits) {
  const std::size_t sigma = prep.target.size();
  Counts residual(sigma);
  for (std::size_t j = 0; j < sigma; ++j) residual[j] = prep.target[j] - counts[j];

  ilp::IntegerProgram program;
  std::vector<std::map<std::string, Integer>> rows(sigma);
  for (std::size_t id = 0; id < prep.loop_vars.size(); ++id) {
    if (!test_bit(bits, id)) continue;
    const Counts& vec = prep.loop_vars[id].census_vector;
    std::uint64_t ub = std::numeric_limits<std::uint64_t>::max();
    bool fits = true;
    for (std::size_t j = 0; j < sigma && fits; ++j) {
      if (vec[j] == 0) continue;
      if (vec[j] > residual[j]) fits = false;
      else ub = std::min(ub, residual[j] / vec[j]);
    }
    if (!fits) continue;
    program.add_variable(loop_var_name(id), 0, ub);
    for (std::size_t j = 0; j < sigma; ++j) {
      if (vec[j] != 0) rows[j][loop_var_name(id)] = vec[j];
    }
  }
  for (std::size_t j = 0; j < sigma; ++j) {
    program.add_constraint(std::move(rows[j]), ilp::Relation::kEqual, residual[j]);
  }
  return program;
}

struct WalkNode {
  std::size_t vertex;
  Counts counts;
  Bits loops;
  std::int64_t parent;
  std::size_t arc;
};

struct Candidate {
  std::size_t node;
  ilp::IntegerProgram program;
  std::optional<ilp::Assignment> assignment;
};

EwmmCertificate make_certificate(const Prepared& prep, const std::vector<WalkNode>& nodes,
                                 const Candidate& accepted) {
  std::vector<std::size_t> base;
  for (std::int64_t i = static_cast<std::int64_t>(accepted.node); nodes[i].parent >= 0;
       i = nodes[i].parent) {
    base.push_back(nodes[i].arc);
  }
  std::reverse(base.begin(), base.end());
  std::vector<std::size_t> vertices{prep.sub.start_index()};
  for (std::size_t e : base) vertices.push_back(prep.sub.arcs()[e].to);

  mealy::WalkDecomposition walk{base, {}};
  for (const auto& [name, value] : *accepted.assignment) {
    if (value == 0) continue;
    const std::size_t id = std::stoul(name.substr(1));
    for (std::size_t u : vertices) {
      if (!test_bit(prep.loops_at[u], id)) continue;
      walk.loops.push_back({u, prep.cycle_at[u].at(id), value});
      break;
    }
  }
  std::sort(walk.loops.begin(), walk.loops.end(),
            [](const mealy::Loop& a, const mealy::Loop& b) {
              return std::tie(a.anchor, a.cycle) < std::tie(b.anchor, b.cycle);
            });
  return EwmmCertificate{prep.sub, std::move(walk), accepted.program};
}

// Checks the candidates of one walk length; returns the position of the first
// accepted one. The serial path stops at the first success. The parallel path
// checks candidates concurrently and skips those behind a known success, so
// both return the same position.
std::optional<std::size_t> check_candidates(const Prepared& prep,
                                            const std::vector<WalkNode>& nodes,
                                            std::vector<Candidate>& candidates, bool parallel,
                                            std::uint64_t& programs_solved) {
  if (!parallel) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const WalkNode& node = nodes[candidates[c].node];
      candidates[c].program = loop_program(prep, node.counts, node.loops);
      candidates[c].assignment = ilp::solve_feasibility(candidates[c].program).assignment;
      ++programs_solved;
      if (candidates[c].assignment) return c;
    }
    return std::nullopt;
  }

  const auto count = static_cast<std::int64_t>(candidates.size());
  std::atomic<std::int64_t> best{count};
  std::atomic<std::uint64_t> solved{0};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < count; ++c) {
    if (c > best.load(std::memory_order_relaxed)) continue;
    Candidate& cand = candidates[static_cast<std::size_t>(c)];
    const WalkNode& node = nodes[cand.node];
    cand.program = loop_program(prep, node.counts, node.loops);
    cand.assignment = ilp::solve_feasibility(cand.program).assignment;
    solved.fetch_add(1, std::memory_order_relaxed);
    if (cand.assignment) {
      std::int64_t current = best.load();
      while (c < current && !best.compare_exchange_weak(current, c)) {
      }
    }
  }
  programs_solved += solved.load();
  if (best.load() == count) return std::nullopt;
  return static_cast<std::size_t>(best.load());
}

EwmmResult solve(const MealyMachine& machine, const CensusRequirement& census,
                 const EwmmOptions& options, bool parallel) {
  EwmmResult result;
  for (const auto& [letter, count] : census.counts()) {
    if (machine.output_letter_index(letter) == MealyMachine::kNone) return result;
  }
  const std::size_t sigma = machine.output_letters().size();
  Counts target(sigma);
  for (std::size_t j = 0; j < sigma; ++j) target[j] = census.count(machine.output_letters()[j]);

  if (parallel) parallel::set_threads(options.threads);
  const Prepared prep = prepare(machine, target, parallel);
  const std::size_t n = prep.sub.num_states();
  const std::size_t max_length = n * n;

  std::vector<WalkNode> nodes;
  std::unordered_set<std::vector<std::uint64_t>, VectorHash> seen;
  std::unordered_set<std::vector<std::uint64_t>, VectorHash> checked;
  auto walk_key = [](const WalkNode& node) {
    std::vector<std::uint64_t> key{node.vertex};
    key.insert(key.end(), node.counts.begin(), node.counts.end());
    key.insert(key.end(), node.loops.begin(), node.loops.end());
    return key;
  };

  const std::size_t start = prep.sub.start_index();
  nodes.push_back({start, Counts(sigma, 0), prep.loops_at[start], -1, 0});
  seen.insert(walk_key(nodes[0]));
  std::vector<std::size_t> layer{0};
  bool out_of_budget = false;

  for (std::size_t length = 0;; ++length) {
    // Programs depend only on (counts, loops), so equal pairs are checked once.
    std::vector<Candidate> candidates;
    for (std::size_t i : layer) {
      std::vector<std::uint64_t> key = nodes[i].counts;
      key.insert(key.end(), nodes[i].loops.begin(), nodes[i].loops.end());
      if (checked.insert(std::move(key)).second) candidates.push_back({i, {}, {}});
    }
    const auto accepted =
        check_candidates(prep, nodes, candidates, parallel, result.programs_solved);
    if (accepted) {
      result.verdict = Verdict::kYes;
      result.certificate = make_certificate(prep, nodes, candidates[*accepted]);
      break;
    }
    if (length == max_length || out_of_budget) break;

    std::vector<std::size_t> next;
    for (std::size_t i : layer) {
      for (std::size_t e : prep.sub.out_arcs(nodes[i].vertex)) {
        const auto& arc = prep.sub.arcs()[e];
        WalkNode child{arc.to, nodes[i].counts, nodes[i].loops, static_cast<std::int64_t>(i), e};
        if (arc.write != MealyMachine::kNone) {
          const auto j = static_cast<std::size_t>(arc.write);
          if (++child.counts[j] > target[j]) continue;
        }
        for (std::size_t w = 0; w < prep.words; ++w) child.loops[w] |= prep.loops_at[arc.to][w];
        if (!seen.insert(walk_key(child)).second) continue;
        if (nodes.size() >= options.budget) {
          out_of_budget = true;
          break;
        }
        nodes.push_back(std::move(child));
        next.push_back(nodes.size() - 1);
      }
      if (out_of_budget) break;
    }
    if (next.empty()) break;
    layer = std::move(next);
  }

  result.walk_states = nodes.size();
  if (result.verdict != Verdict::kYes && out_of_budget) result.verdict = Verdict::kUnknown;
  return result;
}

}  // namespace

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kYes:
      return "YES";
    case Verdict::kNo:
      return "NO";
    case Verdict::kUnknown:
      return "UNKNOWN";
  }
  return "?";
}

std::vector<LoopVariable> short_loops(const MealyMachine& simple_machine, std::size_t vertex,
                                      const std::vector<std::uint64_t>& bound) {
  struct Entry {
    std::size_t vertex;
    Counts counts;
    std::size_t parent;
    std::size_t arc;
  };
  const std::size_t n = simple_machine.num_states();
  const std::size_t sigma = bound.size();

  // layers[d] holds the distinct (end vertex, counts) of walks of length d.
  std::vector<std::vector<Entry>> layers(1);
  layers[0].push_back({vertex, Counts(sigma, 0), 0, 0});
  std::unordered_set<Counts, VectorHash> found;
  std::vector<LoopVariable> loops;

  for (std::size_t d = 1; d <= n; ++d) {
    std::unordered_set<std::vector<std::uint64_t>, VectorHash> seen;
    std::vector<Entry> layer;
    for (std::size_t idx = 0; idx < layers[d - 1].size(); ++idx) {
      const Entry& from = layers[d - 1][idx];
      for (std::size_t e : simple_machine.out_arcs(from.vertex)) {
        const auto& arc = simple_machine.arcs()[e];
        Counts counts = from.counts;
        if (arc.write != MealyMachine::kNone) {
          const auto j = static_cast<std::size_t>(arc.write);
          if (++counts[j] > bound[j]) continue;
        }
        std::vector<std::uint64_t> key = counts;
        key.push_back(arc.to);
        if (!seen.insert(std::move(key)).second) continue;
        layer.push_back({arc.to, counts, idx, e});

        const bool neutral = std::all_of(counts.begin(), counts.end(),
                                         [](std::uint64_t x) { return x == 0; });
        if (arc.to != vertex || neutral || found.count(counts)) continue;
        found.insert(counts);
        std::vector<std::size_t> cycle{e};
        for (std::size_t level = d - 1, at = idx; level > 0; --level) {
          cycle.push_back(layers[level][at].arc);
          at = layers[level][at].parent;
        }
        std::reverse(cycle.begin(), cycle.end());
        loops.push_back({counts, vertex, std::move(cycle)});
      }
    }
    if (layer.empty()) break;
    layers.push_back(std::move(layer));
  }
  return loops;
}

EwmmResult solve_ewmm(const MealyMachine& machine, const CensusRequirement& census,
                      const EwmmOptions& options) {
  return solve(machine, census, options, /*parallel=*/true);
}

EwmmResult solve_ewmm_serial(const MealyMachine& machine, const CensusRequirement& census,
                             const EwmmOptions& options) {
  return solve(machine, census, options, /*parallel=*/false);
}

Computation expand_certificate(const MealyMachine& original, const EwmmCertificate& certificate) {
  Computation computation;
  for (std::size_t e : mealy::expand(certificate.subdivided, certificate.walk)) {
    if (e % 2 == 0) computation.transitions.push_back(e / 2);
  }
  computation.input = mealy::input_of(original, computation.transitions);
  return computation;
}

}  // namespace nonum::census
