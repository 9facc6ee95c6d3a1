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

// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nonum/census_solvers.hpp"
#include "nonum/mealy.hpp"
#include "nonum/oracle.hpp"
#include "nonum/random_instances.hpp"
#include "nonum/reductions.hpp"
#include "nonum/verify.hpp"

namespace {

using nonum::census::Verdict;
using nonum::mealy::CensusRequirement;
using nonum::mealy::MealyMachine;
using nonum::verify::Report;

struct Outcome {
  bool ok = true;
  std::string detail;
};

bool report_ok(const Report& r, std::size_t min_instances, std::string& detail) {
  detail += r.name + " " + std::to_string(r.agreements) + "/" + std::to_string(r.instances);
  if (r.certificates != r.yes) detail += " (uncertified yes)";
  if (!r.failures.empty()) detail += " [" + r.failures.front() + "]";
  detail += "; ";
  return r.passed() && r.instances >= min_instances && r.certificates == r.yes;
}

Outcome splits_example() {
  Outcome o;
  const nonum::reductions::SplitsInstance game{{4, 1, 2, 1, 1, 1, 4},
                                               {{1, 1}, {3, 3}, {4, 1}, {5, 2}}};
  const auto inst = nonum::reductions::splits_to_gwmm(game);
  const auto trace = nonum::census::solve_gwmm(inst.machine, inst.word, inst.census);
  o.ok = trace && nonum::verify::valid_gwmm(inst.machine, inst.word, inst.census, *trace);
  auto mutated = game;
  mutated.job_census = {{1, 2}, {3, 2}, {4, 1}, {5, 2}};
  const auto no = nonum::reductions::splits_to_gwmm(mutated);
  const bool rejected = !nonum::census::solve_gwmm(no.machine, no.word, no.census);
  o.ok = o.ok && rejected;
  o.detail = std::string("original ") + (trace ? "YES" : "NO") + ", mutated " + (rejected ? "NO" : "YES");
  return o;
}

Outcome variety(const nonum::verify::Options& options) {
  Outcome o;
  for (auto check : {nonum::verify::check_subset_sum, nonum::verify::check_partition,
                     nonum::verify::check_3partition, nonum::verify::check_num3dm,
                     nonum::verify::check_nmts}) {
    o.ok = report_ok(check(options), 500, o.detail) && o.ok;
  }
  return o;
}

Outcome ewmm(const nonum::verify::Options& options) {
  Outcome o;
  o.ok = report_ok(nonum::verify::check_ewmm(options), 300, o.detail);
  return o;
}

Outcome gwmm(const nonum::verify::Options& options) {
  Outcome o;
  const Report r = nonum::verify::check_gwmm(options);
  o.ok = report_ok(r, 300, o.detail) && r.guarded >= 30;
  o.detail += "guard path " + std::to_string(r.guarded);
  return o;
}

Outcome mcc(const nonum::verify::Options& options) {
  Outcome o;
  o.ok = report_ok(nonum::verify::check_mcc(options), 50, o.detail);
  const auto tri = nonum::reductions::mcc_to_gwmm(
      {{{"a"}, {"b"}, {"c"}}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}});
  const std::size_t g = tri.machine.input_alphabet().size();
  const std::size_t s = tri.machine.output_alphabet().size();
  const std::size_t n = tri.machine.num_states();
  o.ok = o.ok && g == 21 && s == 13 && n == 31;
  o.detail += "sizes " + std::to_string(g) + "/" + std::to_string(s) + "/" + std::to_string(n);
  return o;
}

Outcome heat() {
  Outcome o;
  std::size_t instances = 0, agreements = 0, forced = 0;
  for (std::uint64_t n0 = 0; n0 <= 5; ++n0) {
    for (std::uint64_t n1 = 0; n0 + n1 <= 5; ++n1) {
      for (std::uint64_t n2 = 0; n0 + n1 + n2 <= 5; ++n2) {
        for (std::uint64_t deadline = 0; deadline <= 7; ++deadline) {
          nonum::reductions::HeatInstance h{1, {}, deadline};
          if (n0) h.job_census[0] = n0;
          if (n1) h.job_census[1] = n1;
          if (n2) h.job_census[2] = n2;
          ++instances;
          const bool expected = nonum::oracle::brute_heat_schedule(h);
          bool got = false;
          if (n0 + n1 + n2 > deadline) {
            try {
              nonum::reductions::heat_to_ewmm(h);
              continue;  // an overfull schedule must be rejected
            } catch (const std::invalid_argument&) {
            }
          } else {
            const auto inst = nonum::reductions::heat_to_ewmm(h);
            const auto r = nonum::census::solve_ewmm(inst.machine, inst.census);
            if (r.verdict == Verdict::kUnknown) continue;
            got = r.verdict == Verdict::kYes;
          }
          if (n2 >= 2) {
            ++forced;
            if (got || expected) continue;
          }
          if (got == expected) ++agreements;
        }
      }
    }
  }
  o.ok = agreements == instances && forced > 0;
  o.detail = std::to_string(agreements) + "/" + std::to_string(instances) + " agree, " +
             std::to_string(forced) + " forced-No instances";
  return o;
}

Outcome decomposition() {
  Outcome o;
  nonum::random::Rng rng(nonum::random::kDefaultSeed);
  std::size_t good = 0;
  for (int i = 0; i < 200; ++i) {
    const MealyMachine g = nonum::random::random_simple_digraph(rng, 6);
    const auto walk = nonum::random::random_computation(rng, g, 40);
    const auto d = nonum::mealy::decompose_walk(g, walk);
    std::map<std::size_t, nonum::Integer> direct;
    for (std::size_t e : walk) direct[e] += 1;
    const std::size_t n = g.num_states();
    bool ok = walk.size() <= 40 && nonum::mealy::arc_census(d) == direct && d.base_walk.size() <= n * n;
    for (const auto& loop : d.loops) ok = ok && loop.cycle.size() <= n;
    good += ok;
  }
  o.ok = good == 200;
  o.detail = std::to_string(good) + "/200 walks";
  return o;
}

Outcome subdivision() {
  Outcome o;
  nonum::random::Rng rng(nonum::random::kDefaultSeed);
  std::size_t good = 0;
  for (int i = 0; i < 100; ++i) {
    const MealyMachine m = nonum::random::random_machine(rng);
    const MealyMachine sub = nonum::mealy::subdivide(m);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    bool simple = true;
    for (const auto& arc : sub.arcs()) simple = pairs.insert({arc.from, arc.to}).second && simple;
    const std::size_t k = m.num_states() + m.input_alphabet().size() + m.output_alphabet().size();
    const std::size_t bound = m.num_states() + m.transitions().size();
    good += simple && sub.num_states() <= bound && bound <= k + k * k * k * k;
  }
  o.ok = good == 100;
  o.detail = std::to_string(good) + "/100 machines";
  return o;
}

}  // namespace

int main() {
  const nonum::verify::Options options;
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "splits example reproduced", 5, splits_example},
      {2, "variety solvers match oracles", 120, [&] { return variety(options); }},
      {3, "exists-word solver matches oracle", 120, [&] { return ewmm(options); }},
      {4, "given-word solver matches oracle", 120, [&] { return gwmm(options); }},
      {5, "clique reduction matches oracle", 600, [&] { return mcc(options); }},
      {6, "heat reduction exhaustive", 60, heat},
      {7, "walk decomposition", 30, decomposition},
      {8, "subdivision audit", 10, subdivision},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && seconds < c.limit;
    failed += !pass;
    std::printf("%s %d %s (%.2fs, limit %.0fs): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
