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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "nonum/census_solvers.hpp"
#include "nonum/oracle.hpp"
#include "nonum/random_instances.hpp"
#include "nonum/reductions.hpp"
#include "nonum/verify.hpp"

using namespace nonum::reductions;
using nonum::Integer;
using nonum::Multiset;
using nonum::census::Verdict;

namespace {

// Plain bitmask partition check over the expanded values.
bool partitions(const Multiset& a) {
  const std::vector<Integer> v = a.expand();
  const Integer total = a.total();
  for (std::size_t mask = 0; mask < (std::size_t{1} << v.size()); ++mask) {
    Integer sum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (mask >> i & 1) sum += v[i];
    }
    if (2 * sum == total) return true;
  }
  return false;
}

MulticoloredGraph triangle() {
  return {{{"a1"}, {"b1"}, {"c1"}}, {{"a1", "b1"}, {"b1", "c1"}, {"a1", "c1"}}};
}

bool gwmm_yes(const GwmmInstance& inst) {
  return nonum::census::solve_gwmm(inst.machine, inst.word, inst.census).has_value();
}

}  // namespace

TEST_CASE("subset sum to partition: examples") {
  const Multiset a{{{1, 1}, {2, 1}}};
  const Multiset image = subsetsum_to_partition(a, 1);
  CHECK(image == Multiset{{{1, 2}, {2, 1}}});
  CHECK(partitions(image));

  const Multiset b{{{3, 2}, {4, 1}}};
  const Multiset half = subsetsum_to_partition(b, 5);
  CHECK(half.multiplicity(0) == 1);
  CHECK(partitions(half) == nonum::oracle::brute_subset_sum(b, 5));

  const Multiset whole = subsetsum_to_partition(b, 10);
  CHECK(partitions(whole));
  CHECK(whole.variety() <= b.variety() + 1);

  CHECK_THROWS_AS(subsetsum_to_partition(b, 11), TargetOutOfRange);
  CHECK_THROWS_AS(subsetsum_to_partition(b, -1), TargetOutOfRange);
}

TEST_CASE("subset sum to partition: equivalence on random instances") {
  nonum::random::Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const Multiset a = nonum::random::random_multiset(rng, 10, 15);
    const Integer s = rng.uniform(0, static_cast<std::int64_t>(a.total()));
    const Multiset image = subsetsum_to_partition(a, s);
    CHECK(image.variety() <= a.variety() + 1);
    CHECK(partitions(image) == nonum::oracle::brute_subset_sum(a, s));
  }
  const auto report = nonum::verify::check_subsetsum_to_partition({});
  CHECK(report.agreements == report.instances);
}

TEST_CASE("mcc: triangle is a clique") {
  const auto inst = mcc_to_gwmm(triangle());
  const auto trace = nonum::census::solve_gwmm(inst.machine, inst.word, inst.census);
  REQUIRE(trace.has_value());
  CHECK(nonum::verify::valid_gwmm(inst.machine, inst.word, inst.census, *trace));
}

TEST_CASE("mcc: missing edges between two classes") {
  MulticoloredGraph g{{{"a1", "a2", "a3"}, {"b1", "b2", "b3"}, {"c1", "c2", "c3"}}, {}};
  for (const auto& u : g.classes[2]) {
    g.edges.emplace_back("a1", u);
    g.edges.emplace_back("a2", u);
    g.edges.emplace_back("a3", u);
    g.edges.emplace_back("b1", u);
    g.edges.emplace_back("b2", u);
    g.edges.emplace_back("b3", u);
  }
  CHECK_FALSE(nonum::oracle::brute_mcc_clique(g));
  CHECK_FALSE(gwmm_yes(mcc_to_gwmm(g)));
}

TEST_CASE("mcc: machine and word sizes") {
  for (std::size_t k = 2; k <= 4; ++k) {
    MulticoloredGraph g;
    for (std::size_t i = 0; i < k; ++i) {
      g.classes.push_back({"v" + std::to_string(i) + "a", "v" + std::to_string(i) + "b"});
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (const auto& u : g.classes[i]) {
          for (const auto& v : g.classes[j]) g.edges.emplace_back(u, v);
        }
      }
    }
    const auto inst = mcc_to_gwmm(g);
    CHECK(inst.machine.input_alphabet().size() == k + 3 * k * (k - 1));
    CHECK(inst.machine.output_alphabet().size() == 1 + 2 * k * (k - 1));
    CHECK(inst.machine.num_states() == 1 + k * (2 + 4 * (k - 1)));
    const std::size_t n = 2 * k;
    CHECK(inst.word.size() <= 8 * k * k * n * n * n);
  }
  const auto tri = mcc_to_gwmm(triangle());
  CHECK(tri.machine.input_alphabet().size() == 21);
  CHECK(tri.machine.output_alphabet().size() == 13);
  CHECK(tri.machine.num_states() == 31);
}

TEST_CASE("mcc: malformed graphs") {
  CHECK_THROWS_AS(validate({{{"a"}}, {}}), MalformedGraph);
  CHECK_THROWS_AS(validate({{{"a", "a2"}, {"b"}}, {{"a", "a2"}}}), MalformedGraph);
  CHECK_THROWS_AS(validate({{{"a"}, {"b"}}, {{"a", "z"}}}), MalformedGraph);
  CHECK_THROWS_AS(validate({{{"a"}, {"a"}}, {}}), MalformedGraph);
  CHECK_THROWS_AS(validate({{{"a"}, {"b"}}, {{"a", "b"}, {"b", "a"}}}), MalformedGraph);
  CHECK_THROWS_AS(validate({{{"a1", "a2"}, {"b1", "b2"}}, {{"a1", "b1"}, {"a2", "b2"}}}),
                  MalformedGraph);
  CHECK_NOTHROW(validate(triangle()));
  CHECK_THROWS_AS(mcc_to_gwmm({{{"a1", "a2"}, {"b1"}}, {{"a1", "a2"}}}), MalformedGraph);
}

TEST_CASE("mcc: agreement with brute-force clique search") {
  nonum::verify::Options options;
  options.graph_instances = 15;
  const auto report = nonum::verify::check_mcc(options);
  CHECK(report.instances == 15);
  CHECK(report.agreements == report.instances);
  CHECK(report.certificate_failures == 0);
}

TEST_CASE("heat: examples") {
  const auto one = heat_to_ewmm({1, {{2, 1}}, 1});
  CHECK(nonum::census::solve_ewmm(one.machine, one.census).verdict == Verdict::kYes);
  CHECK(one.machine.num_states() == 2);

  for (std::uint64_t deadline = 2; deadline <= 6; ++deadline) {
    const HeatInstance h{1, {{2, 2}}, deadline};
    CHECK_FALSE(nonum::oracle::brute_heat_schedule(h));
    const auto two = heat_to_ewmm(h);
    CHECK(nonum::census::solve_ewmm(two.machine, two.census).verdict == Verdict::kNo);
  }

  const auto none = heat_to_ewmm({1, {}, 0});
  CHECK(nonum::census::solve_ewmm(none.machine, none.census).verdict == Verdict::kYes);
  CHECK_THROWS_AS(heat_to_ewmm({1, {{1, 3}}, 2}), std::invalid_argument);
}

TEST_CASE("heat: machine shape") {
  for (std::uint64_t k = 1; k <= 4; ++k) {
    const auto inst = heat_to_ewmm({k, {{0, 1}}, 3});
    CHECK(inst.machine.num_states() == k + 1);
    CHECK(inst.machine.input_alphabet().size() == 1);
    CHECK(inst.machine.output_alphabet().size() <= 2 * k + 1);
    CHECK(inst.census.count("0") == 3);
  }
  const auto report = nonum::verify::check_heat({});
  CHECK(report.agreements == report.instances);
  CHECK(report.unknowns == 0);
}

TEST_CASE("splits: the example game") {
  const SplitsInstance game{{4, 1, 2, 1, 1, 1, 4}, {{1, 1}, {3, 3}, {4, 1}, {5, 2}}};
  CHECK(gwmm_yes(splits_to_gwmm(game)));
  CHECK(nonum::oracle::brute_splits_game(game));
  const SplitsInstance mutated{{4, 1, 2, 1, 1, 1, 4}, {{1, 2}, {3, 2}, {4, 1}, {5, 2}}};
  CHECK_FALSE(gwmm_yes(splits_to_gwmm(mutated)));
  CHECK_FALSE(nonum::oracle::brute_splits_game(mutated));

  const auto inst = splits_to_gwmm(game);
  CHECK(inst.machine.num_states() == 5 + 2);
  CHECK(inst.word.size() == 7);
}

TEST_CASE("splits: small games") {
  CHECK(gwmm_yes(splits_to_gwmm({{3}, {{3, 1}}})));
  CHECK_FALSE(gwmm_yes(splits_to_gwmm({{1, 1}, {{1, 1}, {3, 1}}})));
  CHECK(gwmm_yes(splits_to_gwmm({{1, 1}, {{1, 1}, {2, 1}}})));
  CHECK_THROWS_AS(splits_to_gwmm({{1, 1}, {{1, 1}}}), CensusSizeMismatch);
  CHECK_THROWS_AS(splits_to_gwmm({{1}, {{1, 1}, {2, 1}}}), CensusSizeMismatch);
}

TEST_CASE("splits: agreement with exhaustive play") {
  const auto report = nonum::verify::check_splits({});
  CHECK(report.instances >= 300);
  CHECK(report.agreements == report.instances);
  CHECK(report.yes > 0);
}
