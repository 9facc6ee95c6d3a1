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

#include "nonum/oracle.hpp"
#include "nonum/random_instances.hpp"

using namespace nonum::oracle;
using nonum::Multiset;
using nonum::mealy::MealyMachine;

namespace {

MealyMachine identity() {
  return MealyMachine({"q"}, "q", {"a", "b"}, {"a", "b"},
                      {{"q", "a", "q", "a"}, {"q", "b", "q", "b"}});
}

}  // namespace

TEST_CASE("subset sum oracle") {
  CHECK(brute_subset_sum(Multiset{{{3, 2}, {5, 1}}}, 11));
  CHECK(brute_subset_sum(Multiset{{{3, 2}, {5, 1}}}, 0));
  CHECK(brute_subset_sum(Multiset{}, 0));
  CHECK_FALSE(brute_subset_sum(Multiset{{{2, 3}}}, 5));
  CHECK(brute_subset_sum(Multiset{{{-4, 1}, {3, 2}}}, 2));
  CHECK_FALSE(brute_subset_sum(Multiset{{{3, 2}, {5, 1}}}, 12));
}

TEST_CASE("partition and 3-partition oracles") {
  CHECK(brute_partition(Multiset{}));
  CHECK_FALSE(brute_partition(Multiset{{{1, 3}}}));
  CHECK(brute_partition(Multiset{{{1, 2}, {2, 1}}}));
  CHECK(brute_3partition(Multiset{{{1, 3}}}));
  CHECK(brute_3partition(Multiset{{{1, 3}, {2, 3}, {3, 3}}}));
  CHECK_FALSE(brute_3partition(Multiset{{{1, 3}, {2, 3}}}));
  CHECK_FALSE(brute_3partition(Multiset{{{1, 2}, {2, 1}, {4, 3}}}));
  CHECK_THROWS_AS(brute_3partition(Multiset{{{1, 2}}}), std::invalid_argument);
}

TEST_CASE("matching oracles") {
  const Multiset a{{{1, 2}}};
  const Multiset b{{{2, 1}, {3, 1}}};
  CHECK(brute_num3dm(a, b, Multiset{{{3, 1}, {2, 1}}}, 6));
  CHECK_FALSE(brute_num3dm(a, b, Multiset{{{4, 2}}}, 6));
  CHECK(brute_nmts(a, b, Multiset{{{3, 1}, {4, 1}}}));
  CHECK_FALSE(brute_nmts(a, b, Multiset{{{3, 2}}}));
  CHECK_FALSE(brute_nmts(a, b, Multiset{{{3, 1}}}));
}

TEST_CASE("gwmm oracle") {
  CHECK(brute_gwmm(identity(), {"a", "b"}, {{"a", 1}, {"b", 1}}));
  CHECK_FALSE(brute_gwmm(identity(), {"a", "b"}, {{"a", 2}}));
  const MealyMachine eps({"p", "q"}, "p", {"a", "_"}, {"x", "_"},
                         {{"p", "_", "q", "x"}, {"q", "_", "p", "_"}, {"p", "a", "p", "_"}});
  CHECK(brute_gwmm(eps, {"a"}, {{"x", 3}}));
  CHECK(brute_gwmm(eps, {}, {}));
}

TEST_CASE("ewmm oracle") {
  nonum::random::Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    CHECK(brute_ewmm(nonum::random::random_machine(rng), {}));
  }
  CHECK_FALSE(brute_ewmm(identity(), {{"d", 1}}));
  CHECK(brute_ewmm(identity(), {{"a", 4}, {"b", 2}}));
}

TEST_CASE("graph, heat and splits oracles") {
  CHECK(brute_mcc_clique({{{"a"}, {"b"}, {"c"}}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}}));
  CHECK_FALSE(brute_mcc_clique({{{"a"}, {"b"}, {"c"}}, {{"a", "b"}, {"b", "c"}}}));
  CHECK(brute_heat_schedule({1, {{2, 1}}, 1}));
  CHECK_FALSE(brute_heat_schedule({1, {{2, 2}}, 5}));
  CHECK_FALSE(brute_heat_schedule({1, {{1, 3}}, 2}));
  CHECK(brute_heat_schedule({1, {}, 0}));
  CHECK(brute_splits_game({{3}, {{3, 1}}}));
  CHECK_FALSE(brute_splits_game({{1, 1}, {{1, 1}, {3, 1}}}));
}

TEST_CASE("caps reject large instances") {
  Caps caps;
  caps.cardinality = 4;
  CHECK_THROWS_AS(brute_subset_sum(Multiset{{{1, 5}}}, 1, caps), InstanceTooLarge);
  CHECK_NOTHROW(brute_subset_sum(Multiset{{{1, 4}}}, 1, caps));
  CHECK_THROWS_AS(brute_partition(Multiset{{{1, 30}}}), InstanceTooLarge);
  caps.word_length = 1;
  CHECK_THROWS_AS(brute_gwmm(identity(), {"a", "b"}, {}, caps), InstanceTooLarge);
  caps.census_total = 2;
  CHECK_THROWS_AS(brute_ewmm(identity(), {{"a", 3}}, caps), InstanceTooLarge);
  caps.gaps = 1;
  CHECK_THROWS_AS(brute_splits_game({{1, 1}, {{1, 2}}}, caps), InstanceTooLarge);
  caps.vertices_per_class = 1;
  CHECK_THROWS_AS(brute_mcc_clique({{{"a", "a2"}, {"b"}}, {{"a", "b"}}}, caps), InstanceTooLarge);
}

TEST_CASE("oracles are deterministic") {
  nonum::random::Rng first(47);
  nonum::random::Rng second(47);
  for (int i = 0; i < 50; ++i) {
    const MealyMachine m1 = nonum::random::random_machine(first);
    const MealyMachine m2 = nonum::random::random_machine(second);
    const auto w1 = nonum::random::random_word_instance(first, m1, 5, 5);
    const auto w2 = nonum::random::random_word_instance(second, m2, 5, 5);
    REQUIRE(w1.word == w2.word);
    CHECK(brute_gwmm(m1, w1.word, w1.census) == brute_gwmm(m2, w2.word, w2.census));
    CHECK(brute_gwmm(m1, w1.word, w1.census) == brute_gwmm(m1, w1.word, w1.census));
    CHECK(brute_ewmm(m1, w1.census) == brute_ewmm(m2, w2.census));
  }
}

TEST_CASE("partition oracle matches subset sum at half the total") {
  nonum::random::Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const Multiset a = nonum::random::random_multiset(rng, 10, 12);
    const nonum::Integer total = a.total();
    const bool expected = total % 2 == 0 && brute_subset_sum(a, total / 2);
    CHECK(brute_partition(a) == expected);
  }
}
