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

#include "nonum/oracle.hpp"
#include "nonum/random_instances.hpp"
#include "nonum/variety.hpp"
#include "nonum/verify.hpp"

using nonum::Integer;
using nonum::Multiset;
using namespace nonum::variety;

namespace {

Multiset ms(std::initializer_list<std::pair<int, int>> entries) {
  std::vector<Multiset::Entry> out;
  for (auto [v, m] : entries) out.push_back({v, m});
  return Multiset(out);
}

Multiset of(std::initializer_list<int> values) {
  return Multiset::from_values(std::vector<Integer>(values.begin(), values.end()));
}

// Every way to pair up the elements of a with those of b and c.
std::set<std::multiset<std::tuple<int, int, int>>> all_matchings(std::vector<int> a,
                                                                  std::vector<int> b,
                                                                  std::vector<int> c) {
  std::set<std::multiset<std::tuple<int, int, int>>> out;
  std::sort(b.begin(), b.end());
  do {
    std::sort(c.begin(), c.end());
    do {
      std::multiset<std::tuple<int, int, int>> m;
      for (std::size_t i = 0; i < a.size(); ++i) m.insert({a[i], b[i], c[i]});
      out.insert(m);
    } while (std::next_permutation(c.begin(), c.end()));
  } while (std::next_permutation(b.begin(), b.end()));
  return out;
}

std::multiset<std::tuple<int, int, int>> as_set(const TripleCover& cover) {
  std::multiset<std::tuple<int, int, int>> out;
  for (const auto& t : cover.triples) {
    for (int i = 0; i < t.count; ++i) {
      out.insert({static_cast<int>(t.first), static_cast<int>(t.second),
                  static_cast<int>(t.third)});
    }
  }
  return out;
}

std::set<Integer> distinct(const std::vector<const Multiset*>& parts) {
  std::set<Integer> out;
  for (const Multiset* m : parts) {
    for (const auto& e : m->entries()) out.insert(e.value);
  }
  return out;
}

}  // namespace

TEST_CASE("multiset basics") {
  const Multiset a = of({5, 3, 3});
  CHECK(a.cardinality() == 3);
  CHECK(a.variety() == 2);
  CHECK(a.total() == 11);
  CHECK(a.multiplicity(3) == 2);
  CHECK(a.multiplicity(4) == 0);
  CHECK(a.entries()[0].value == 5);
  CHECK_THROWS_AS(ms({{1, 1}, {1, 2}}), nonum::InvalidMultiset);
  CHECK_THROWS_AS(ms({{1, 0}}), nonum::InvalidMultiset);
}

TEST_CASE("subset sum {3 x2, 5 x1}, s = 11") {
  const Multiset a = ms({{3, 2}, {5, 1}});
  std::vector<SubsetCertificate> solutions;  // by enumeration
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 1; ++y) {
      if (3 * x + 5 * y == 11) solutions.push_back({{{3, x}, {5, y}}});
    }
  }
  REQUIRE(solutions.size() == 1);
  const auto cert = solve_subset_sum(a, 11);
  REQUIRE(cert.has_value());
  CHECK(*cert == solutions[0]);
}

TEST_CASE("subset sum with target 0 or parity obstruction") {
  CHECK(solve_subset_sum(ms({{7, 3}, {-2, 1}}), 0)->counts.empty());
  CHECK(solve_subset_sum(Multiset(), 0).has_value());
  CHECK_FALSE(solve_subset_sum(Multiset(), 1).has_value());
  CHECK_FALSE(solve_subset_sum(ms({{2, 3}}), 5).has_value());
}

TEST_CASE("subset sum with negative values") {
  const Multiset a = ms({{-4, 2}, {3, 3}});
  const auto cert = solve_subset_sum(a, -2);
  REQUIRE(cert.has_value());
  CHECK(nonum::verify::valid_subset(a, -2, *cert));
  CHECK(nonum::oracle::brute_subset_sum(a, -2));
}

TEST_CASE("partition examples") {
  CHECK(solve_partition(ms({{1, 2}}))->counts == std::map<Integer, Integer>{{1, 1}});
  CHECK_FALSE(solve_partition(ms({{1, 3}})).has_value());
  CHECK_FALSE(partition_program(ms({{1, 3}})).has_value());
  const Multiset a = ms({{2, 2}, {3, 2}, {4, 1}});
  REQUIRE(nonum::oracle::brute_partition(a));
  const auto cert = solve_partition(a);
  REQUIRE(cert.has_value());
  CHECK(nonum::verify::valid_partition(a, *cert));
  CHECK(solve_partition(Multiset()).has_value());
}

TEST_CASE("num3dm {1,2} {1,2} {3,3}, s = 6") {
  const auto cover = solve_num_3dm(of({1, 2}), of({1, 2}), of({3, 3}), 6);
  REQUIRE(cover.has_value());
  std::set<std::multiset<std::tuple<int, int, int>>> valid;
  for (const auto& m : all_matchings({1, 2}, {1, 2}, {3, 3})) {
    if (std::all_of(m.begin(), m.end(),
                    [](auto t) { return std::get<0>(t) + std::get<1>(t) + std::get<2>(t) == 6; })) {
      valid.insert(m);
    }
  }
  REQUIRE(valid.size() == 1);
  CHECK(as_set(*cover) == *valid.begin());
  CHECK(cover->triples == std::vector<Triple>{{1, 2, 3, 1}, {2, 1, 3, 1}});
}

TEST_CASE("num3dm forced and impossible triples") {
  CHECK(solve_num_3dm(of({1}), of({1}), of({1}), 3)->triples == std::vector<Triple>{{1, 1, 1, 1}});
  CHECK_FALSE(solve_num_3dm(of({1}), of({1}), of({1}), 0).has_value());
  CHECK_THROWS_AS(solve_num_3dm(of({1}), of({1, 2}), of({1}), 3), CardinalityMismatch);
  CHECK(solve_num_3dm(Multiset(), Multiset(), Multiset(), 5)->triples.empty());
}

TEST_CASE("nmts examples") {
  const auto cover = solve_nmts(of({1, 2}), of({3, 4}), of({4, 6}));
  REQUIRE(cover.has_value());
  std::set<std::multiset<std::tuple<int, int, int>>> valid;
  for (const auto& m : all_matchings({1, 2}, {3, 4}, {4, 6})) {
    if (std::all_of(m.begin(), m.end(),
                    [](auto t) { return std::get<0>(t) + std::get<1>(t) == std::get<2>(t); })) {
      valid.insert(m);
    }
  }
  REQUIRE(valid.size() == 1);
  CHECK(as_set(*cover) == *valid.begin());
  CHECK(solve_nmts(of({1}), of({1}), of({2}))->triples == std::vector<Triple>{{1, 1, 2, 1}});
  CHECK_FALSE(solve_nmts(of({1}), of({1}), of({3})).has_value());
  CHECK_THROWS_AS(solve_nmts(of({1}), of({1}), of({})), CardinalityMismatch);
}

TEST_CASE("three-partition examples") {
  const Multiset a = ms({{1, 2}, {2, 2}, {3, 2}});
  REQUIRE(nonum::oracle::brute_3partition(a));
  const auto cover = solve_3partition(a);
  REQUIRE(cover.has_value());
  CHECK(cover->triples == std::vector<Triple>{{1, 2, 3, 2}});
  CHECK(solve_3partition(ms({{2, 6}}))->triples == std::vector<Triple>{{2, 2, 2, 2}});
  CHECK_THROWS_AS(solve_3partition(ms({{1, 4}})), NotDivisibleBy3);
  CHECK_FALSE(solve_3partition(of({1, 1, 1, 1, 1, 2})).has_value());  // 7 / 2
  CHECK(solve_3partition(Multiset())->triples.empty());
}

TEST_CASE("three-partition weights 1, 2 and 3 in the usage rows") {
  const TripleProgram tp = three_partition_program(ms({{2, 6}}), 6);
  REQUIRE(tp.program.variables.size() == 1);
  CHECK(tp.program.constraints[0].coefficients.at("x1_1_1") == 3);
  const TripleProgram mixed = three_partition_program(ms({{1, 2}, {4, 1}}), 6);
  // (1, 1, 4) in its three orders
  CHECK(mixed.patterns.size() == 3);
  for (const auto& [name, coef] : mixed.program.constraints[0].coefficients) CHECK(coef == 2);
  for (const auto& [name, coef] : mixed.program.constraints[1].coefficients) CHECK(coef == 1);
}

TEST_CASE("variable counts stay within the variety bounds") {
  nonum::random::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Multiset a = nonum::random::random_multiset(rng);
    const Multiset b = nonum::random::random_multiset(rng);
    const Multiset c = nonum::random::random_multiset(rng);
    const Integer s = rng.uniform(0, 60);
    CHECK(subset_sum_program(a, s).variables.size() <= a.variety());
    if (auto p = partition_program(a)) CHECK(p->variables.size() <= a.variety());
    const std::size_t u = distinct({&a, &b, &c}).size();
    CHECK(num_3dm_program(a, b, c, s).program.variables.size() <= u * u * u);
    CHECK(nmts_program(a, b, c).program.variables.size() <= u * u * u);
    const std::size_t k = a.variety();
    CHECK(three_partition_program(a, s).program.variables.size() <= k * k * k);
  }
}

TEST_CASE("more distinct C values than pair sums means no") {
  nonum::random::Rng rng(13);
  int fired = 0;
  for (int i = 0; i < 2000 && fired < 50; ++i) {
    const auto n = rng.uniform(1, 4);
    std::vector<Integer> av, bv, cv;
    for (int j = 0; j < n; ++j) {
      av.emplace_back(rng.uniform(0, 2));
      bv.emplace_back(rng.uniform(0, 2));
      cv.emplace_back(rng.uniform(0, 20));
    }
    const Multiset a = Multiset::from_values(av), b = Multiset::from_values(bv),
                   c = Multiset::from_values(cv);
    std::set<Integer> sums;
    for (const auto& x : a.entries()) {
      for (const auto& y : b.entries()) sums.insert(x.value + y.value);
    }
    if (c.variety() <= sums.size()) continue;
    ++fired;
    const Integer s = rng.uniform(0, 24);
    CHECK_FALSE(solve_num_3dm(a, b, c, s).has_value());
    CHECK_FALSE(nonum::oracle::brute_num3dm(a, b, c, s));
  }
  CHECK(fired == 50);
}

TEST_CASE("random corpora agree with the oracles") {
  const nonum::verify::Options options;
  for (const auto& report :
       {nonum::verify::check_subset_sum(options), nonum::verify::check_partition(options),
        nonum::verify::check_3partition(options), nonum::verify::check_num3dm(options),
        nonum::verify::check_nmts(options)}) {
    INFO(report.name);
    CHECK(report.instances >= 500);
    CHECK(report.agreements == report.instances);
    CHECK(report.certificates == report.yes);
    CHECK(report.certificate_failures == 0);
    CHECK(report.errors == 0);
  }
}

TEST_CASE("certificate validators reject wrong certificates") {
  const Multiset a = ms({{3, 2}, {5, 1}});
  CHECK_FALSE(nonum::verify::valid_subset(a, 11, {{{3, 3}}}));
  CHECK_FALSE(nonum::verify::valid_subset(a, 11, {{{3, 1}, {5, 1}}}));
  CHECK_FALSE(nonum::verify::valid_subset(a, 4, {{{4, 1}}}));
  CHECK_FALSE(nonum::verify::valid_num3dm(of({1, 2}), of({1, 2}), of({3, 3}), 6,
                                          {{{1, 2, 3, 2}}}));
  CHECK_FALSE(nonum::verify::valid_3partition(ms({{1, 2}, {2, 2}, {3, 2}}), {{{1, 2, 3, 1}}}));
}
