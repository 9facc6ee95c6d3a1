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

#include <sstream>

#include "nonum/instance_io.hpp"
#include "nonum/random_instances.hpp"

using namespace nonum::io;
using nonum::Multiset;

namespace {

template <typename Parse>
auto parse_text(const std::string& text, Parse parse) {
  std::istringstream in(text);
  return parse(in, "t.txt");
}

MultisetInstance multiset(const std::string& text) {
  return parse_text(text, [](std::istream& in, const std::string& src) { return parse_multiset(in, src); });
}

// Returns the message of the ParseError thrown by f, or an empty string.
template <typename F>
std::string parse_error(F f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("multiset grammar") {
  const MultisetInstance inst = multiset("3 2\n5 1\ns=11");
  CHECK(inst.values == Multiset{{{3, 2}, {5, 1}}});
  REQUIRE(inst.target.has_value());
  CHECK(*inst.target == 11);

  const MultisetInstance plain = multiset("# comment\n7\n-2 3   # trailing\n\n");
  CHECK(plain.values == Multiset{{{7, 1}, {-2, 3}}});
  CHECK_FALSE(plain.target.has_value());

  const MultisetInstance empty = multiset("");
  CHECK(empty.values.empty());
  CHECK(multiset("123456789012345678901234567890 1").values.total() ==
        nonum::parse_integer("123456789012345678901234567890"));
}

TEST_CASE("multiset errors carry positions") {
  const std::string dup = parse_error([] { multiset("3 2\n4 1\n3 1\n"); });
  CHECK(dup.find("t.txt:3:") == 0);
  CHECK(dup.find("3") != std::string::npos);
  CHECK(dup.find("line 1") != std::string::npos);

  const std::string neg = parse_error([] { multiset("3 -1\n"); });
  CHECK(neg.find("t.txt:1:3:") == 0);

  const std::string junk = parse_error([] { multiset("3 2\n  x\n"); });
  CHECK(junk.find("t.txt:2:3:") == 0);

  CHECK_FALSE(parse_error([] { multiset("3 2 4\n"); }).empty());
  CHECK_FALSE(parse_error([] { multiset("s=1\ns=2\n"); }).empty());
  CHECK_FALSE(parse_error([] { multiset("s=\n"); }).empty());

  try {
    multiset("1\n1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("triples") {
  std::istringstream in("A:\n1 2\nB:\n2 1\n3 1\nC:\n3 1\n2 1\ns=6\n");
  const TripleInstance t = parse_triples(in, "t");
  CHECK(t.a == Multiset{{{1, 2}}});
  CHECK(t.b.variety() == 2);
  CHECK(t.c.variety() == 2);
  CHECK(*t.target == 6);

  std::istringstream sum("A:\n1 1\nB:\n2 1\nS:\n3 1\n");
  CHECK(parse_triples(sum, "t", 'S').c == Multiset{{{3, 1}}});
  std::istringstream missing("A:\n1 1\nB:\n2 1\n");
  CHECK_THROWS_AS(parse_triples(missing, "t"), ParseError);
  std::istringstream orphan("1 1\nA:\n");
  CHECK_THROWS_AS(parse_triples(orphan, "t"), ParseError);
}

TEST_CASE("machines") {
  const std::string text =
      "states: q0 q1\nstart: q0\ninput: a _\noutput: x _\nword: a a\n"
      "q0 a -> q1 x\nq1 _ -> q0 _\ncensus:\nx 2\n";
  std::istringstream in(text);
  const MachineInstance inst = parse_machine(in, "m");
  CHECK(inst.machine.num_states() == 2);
  CHECK(inst.machine.transitions().size() == 2);
  CHECK(*inst.word == nonum::mealy::Word{"a", "a"});
  CHECK(inst.census.count("x") == 2);

  std::istringstream bad("states: q0\nstart: q9\ninput: a\noutput: x\n");
  CHECK_THROWS_AS(parse_machine(bad, "m"), ParseError);
  std::istringstream arrow("states: q0\nstart: q0\ninput: a\noutput: x\nq0 a q0 x\n");
  const std::string msg = parse_error([&] { parse_machine(arrow, "m"); });
  CHECK(msg.find("m:5:") == 0);
}

TEST_CASE("reduction inputs") {
  std::istringstream graph("k 2\nclass 1: a1 a2\nclass 2: b1\nedge a1 b1\n");
  const auto g = parse_graph(graph, "g");
  CHECK(g.k() == 2);
  CHECK(g.classes[0].size() == 2);
  CHECK(g.edges.size() == 1);
  std::istringstream short_graph("k 3\nclass 1: a\nclass 2: b\n");
  CHECK_THROWS_AS(parse_graph(short_graph, "g"), ParseError);

  std::istringstream heat("k 1\ndeadline 4\njob 2 1\njob 0 2\n");
  const auto h = parse_heat(heat, "h");
  CHECK(h.threshold == 1);
  CHECK(h.deadline == 4);
  CHECK(h.job_census.at(0) == 2);

  std::istringstream splits("gaps: 4 1 2 1 1 1 4\njob 1 1\njob 3 3\njob 4 1\njob 5 2\n");
  const auto s = parse_splits(splits, "s");
  CHECK(s.gaps == std::vector<std::uint64_t>{4, 1, 2, 1, 1, 1, 4});
  CHECK(s.job_census.at(3) == 3);
  std::istringstream zero("gaps: 0 1\n");
  CHECK_THROWS_AS(parse_splits(zero, "s"), ParseError);
}

TEST_CASE("writers round-trip") {
  nonum::random::Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    MultisetInstance ms{nonum::random::random_multiset(rng), rng.chance(0.5) ? std::optional<nonum::Integer>(rng.uniform(-5, 40)) : std::nullopt};
    std::ostringstream first;
    write_multiset(first, ms);
    const MultisetInstance back = multiset(first.str());
    CHECK(back.values == ms.values);
    CHECK(back.target == ms.target);
    std::ostringstream second;
    write_multiset(second, back);
    CHECK(second.str() == first.str());

    const auto m = nonum::random::random_machine(rng);
    const auto w = nonum::random::random_word_instance(rng, m, 5, 5);
    MachineInstance mi{m, w.word, w.census};
    std::ostringstream mfirst;
    write_machine(mfirst, mi);
    std::istringstream min(mfirst.str());
    const MachineInstance mback = parse_machine(min, "m");
    std::ostringstream msecond;
    write_machine(msecond, mback);
    CHECK(msecond.str() == mfirst.str());
    CHECK(mback.census == mi.census);

    const auto g = nonum::random::random_multicolored_graph(rng);
    std::ostringstream gfirst;
    write_graph(gfirst, g);
    std::istringstream gin(gfirst.str());
    std::ostringstream gsecond;
    write_graph(gsecond, parse_graph(gin, "g"));
    CHECK(gsecond.str() == gfirst.str());
  }

  TripleInstance t{Multiset{{{1, 2}}}, Multiset{{{2, 1}, {3, 1}}}, Multiset{{{3, 2}}}, 6};
  std::ostringstream tfirst;
  write_triples(tfirst, t);
  std::istringstream tin(tfirst.str());
  std::ostringstream tsecond;
  write_triples(tsecond, parse_triples(tin, "t"));
  CHECK(tsecond.str() == tfirst.str());

  const nonum::reductions::HeatInstance h{2, {{0, 1}, {3, 2}}, 5};
  std::ostringstream hfirst;
  write_heat(hfirst, h);
  std::istringstream hin(hfirst.str());
  std::ostringstream hsecond;
  write_heat(hsecond, parse_heat(hin, "h"));
  CHECK(hsecond.str() == hfirst.str());

  const nonum::reductions::SplitsInstance s{{2, 1}, {{1, 1}, {3, 1}}};
  std::ostringstream sfirst;
  write_splits(sfirst, s);
  std::istringstream sin(sfirst.str());
  std::ostringstream ssecond;
  write_splits(ssecond, parse_splits(sin, "s"));
  CHECK(ssecond.str() == sfirst.str());
}
