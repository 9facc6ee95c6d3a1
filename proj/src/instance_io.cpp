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

#include "nonum/instance_io.hpp"

#include <charconv>
#include <map>
#include <set>
#include <vector>

namespace nonum::io {
namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Splits on blanks, cuts '#' comments, and makes ':' a token of its own.
std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    Line line{number, {}};
    std::size_t i = 0;
    while (i < text.size()) {
      const char ch = text[i];
      if (ch == '#') break;
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++i;
        continue;
      }
      if (ch == ':') {
        line.tokens.push_back({":", i + 1});
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
             text[i] != '#' && text[i] != ':') {
        ++i;
      }
      line.tokens.push_back({text.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const Line& line, const Token& token, const std::string& message) const {
    throw ParseError(source_, line.number, token.column, message);
  }
  [[noreturn]] void fail(const Line& line, const std::string& message) const {
    throw ParseError(source_, line.number, 1, message);
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(source_, 0, 0, message);
  }

  Integer integer(const Line& line, const Token& token) const {
    try {
      return parse_integer(token.text);
    } catch (const std::invalid_argument&) {
      fail(line, token, "expected an integer, found '" + token.text + "'");
    }
  }

  std::uint64_t count(const Line& line, const Token& token) const {
    std::uint64_t value = 0;
    const char* end = token.text.data() + token.text.size();
    auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      fail(line, token, "expected a non-negative integer, found '" + token.text + "'");
    }
    return value;
  }

  void arity(const Line& line, std::size_t expected) const {
    if (line.tokens.size() > expected) fail(line, line.tokens[expected], "unexpected token");
    if (line.tokens.size() < expected) {
      fail(line, line.tokens.back(), "expected " + std::to_string(expected) + " fields");
    }
  }

 private:
  std::string source_;
};

bool is_header(const Line& line, const std::string& key) {
  return line.tokens.size() >= 2 && line.tokens[0].text == key && line.tokens[1].text == ":";
}

// "s=<int>" or "s = <int>"; returns std::nullopt if the line is not a target.
std::optional<Integer> target_line(const Reader& r, const Line& line) {
  const auto& first = line.tokens[0].text;
  if (first.rfind("s=", 0) != 0 && !(first == "s" && line.tokens.size() > 1 &&
                                     line.tokens[1].text.rfind('=', 0) == 0)) {
    return std::nullopt;
  }
  std::string joined;
  for (const auto& t : line.tokens) joined += t.text;
  Token value{joined.substr(2), line.tokens[0].column};
  if (value.text.empty()) r.fail(line, line.tokens[0], "missing target after 's='");
  return r.integer(line, value);
}

class MultisetBuilder {
 public:
  void add(const Reader& r, const Line& line) {
    if (line.tokens.size() > 2) r.fail(line, line.tokens[2], "unexpected token");
    const Integer value = r.integer(line, line.tokens[0]);
    Integer multiplicity = 1;
    if (line.tokens.size() == 2) multiplicity = r.integer(line, line.tokens[1]);
    if (multiplicity < 1) {
      r.fail(line, line.tokens[1], "multiplicity of " + to_string(value) + " must be positive");
    }
    auto [it, fresh] = first_line_.emplace(value, line.number);
    if (!fresh) {
      r.fail(line, line.tokens[0],
             "duplicate value " + to_string(value) + " (first given on line " +
                 std::to_string(it->second) + ")");
    }
    entries_.push_back({value, multiplicity});
  }

  Multiset build() const { return Multiset(entries_); }

 private:
  std::vector<Multiset::Entry> entries_;
  std::map<Integer, std::size_t> first_line_;
};

void set_target(const Reader& r, const Line& line, std::optional<Integer>& slot,
                const Integer& value) {
  if (slot) r.fail(line, "target given twice");
  slot = value;
}

void write_entries(std::ostream& out, const Multiset& m) {
  for (const auto& e : m.entries()) out << e.value << ' ' << e.multiplicity << '\n';
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) out += " " + item;
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(line == 0 ? source + ": " + message
                                   : source + ":" + std::to_string(line) + ":" +
                                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

MultisetInstance parse_multiset(std::istream& in, const std::string& source) {
  Reader r(source);
  MultisetBuilder values;
  MultisetInstance out;
  for (const Line& line : read_lines(in)) {
    if (auto target = target_line(r, line)) {
      set_target(r, line, out.target, *target);
    } else {
      values.add(r, line);
    }
  }
  out.values = values.build();
  return out;
}

TripleInstance parse_triples(std::istream& in, const std::string& source, char third) {
  Reader r(source);
  const std::string names = std::string("AB") + third;
  MultisetBuilder sections[3];
  bool seen[3] = {false, false, false};
  int current = -1;
  TripleInstance out;
  for (const Line& line : read_lines(in)) {
    if (line.tokens.size() == 2 && line.tokens[1].text == ":" &&
        line.tokens[0].text.size() == 1 && names.find(line.tokens[0].text[0]) != std::string::npos) {
      current = static_cast<int>(names.find(line.tokens[0].text[0]));
      if (seen[current]) r.fail(line, "section " + line.tokens[0].text + " given twice");
      seen[current] = true;
      continue;
    }
    if (auto target = target_line(r, line)) {
      set_target(r, line, out.target, *target);
      continue;
    }
    if (current < 0) {
      r.fail(line, "value outside a section (expected A:, B: or " + std::string(1, third) + ":)");
    }
    sections[current].add(r, line);
  }
  for (int i = 0; i < 3; ++i) {
    if (!seen[i]) r.fail(std::string("missing section ") + names[i] + ":");
  }
  out.a = sections[0].build();
  out.b = sections[1].build();
  out.c = sections[2].build();
  return out;
}

MachineInstance parse_machine(std::istream& in, const std::string& source) {
  Reader r(source);
  std::optional<std::vector<std::string>> states, input, output;
  std::optional<std::string> start;
  std::optional<mealy::Word> word;
  std::vector<mealy::Transition> transitions;
  mealy::CensusRequirement census;
  std::set<std::string> census_letters;
  bool in_census = false;

  auto rest = [](const Line& line) {
    std::vector<std::string> items;
    for (std::size_t i = 2; i < line.tokens.size(); ++i) items.push_back(line.tokens[i].text);
    return items;
  };
  auto once = [&](const Line& line, bool present) {
    if (present) r.fail(line, "'" + line.tokens[0].text + ":' given twice");
  };

  for (const Line& line : read_lines(in)) {
    const auto& t = line.tokens;
    if (is_header(line, "states")) {
      once(line, states.has_value());
      states = rest(line);
    } else if (is_header(line, "start")) {
      once(line, start.has_value());
      if (t.size() != 3) r.fail(line, "'start:' takes exactly one state");
      start = t[2].text;
    } else if (is_header(line, "input")) {
      once(line, input.has_value());
      input = rest(line);
    } else if (is_header(line, "output")) {
      once(line, output.has_value());
      output = rest(line);
    } else if (is_header(line, "word")) {
      once(line, word.has_value());
      word = rest(line);
      for (std::size_t i = 2; i < t.size(); ++i) {
        if (t[i].text == mealy::kEmpty) r.fail(line, t[i], "the word may not contain '_'");
      }
    } else if (is_header(line, "census")) {
      once(line, in_census);
      if (t.size() > 2) r.fail(line, t[2], "census entries go on their own lines");
      in_census = true;
    } else if (t.size() >= 3 && t[2].text == "->") {
      r.arity(line, 5);
      transitions.push_back({t[0].text, t[1].text, t[3].text, t[4].text});
    } else if (in_census) {
      r.arity(line, 2);
      if (t[0].text == mealy::kEmpty) r.fail(line, t[0], "the census cannot constrain '_'");
      if (!census_letters.insert(t[0].text).second) {
        r.fail(line, t[0], "census letter '" + t[0].text + "' given twice");
      }
      census.set(t[0].text, r.count(line, t[1]));
    } else {
      r.fail(line, t[0], "expected a header, a transition 'from read -> to write' or a census");
    }
  }
  if (!states) r.fail("missing 'states:' line");
  if (!start) r.fail("missing 'start:' line");
  if (!input) r.fail("missing 'input:' line");
  if (!output) r.fail("missing 'output:' line");
  try {
    return {mealy::MealyMachine(*states, *start, *input, *output, transitions), word, census};
  } catch (const mealy::InvalidMachine& e) {
    r.fail(e.what());
  }
}

reductions::MulticoloredGraph parse_graph(std::istream& in, const std::string& source) {
  Reader r(source);
  std::optional<std::uint64_t> k;
  std::map<std::uint64_t, std::vector<std::string>> classes;
  reductions::MulticoloredGraph graph;
  for (const Line& line : read_lines(in)) {
    const auto& t = line.tokens;
    if (t[0].text == "k") {
      r.arity(line, 2);
      if (k) r.fail(line, "'k' given twice");
      k = r.count(line, t[1]);
    } else if (t[0].text == "class") {
      if (t.size() < 3 || t[2].text != ":") r.fail(line, "expected 'class <i>: <vertices>'");
      const std::uint64_t i = r.count(line, t[1]);
      if (classes.contains(i)) r.fail(line, t[1], "class " + t[1].text + " given twice");
      auto& cls = classes[i];
      for (std::size_t j = 3; j < t.size(); ++j) cls.push_back(t[j].text);
    } else if (t[0].text == "edge") {
      r.arity(line, 3);
      graph.edges.emplace_back(t[1].text, t[2].text);
    } else {
      r.fail(line, t[0], "expected 'k', 'class' or 'edge'");
    }
  }
  if (!k) r.fail("missing 'k' line");
  for (std::uint64_t i = 1; i <= *k; ++i) {
    auto it = classes.find(i);
    if (it == classes.end()) r.fail("missing class " + std::to_string(i));
    graph.classes.push_back(it->second);
  }
  if (classes.size() != *k) r.fail("class numbers must run from 1 to k");
  return graph;
}

reductions::HeatInstance parse_heat(std::istream& in, const std::string& source) {
  Reader r(source);
  std::optional<std::uint64_t> k, deadline;
  reductions::HeatInstance heat;
  for (const Line& line : read_lines(in)) {
    const auto& t = line.tokens;
    if (t[0].text == "k" || t[0].text == "deadline") {
      r.arity(line, 2);
      auto& slot = t[0].text == "k" ? k : deadline;
      if (slot) r.fail(line, "'" + t[0].text + "' given twice");
      slot = r.count(line, t[1]);
    } else if (t[0].text == "job") {
      r.arity(line, 3);
      const std::uint64_t level = r.count(line, t[1]);
      if (heat.job_census.contains(level)) r.fail(line, t[1], "heat level given twice");
      heat.job_census[level] = r.count(line, t[2]);
    } else {
      r.fail(line, t[0], "expected 'k', 'deadline' or 'job'");
    }
  }
  if (!k) r.fail("missing 'k' line");
  if (!deadline) r.fail("missing 'deadline' line");
  heat.threshold = *k;
  heat.deadline = *deadline;
  return heat;
}

reductions::SplitsInstance parse_splits(std::istream& in, const std::string& source) {
  Reader r(source);
  bool have_gaps = false;
  reductions::SplitsInstance splits;
  for (const Line& line : read_lines(in)) {
    const auto& t = line.tokens;
    if (is_header(line, "gaps")) {
      if (have_gaps) r.fail(line, "'gaps:' given twice");
      have_gaps = true;
      for (std::size_t i = 2; i < t.size(); ++i) {
        splits.gaps.push_back(r.count(line, t[i]));
        if (splits.gaps.back() == 0) r.fail(line, t[i], "gaps must be positive");
      }
    } else if (t[0].text == "job") {
      r.arity(line, 3);
      const std::uint64_t length = r.count(line, t[1]);
      if (length == 0) r.fail(line, t[1], "job lengths must be positive");
      if (splits.job_census.contains(length)) r.fail(line, t[1], "job length given twice");
      splits.job_census[length] = r.count(line, t[2]);
    } else {
      r.fail(line, t[0], "expected 'gaps:' or 'job'");
    }
  }
  if (!have_gaps) r.fail("missing 'gaps:' line");
  return splits;
}

void write_multiset(std::ostream& out, const MultisetInstance& instance) {
  write_entries(out, instance.values);
  if (instance.target) out << "s=" << *instance.target << '\n';
}

void write_triples(std::ostream& out, const TripleInstance& instance, char third) {
  out << "A:\n";
  write_entries(out, instance.a);
  out << "B:\n";
  write_entries(out, instance.b);
  out << third << ":\n";
  write_entries(out, instance.c);
  if (instance.target) out << "s=" << *instance.target << '\n';
}

void write_machine(std::ostream& out, const MachineInstance& instance) {
  const auto& m = instance.machine;
  out << "states:" << join(m.states()) << '\n';
  out << "start: " << m.start() << '\n';
  out << "input:" << join(m.input_alphabet()) << '\n';
  out << "output:" << join(m.output_alphabet()) << '\n';
  if (instance.word) out << "word:" << join(*instance.word) << '\n';
  for (const auto& t : m.transitions()) {
    out << t.from << ' ' << t.read << " -> " << t.to << ' ' << t.write << '\n';
  }
  out << "census:\n";
  for (const auto& [letter, count] : instance.census.counts()) {
    out << letter << ' ' << count << '\n';
  }
}

void write_graph(std::ostream& out, const reductions::MulticoloredGraph& graph) {
  out << "k " << graph.k() << '\n';
  for (std::size_t i = 0; i < graph.k(); ++i) {
    out << "class " << i + 1 << ':' << join(graph.classes[i]) << '\n';
  }
  for (const auto& [u, v] : graph.edges) out << "edge " << u << ' ' << v << '\n';
}

void write_heat(std::ostream& out, const reductions::HeatInstance& heat) {
  out << "k " << heat.threshold << '\n';
  out << "deadline " << heat.deadline << '\n';
  for (const auto& [level, count] : heat.job_census) {
    out << "job " << level << ' ' << count << '\n';
  }
}

void write_splits(std::ostream& out, const reductions::SplitsInstance& splits) {
  out << "gaps:";
  for (std::uint64_t g : splits.gaps) out << ' ' << g;
  out << '\n';
  for (const auto& [length, count] : splits.job_census) {
    out << "job " << length << ' ' << count << '\n';
  }
}

}  // namespace nonum::io
