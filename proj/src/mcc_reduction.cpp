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
#include <map>
#include <set>

#include "nonum/reductions.hpp"

namespace nonum::reductions {
namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return std::to_string(i + 1) + "." + std::to_string(j + 1);
}

// Letters. Input: separator of part i, vertex letter (i, j), non-edge
// letter (i, j), edge letter (i, j). Output: vertex-count letter (i, j) and
// edge-count letter (i, j).
std::string sep(std::size_t i) { return "sep" + std::to_string(i + 1); }
std::string vtx(std::size_t i, std::size_t j) { return "v" + pair_name(i, j); }
std::string gap(std::size_t i, std::size_t j) { return "n" + pair_name(i, j); }
std::string edg(std::size_t i, std::size_t j) { return "e" + pair_name(i, j); }
std::string lv(std::size_t i, std::size_t j) { return "lv" + pair_name(i, j); }
std::string le(std::size_t i, std::size_t j) { return "le" + pair_name(i, j); }

// States: vertex selection before/after the choice, then four states per
// edge gadget.
std::string select_state(std::size_t i) { return "sv" + std::to_string(i + 1); }
std::string selected_state(std::size_t i) { return "svp" + std::to_string(i + 1); }
std::string gadget(std::size_t i, std::size_t j, int phase) {
  return "se" + pair_name(i, j) + "." + std::to_string(phase);
}
const std::string kFinal = "final";

std::vector<std::size_t> others(std::size_t k, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < k; ++j) {
    if (j != i) out.push_back(j);
  }
  return out;
}

}  // namespace

void validate(const MulticoloredGraph& graph) {
  if (graph.k() < 2) throw MalformedGraph("need at least two color classes");
  std::map<std::string, std::size_t> color;
  for (std::size_t i = 0; i < graph.k(); ++i) {
    for (const auto& v : graph.classes[i]) {
      if (!color.emplace(v, i).second) throw MalformedGraph("vertex '" + v + "' is repeated");
    }
  }
  std::map<std::string, std::vector<std::string>> adjacent;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [u, v] : graph.edges) {
    auto cu = color.find(u);
    auto cv = color.find(v);
    if (cu == color.end() || cv == color.end()) {
      throw MalformedGraph("edge " + u + " " + v + " names an unknown vertex");
    }
    if (cu->second == cv->second) {
      throw MalformedGraph("edge " + u + " " + v + " lies inside color class " +
                           std::to_string(cu->second + 1));
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      throw MalformedGraph("edge " + u + " " + v + " is repeated");
    }
    adjacent[u].push_back(v);
    adjacent[v].push_back(u);
  }
  if (color.empty()) return;
  std::set<std::string> reached{color.begin()->first};
  std::vector<std::string> stack{color.begin()->first};
  while (!stack.empty()) {
    const std::string u = stack.back();
    stack.pop_back();
    for (const auto& w : adjacent[u]) {
      if (reached.insert(w).second) stack.push_back(w);
    }
  }
  if (reached.size() != color.size()) throw MalformedGraph("graph is not connected");
}

GwmmInstance mcc_to_gwmm(const MulticoloredGraph& graph) {
  validate(graph);
  const std::size_t k = graph.k();

  // position[v] = (color, 1-based index within the class)
  std::map<std::string, std::pair<std::size_t, std::size_t>> position;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t p = 0; p < graph.classes[i].size(); ++p) {
      position[graph.classes[i][p]] = {i, p + 1};
    }
  }
  // incident[i][j][p] = 1-based positions, within E(i, j), of the edges at
  // the p-th vertex of class i (p 1-based, slot 0 unused).
  std::vector<std::vector<std::size_t>> edge_count(k, std::vector<std::size_t>(k, 0));
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> incident(
      k, std::vector<std::vector<std::vector<std::size_t>>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) incident[i][j].resize(graph.classes[i].size() + 1);
  }
  for (const auto& [u, v] : graph.edges) {
    const auto [cu, pu] = position.at(u);
    const auto [cv, pv] = position.at(v);
    const std::size_t t = ++edge_count[cu][cv];
    ++edge_count[cv][cu];
    incident[cu][cv][pu].push_back(t);
    incident[cv][cu][pv].push_back(t);
  }

  std::vector<std::string> states;
  std::vector<std::string> input;
  std::vector<std::string> output{mealy::kEmpty};
  for (std::size_t i = 0; i < k; ++i) {
    states.push_back(select_state(i));
    states.push_back(selected_state(i));
    for (std::size_t j : others(k, i)) {
      for (int phase = 1; phase <= 4; ++phase) states.push_back(gadget(i, j, phase));
    }
  }
  states.push_back(kFinal);
  for (std::size_t i = 0; i < k; ++i) input.push_back(sep(i));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j : others(k, i)) {
      input.push_back(vtx(i, j));
      input.push_back(gap(i, j));
      input.push_back(edg(i, j));
      output.push_back(lv(i, j));
      output.push_back(le(i, j));
    }
  }

  std::vector<mealy::Transition> t;
  const std::string& eps = mealy::kEmpty;
  for (std::size_t i = 0; i < k; ++i) {
    const std::vector<std::size_t> js = others(k, i);
    const std::size_t last = js.back();
    // Vertex selection: the p-th pass through the vertex letters writes every
    // lv(i, *) p times, then the machine falls silent.
    for (std::size_t r : js) t.push_back({select_state(i), vtx(i, r), select_state(i), lv(i, r)});
    t.push_back({select_state(i), vtx(i, last), selected_state(i), lv(i, last)});
    for (std::size_t r : js) t.push_back({selected_state(i), vtx(i, r), selected_state(i), eps});
    t.push_back({selected_state(i), vtx(i, js.front()), gadget(i, js.front(), 1), eps});

    for (std::size_t idx = 0; idx < js.size(); ++idx) {
      const std::size_t j = js[idx];
      const std::string s1 = gadget(i, j, 1), s2 = gadget(i, j, 2), s3 = gadget(i, j, 3),
                        s4 = gadget(i, j, 4);
      // 1: waiting for the block of the selected vertex
      t.push_back({s1, vtx(i, j), s1, eps});
      t.push_back({s1, gap(i, j), s1, eps});
      t.push_back({s1, edg(i, j), s1, eps});
      // 2: counting edge positions up to the selected edge
      t.push_back({s1, gap(i, j), s2, le(i, j)});
      t.push_back({s2, gap(i, j), s2, le(i, j)});
      t.push_back({s2, edg(i, j), s2, eps});
      // 3: selected; the rest of E(i, j) is counted for the partner part
      t.push_back({s2, edg(i, j), s3, eps});
      t.push_back({s3, gap(i, j), s3, le(j, i)});
      t.push_back({s3, edg(i, j), s3, eps});
      // 4: one lv(i, j) per remaining block boundary
      t.push_back({s3, vtx(i, j), s4, lv(i, j)});
      t.push_back({s4, vtx(i, j), s4, lv(i, j)});
      t.push_back({s4, gap(i, j), s4, eps});
      t.push_back({s4, edg(i, j), s4, eps});
      if (idx + 1 < js.size()) {
        t.push_back({s4, vtx(i, js[idx + 1]), gadget(i, js[idx + 1], 1), eps});
      } else {
        t.push_back({s4, sep(i), i + 1 < k ? select_state(i + 1) : kFinal, eps});
      }
    }
  }

  Word x;
  CensusRequirement census;
  for (std::size_t i = 0; i < k; ++i) {
    const std::vector<std::size_t> js = others(k, i);
    const std::size_t size = graph.classes[i].size();
    for (std::size_t rep = 0; rep < size; ++rep) {
      for (std::size_t r : js) x.push_back(vtx(i, r));
    }
    for (std::size_t j : js) {
      const std::size_t total = edge_count[i][j];
      x.push_back(vtx(i, j));
      for (std::size_t p = 1; p <= size; ++p) {
        // Non-edge letters pad the gaps between consecutive incident edges;
        // an edge letter follows the t-th non-edge letter iff edge t of
        // E(i, j) touches this vertex.
        std::size_t previous = 0;
        for (std::size_t pos : incident[i][j][p]) {
          x.insert(x.end(), pos - previous, gap(i, j));
          x.push_back(edg(i, j));
          previous = pos;
        }
        x.insert(x.end(), total - previous, gap(i, j));
        x.push_back(vtx(i, j));
      }
      census.set(lv(i, j), size + 1);
      census.set(le(i, j), total);
    }
    x.push_back(sep(i));
  }

  return {MealyMachine(states, select_state(0), input, output, t), x, census};
}

}  // namespace nonum::reductions
