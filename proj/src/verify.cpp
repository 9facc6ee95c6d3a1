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

#include "nonum/verify.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "nonum/oracle.hpp"
#include "nonum/parallel.hpp"
#include "nonum/random_instances.hpp"
#include "nonum/reductions.hpp"

namespace nonum::verify {
namespace {

using random::Rng;

struct Outcome {
  bool agree = false;
  bool yes = false;
  int certificate = -1;  // -1 none, 0 invalid, 1 valid
  bool unknown = false;
  bool guarded = false;
  bool error = false;
  std::string note;
};

template <typename Instance>
Report run_family(const std::string& name, const std::vector<Instance>& corpus,
                  const std::function<Outcome(const Instance&)>& check, const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(corpus.size());
  const int threads = options.threads > 0 ? options.threads : parallel::max_threads();
  const auto n = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      outcomes[i] = check(corpus[i]);
    } catch (const std::exception& e) {
      outcomes[i].error = true;
      outcomes[i].note = e.what();
    }
  }
  Report report;
  report.name = name;
  report.instances = corpus.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    report.agreements += o.agree && !o.error;
    report.yes += o.yes;
    report.unknowns += o.unknown;
    report.guarded += o.guarded;
    report.errors += o.error;
    if (o.certificate >= 0) {
      ++report.certificates;
      report.certificate_failures += o.certificate == 0;
    }
    const bool bad = !o.agree || o.error || o.certificate == 0 || o.unknown;
    if (bad && report.failures.size() < 5) {
      report.failures.push_back("instance " + std::to_string(i) +
                                (o.note.empty() ? "" : ": " + o.note));
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::map<Integer, Integer> counts_of(const Multiset& m) {
  std::map<Integer, Integer> out;
  for (const auto& e : m.entries()) out[e.value] += e.multiplicity;
  return out;
}

Multiset values_of(const std::vector<std::int64_t>& values) {
  std::vector<Integer> v(values.begin(), values.end());
  return Multiset::from_values(v);
}

// Three parallel lists; planted instances come from triples with a common
// relation, the rest are uniform.
struct Columns {
  std::vector<std::int64_t> a, b, c;
};

Columns planted_columns(Rng& rng, std::size_t n, std::int64_t s) {
  Columns cols;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t a = rng.uniform(0, std::min<std::int64_t>(20, s));
    const std::int64_t b = rng.uniform(std::max<std::int64_t>(0, s - a - 20),
                                       std::min<std::int64_t>(20, s - a));
    cols.a.push_back(a);
    cols.b.push_back(b);
    cols.c.push_back(s - a - b);
  }
  return cols;
}

Columns uniform_columns(Rng& rng, std::size_t n) {
  Columns cols;
  for (std::size_t i = 0; i < n; ++i) {
    cols.a.push_back(rng.uniform(0, 20));
    cols.b.push_back(rng.uniform(0, 20));
    cols.c.push_back(rng.uniform(0, 20));
  }
  return cols;
}

struct SubsetInstance {
  Multiset a;
  Integer s;
};

std::vector<SubsetInstance> subset_corpus(const Options& options, std::uint64_t salt) {
  Rng rng(options.seed ^ salt);
  std::vector<SubsetInstance> corpus;
  for (std::size_t i = 0; i < options.variety_instances; ++i) {
    Multiset a = random::random_multiset(rng);
    Integer s = 0;
    if (rng.chance(0.5)) {
      for (const auto& e : a.entries()) s += e.value * rng.uniform(0, to_int64(e.multiplicity));
    } else {
      s = rng.uniform(0, to_int64(a.total()) + 3);
    }
    corpus.push_back({std::move(a), s});
  }
  return corpus;
}

struct TripleInstance {
  Multiset a, b, c;
  Integer s;
};

bool sums_to(const Integer& a, const Integer& b, const Integer& c, const Integer& s) {
  return a + b + c == s;
}

bool adds_up(const Integer& a, const Integer& b, const Integer& c, const Integer&) {
  return a + b == c;
}

bool same_walk(const census::EwmmResult& x, const census::EwmmResult& y) {
  if (x.verdict != y.verdict) return false;
  if (!x.certificate || !y.certificate) return x.certificate.has_value() == y.certificate.has_value();
  const auto& a = x.certificate->walk;
  const auto& b = y.certificate->walk;
  if (a.base_walk != b.base_walk || a.loops.size() != b.loops.size()) return false;
  for (std::size_t i = 0; i < a.loops.size(); ++i) {
    if (a.loops[i].anchor != b.loops[i].anchor || a.loops[i].cycle != b.loops[i].cycle ||
        a.loops[i].count != b.loops[i].count) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool valid_subset(const Multiset& a, const Integer& s, const variety::SubsetCertificate& cert) {
  const auto available = counts_of(a);
  Integer sum = 0;
  for (const auto& [value, count] : cert.counts) {
    auto it = available.find(value);
    if (count < 0 || it == available.end() || count > it->second) return false;
    sum += value * count;
  }
  return sum == s;
}

bool valid_partition(const Multiset& a, const variety::SubsetCertificate& cert) {
  const Integer total = a.total();
  return total % 2 == 0 && valid_subset(a, total / 2, cert);
}

bool valid_cover(const Multiset& a, const Multiset& b, const Multiset& c,
                 const variety::TripleCover& cover,
                 bool (*fits)(const Integer&, const Integer&, const Integer&, const Integer&),
                 const Integer& s) {
  std::map<Integer, Integer> ua, ub, uc;
  for (const auto& t : cover.triples) {
    if (t.count < 1 || !fits(t.first, t.second, t.third, s)) return false;
    ua[t.first] += t.count;
    ub[t.second] += t.count;
    uc[t.third] += t.count;
  }
  return ua == counts_of(a) && ub == counts_of(b) && uc == counts_of(c);
}

bool valid_num3dm(const Multiset& a, const Multiset& b, const Multiset& c, const Integer& s,
                  const variety::TripleCover& cover) {
  return valid_cover(a, b, c, cover, sums_to, s);
}

bool valid_nmts(const Multiset& a, const Multiset& b, const Multiset& s,
                const variety::TripleCover& cover) {
  return valid_cover(a, b, s, cover, adds_up, 0);
}

bool valid_3partition(const Multiset& a, const variety::TripleCover& cover) {
  std::map<Integer, Integer> used;
  Integer triples = 0;
  for (const auto& t : cover.triples) {
    if (t.count < 1) return false;
    used[t.first] += t.count;
    used[t.second] += t.count;
    used[t.third] += t.count;
    triples += t.count;
  }
  if (used != counts_of(a)) return false;
  if (cover.triples.empty()) return a.empty();
  const Integer s = a.total() / triples;
  if (s * triples != a.total()) return false;
  for (const auto& t : cover.triples) {
    if (t.first + t.second + t.third != s) return false;
  }
  return true;
}

bool valid_ewmm(const mealy::MealyMachine& machine, const mealy::CensusRequirement& census,
                const census::EwmmCertificate& cert) {
  const census::Computation c = census::expand_certificate(machine, cert);
  return mealy::census_of(mealy::run(machine, c.input, c.transitions)) == census;
}

bool valid_gwmm(const mealy::MealyMachine& machine, const mealy::Word& word,
                const mealy::CensusRequirement& census, const std::vector<std::size_t>& trace) {
  return mealy::census_of(mealy::run(machine, word, trace)) == census;
}

Report check_subset_sum(const Options& options) {
  return run_family<SubsetInstance>(
      "subsetsum", subset_corpus(options, 0x5u),
      [](const SubsetInstance& in) {
        Outcome o;
        const auto cert = variety::solve_subset_sum(in.a, in.s);
        o.yes = cert.has_value();
        o.agree = o.yes == oracle::brute_subset_sum(in.a, in.s);
        if (cert) o.certificate = valid_subset(in.a, in.s, *cert);
        return o;
      },
      options);
}

Report check_partition(const Options& options) {
  return run_family<SubsetInstance>(
      "partition", subset_corpus(options, 0x9u),
      [](const SubsetInstance& in) {
        Outcome o;
        const auto cert = variety::solve_partition(in.a);
        o.yes = cert.has_value();
        o.agree = o.yes == oracle::brute_partition(in.a);
        if (cert) o.certificate = valid_partition(in.a, *cert);
        return o;
      },
      options);
}

Report check_subsetsum_to_partition(const Options& options) {
  return run_family<SubsetInstance>(
      "subsetsum-to-partition", subset_corpus(options, 0x11u),
      [](const SubsetInstance& in) {
        Outcome o;
        if (in.s < 0 || in.s > in.a.total()) {
          try {
            reductions::subsetsum_to_partition(in.a, in.s);
            o.note = "out-of-range target accepted";
          } catch (const reductions::TargetOutOfRange&) {
            o.agree = true;
          }
          return o;
        }
        const Multiset image = reductions::subsetsum_to_partition(in.a, in.s);
        o.yes = oracle::brute_partition(image);
        o.agree = o.yes == oracle::brute_subset_sum(in.a, in.s) &&
                  image.variety() <= in.a.variety() + 1;
        return o;
      },
      options);
}

Report check_3partition(const Options& options) {
  Rng rng(options.seed ^ 0x3u);
  std::vector<Multiset> corpus;
  for (std::size_t i = 0; i < options.variety_instances; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 4));
    const Columns cols = rng.chance(0.5) ? planted_columns(rng, n, rng.uniform(0, 40))
                                         : uniform_columns(rng, n);
    std::vector<std::int64_t> all = cols.a;
    all.insert(all.end(), cols.b.begin(), cols.b.end());
    all.insert(all.end(), cols.c.begin(), cols.c.end());
    corpus.push_back(values_of(all));
  }
  return run_family<Multiset>(
      "threepartition", corpus,
      [](const Multiset& a) {
        Outcome o;
        const auto cert = variety::solve_3partition(a);
        o.yes = cert.has_value();
        o.agree = o.yes == oracle::brute_3partition(a);
        if (cert) o.certificate = valid_3partition(a, *cert);
        return o;
      },
      options);
}

Report check_num3dm(const Options& options) {
  Rng rng(options.seed ^ 0xDu);
  std::vector<TripleInstance> corpus;
  for (std::size_t i = 0; i < options.variety_instances; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 4));
    const bool planted = rng.chance(0.5);
    const std::int64_t s = rng.uniform(0, 60);
    const Columns cols = planted ? planted_columns(rng, n, s) : uniform_columns(rng, n);
    corpus.push_back({values_of(cols.a), values_of(cols.b), values_of(cols.c), s});
  }
  return run_family<TripleInstance>(
      "num3dm", corpus,
      [](const TripleInstance& in) {
        Outcome o;
        const auto cert = variety::solve_num_3dm(in.a, in.b, in.c, in.s);
        o.yes = cert.has_value();
        o.agree = o.yes == oracle::brute_num3dm(in.a, in.b, in.c, in.s);
        if (cert) o.certificate = valid_num3dm(in.a, in.b, in.c, in.s, *cert);
        return o;
      },
      options);
}

Report check_nmts(const Options& options) {
  Rng rng(options.seed ^ 0x17u);
  std::vector<TripleInstance> corpus;
  for (std::size_t i = 0; i < options.variety_instances; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform(0, 4));
    Columns cols;
    const bool planted = rng.chance(0.5);
    for (std::size_t j = 0; j < n; ++j) {
      cols.a.push_back(rng.uniform(0, planted ? 10 : 20));
      cols.b.push_back(rng.uniform(0, planted ? 10 : 20));
      cols.c.push_back(planted ? cols.a.back() + cols.b.back() : rng.uniform(0, 20));
    }
    corpus.push_back({values_of(cols.a), values_of(cols.b), values_of(cols.c), 0});
  }
  return run_family<TripleInstance>(
      "nmts", corpus,
      [](const TripleInstance& in) {
        Outcome o;
        const auto cert = variety::solve_nmts(in.a, in.b, in.c);
        o.yes = cert.has_value();
        o.agree = o.yes == oracle::brute_nmts(in.a, in.b, in.c);
        if (cert) o.certificate = valid_nmts(in.a, in.b, in.c, *cert);
        return o;
      },
      options);
}

Report check_ewmm(const Options& options) {
  struct Instance {
    mealy::MealyMachine machine;
    mealy::CensusRequirement census;
  };
  Rng rng(options.seed ^ 0xEu);
  std::vector<Instance> corpus;
  for (std::size_t i = 0; i < options.machine_instances; ++i) {
    auto machine = random::random_machine(rng);
    auto census = random::random_census(rng, machine, 6);
    corpus.push_back({std::move(machine), std::move(census)});
  }
  census::EwmmOptions eo;
  eo.budget = options.ewmm_budget;
  return run_family<Instance>(
      "ewmm", corpus,
      [eo](const Instance& in) {
        Outcome o;
        const auto result = census::solve_ewmm(in.machine, in.census, eo);
        const auto serial = census::solve_ewmm_serial(in.machine, in.census, eo);
        o.unknown = result.verdict == census::Verdict::kUnknown;
        o.yes = result.verdict == census::Verdict::kYes;
        o.agree = !o.unknown && o.yes == oracle::brute_ewmm(in.machine, in.census);
        if (!same_walk(result, serial)) {
          o.agree = false;
          o.note = "serial and parallel certificates differ";
        }
        if (result.certificate) {
          o.certificate = valid_ewmm(in.machine, in.census, *result.certificate);
        }
        return o;
      },
      options);
}

Report check_gwmm(const Options& options) {
  struct Instance {
    mealy::MealyMachine machine;
    mealy::Word word;
    mealy::CensusRequirement census;
  };
  Rng rng(options.seed ^ 0x6u);
  std::vector<Instance> corpus;
  for (std::size_t i = 0; i < options.machine_instances; ++i) {
    auto machine = random::random_machine(rng);
    auto inst = random::random_word_instance(rng, machine, 6, 6);
    corpus.push_back({std::move(machine), std::move(inst.word), std::move(inst.census)});
  }
  // Census larger than the word on machines without empty reads.
  random::MachineShape eps_free;
  eps_free.empty_input = false;
  for (std::size_t i = 0; i < options.guard_instances; ++i) {
    auto machine = random::random_machine(rng, eps_free);
    auto inst = random::random_word_instance(rng, machine, 6, 6);
    const auto& out = machine.output_letters();
    while (inst.census.total() <= inst.word.size()) {
      inst.census.add(out[rng.index(out.size())]);
    }
    corpus.push_back({std::move(machine), std::move(inst.word), std::move(inst.census)});
  }
  return run_family<Instance>(
      "gwmm", corpus,
      [](const Instance& in) {
        Outcome o;
        const auto trace = census::solve_gwmm(in.machine, in.word, in.census);
        o.yes = trace.has_value();
        o.agree = o.yes == oracle::brute_gwmm(in.machine, in.word, in.census);
        if (trace) o.certificate = valid_gwmm(in.machine, in.word, in.census, *trace);
        if (!in.machine.input_has_empty()) {
          const auto guarded = census::solve_gwmm_binary_guard(in.machine, in.word, in.census);
          if (guarded.has_value() != o.yes) {
            o.agree = false;
            o.note = "guarded verdict differs";
          }
          o.guarded = in.census.total() > in.word.size();
          if (o.guarded && o.yes) {
            o.agree = false;
            o.note = "guard instance answered yes";
          }
        }
        return o;
      },
      options);
}

Report check_mcc(const Options& options) {
  Rng rng(options.seed ^ 0xCu);
  std::vector<reductions::MulticoloredGraph> corpus;
  for (std::size_t i = 0; i < options.graph_instances; ++i) {
    corpus.push_back(random::random_multicolored_graph(rng, 3, 3));
  }
  return run_family<reductions::MulticoloredGraph>(
      "mcc", corpus,
      [](const reductions::MulticoloredGraph& g) {
        Outcome o;
        const auto inst = reductions::mcc_to_gwmm(g);
        const std::size_t k = g.k();
        const bool sizes = inst.machine.input_alphabet().size() == k + 3 * k * (k - 1) &&
                           inst.machine.output_alphabet().size() == 1 + 2 * k * (k - 1) &&
                           inst.machine.num_states() == 1 + k * (2 + 4 * (k - 1));
        const auto trace = census::solve_gwmm(inst.machine, inst.word, inst.census);
        o.yes = trace.has_value();
        o.agree = sizes && o.yes == oracle::brute_mcc_clique(g);
        if (!sizes) o.note = "machine size formula violated";
        if (trace) o.certificate = valid_gwmm(inst.machine, inst.word, inst.census, *trace);
        return o;
      },
      options);
}

Report check_heat(const Options& options) {
  Rng rng(options.seed ^ 0x4u);
  std::vector<reductions::HeatInstance> corpus;
  for (std::size_t i = 0; i < options.heat_instances; ++i) {
    reductions::HeatInstance heat;
    heat.threshold = rng.uniform(1, 3);
    const auto total = static_cast<std::uint64_t>(rng.uniform(0, 6));
    for (std::uint64_t j = 0; j < total; ++j) {
      ++heat.job_census[rng.uniform(0, 2 * heat.threshold)];
    }
    heat.deadline = rng.uniform(total, 8);
    corpus.push_back(std::move(heat));
  }
  census::EwmmOptions eo;
  eo.budget = options.ewmm_budget;
  return run_family<reductions::HeatInstance>(
      "heat", corpus,
      [eo](const reductions::HeatInstance& heat) {
        Outcome o;
        const auto inst = reductions::heat_to_ewmm(heat);
        const auto result = census::solve_ewmm(inst.machine, inst.census, eo);
        o.unknown = result.verdict == census::Verdict::kUnknown;
        o.yes = result.verdict == census::Verdict::kYes;
        o.agree = !o.unknown && o.yes == oracle::brute_heat_schedule(heat);
        if (result.certificate) {
          o.certificate = valid_ewmm(inst.machine, inst.census, *result.certificate);
        }
        return o;
      },
      options);
}

Report check_splits(const Options& options) {
  Rng rng(options.seed ^ 0x2u);
  std::vector<reductions::SplitsInstance> corpus;
  for (std::size_t i = 0; i < options.splits_instances; ++i) {
    reductions::SplitsInstance splits;
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    for (std::size_t j = 0; j < n; ++j) splits.gaps.push_back(rng.uniform(1, 4));
    if (rng.chance(0.5)) {
      std::uint64_t deadline = 0, stop[2] = {0, 0};
      for (std::uint64_t g : splits.gaps) {
        deadline += g;
        const int p = rng.chance(0.5) ? 1 : 0;
        ++splits.job_census[deadline - stop[p]];
        stop[p] = deadline;
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) ++splits.job_census[rng.uniform(1, 8)];
    }
    corpus.push_back(std::move(splits));
  }
  return run_family<reductions::SplitsInstance>(
      "splits", corpus,
      [](const reductions::SplitsInstance& splits) {
        Outcome o;
        const auto inst = reductions::splits_to_gwmm(splits);
        const auto trace = census::solve_gwmm(inst.machine, inst.word, inst.census);
        o.yes = trace.has_value();
        o.agree = o.yes == oracle::brute_splits_game(splits);
        if (trace) o.certificate = valid_gwmm(inst.machine, inst.word, inst.census, *trace);
        return o;
      },
      options);
}

std::vector<Report> run_all(const Options& options) {
  return {check_subset_sum(options), check_partition(options),   check_3partition(options),
          check_num3dm(options),     check_nmts(options),        check_subsetsum_to_partition(options),
          check_ewmm(options),       check_gwmm(options),        check_mcc(options),
          check_heat(options),       check_splits(options)};
}

}  // namespace nonum::verify
