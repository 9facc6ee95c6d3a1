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

// Command-line front end. Exit codes: 0 yes (or success), 1 no, 2 usage or
// input error, 3 unknown.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nonum/census_solvers.hpp"
#include "nonum/ilp.hpp"
#include "nonum/instance_io.hpp"
#include "nonum/parallel.hpp"
#include "nonum/reductions.hpp"
#include "nonum/variety.hpp"
#include "nonum/verify.hpp"

namespace {

using namespace nonum;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct Flags {
  std::string path;
  bool certificate = false;
  bool dump_ilp = false;
  bool guard = false;
  std::uint64_t budget = census::EwmmOptions{}.budget;
  std::uint64_t seed = verify::Options{}.seed;
  int threads = 0;
};

// Opens `path`, or standard input for "-".
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") {
      name_ = "<stdin>";
      return;
    }
    name_ = path;
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw io::ParseError(path, 0, 0, "cannot open file");
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::unique_ptr<std::ifstream> file_;
};

int verdict(bool yes) {
  std::cout << (yes ? "YES" : "NO") << '\n';
  return yes ? kYes : kNo;
}

Integer require_target(const std::optional<Integer>& target, const std::string& source) {
  if (!target) throw io::ParseError(source, 0, 0, "missing target line 's=<integer>'");
  return *target;
}

void print_subset(const variety::SubsetCertificate& cert) {
  for (const auto& [value, count] : cert.counts) std::cout << value << ' ' << count << '\n';
}

void print_cover(const variety::TripleCover& cover) {
  for (const auto& t : cover.triples) {
    std::cout << t.first << ' ' << t.second << ' ' << t.third << ' ' << t.count << '\n';
  }
}

int run_subsetsum(const Flags& f) {
  Input in(f.path);
  const auto inst = io::parse_multiset(in.stream(), in.name());
  const Integer s = require_target(inst.target, in.name());
  const auto cert = variety::solve_subset_sum(inst.values, s);
  const int code = verdict(cert.has_value());
  if (f.certificate && cert) print_subset(*cert);
  if (f.dump_ilp) ilp::dump(variety::subset_sum_program(inst.values, s), std::cout);
  return code;
}

int run_partition(const Flags& f) {
  Input in(f.path);
  const auto inst = io::parse_multiset(in.stream(), in.name());
  if (inst.target) throw io::ParseError(in.name(), 0, 0, "partition takes no target");
  const auto cert = variety::solve_partition(inst.values);
  const int code = verdict(cert.has_value());
  if (f.certificate && cert) print_subset(*cert);
  if (f.dump_ilp) {
    if (auto program = variety::partition_program(inst.values)) {
      ilp::dump(*program, std::cout);
    } else {
      std::cout << "# odd total, no program built\n";
    }
  }
  return code;
}

int run_threepartition(const Flags& f) {
  Input in(f.path);
  const auto inst = io::parse_multiset(in.stream(), in.name());
  if (inst.target) throw io::ParseError(in.name(), 0, 0, "threepartition takes no target");
  const auto cover = variety::solve_3partition(inst.values);
  const int code = verdict(cover.has_value());
  if (f.certificate && cover) print_cover(*cover);
  if (f.dump_ilp) {
    const Integer n = inst.values.cardinality() / 3;
    if (n > 0 && inst.values.total() % n == 0) {
      ilp::dump(variety::three_partition_program(inst.values, inst.values.total() / n).program,
                std::cout);
    } else {
      std::cout << "# no integral triple sum, no program built\n";
    }
  }
  return code;
}

int run_num3dm(const Flags& f) {
  Input in(f.path);
  const auto inst = io::parse_triples(in.stream(), in.name(), 'C');
  const Integer s = require_target(inst.target, in.name());
  const auto cover = variety::solve_num_3dm(inst.a, inst.b, inst.c, s);
  const int code = verdict(cover.has_value());
  if (f.certificate && cover) print_cover(*cover);
  if (f.dump_ilp) ilp::dump(variety::num_3dm_program(inst.a, inst.b, inst.c, s).program, std::cout);
  return code;
}

int run_nmts(const Flags& f) {
  Input in(f.path);
  const auto inst = io::parse_triples(in.stream(), in.name(), 'S');
  if (inst.target) throw io::ParseError(in.name(), 0, 0, "nmts takes no target");
  const auto cover = variety::solve_nmts(inst.a, inst.b, inst.c);
  const int code = verdict(cover.has_value());
  if (f.certificate && cover) print_cover(*cover);
  if (f.dump_ilp) ilp::dump(variety::nmts_program(inst.a, inst.b, inst.c).program, std::cout);
  return code;
}

// States visited by a transition sequence of `m`, starting at `from`.
std::string path_states(const mealy::MealyMachine& m, std::size_t from,
                        const std::vector<std::size_t>& transitions) {
  std::string out = m.states()[from];
  for (std::size_t e : transitions) out += " " + m.states()[m.arcs()[e].to];
  return out;
}

int run_ewmm(const Flags& f) {
  Input in(f.path);
  const auto inst = io::parse_machine(in.stream(), in.name());
  census::EwmmOptions options;
  options.budget = f.budget;
  options.threads = f.threads;
  const auto result = census::solve_ewmm(inst.machine, inst.census, options);
  if (result.verdict == census::Verdict::kUnknown) {
    std::cout << "UNKNOWN\n";
    std::cerr << "walk-state budget of " << f.budget << " exhausted\n";
    return kUnknown;
  }
  const int code = verdict(result.verdict == census::Verdict::kYes);
  if (result.certificate) {
    const auto& cert = *result.certificate;
    const auto& sub = cert.subdivided;
    if (f.certificate) {
      std::cout << "base " << path_states(sub, sub.start_index(), cert.walk.base_walk) << '\n';
      for (const auto& loop : cert.walk.loops) {
        std::cout << "loop " << sub.states()[loop.anchor] << " : "
                  << path_states(sub, loop.anchor, loop.cycle) << " : " << loop.count << '\n';
      }
    }
    if (f.dump_ilp) ilp::dump(cert.program, std::cout);
  }
  return code;
}

int run_gwmm(const Flags& f) {
  Input in(f.path);
  const auto inst = io::parse_machine(in.stream(), in.name());
  if (!inst.word) throw io::ParseError(in.name(), 0, 0, "missing 'word:' line");
  const auto trace = f.guard
                         ? census::solve_gwmm_binary_guard(inst.machine, *inst.word, inst.census)
                         : census::solve_gwmm(inst.machine, *inst.word, inst.census);
  const int code = verdict(trace.has_value());
  if (f.certificate && trace) {
    for (std::size_t e : *trace) {
      const auto& t = inst.machine.transitions()[e];
      std::cout << t.from << ' ' << t.read << " -> " << t.to << ' ' << t.write << '\n';
    }
  }
  return code;
}

int run_reduce_mcc(const Flags& f) {
  Input in(f.path);
  auto out = reductions::mcc_to_gwmm(io::parse_graph(in.stream(), in.name()));
  io::write_machine(std::cout, {std::move(out.machine), std::move(out.word), std::move(out.census)});
  return kYes;
}

int run_reduce_heat(const Flags& f) {
  Input in(f.path);
  auto out = reductions::heat_to_ewmm(io::parse_heat(in.stream(), in.name()));
  io::write_machine(std::cout, {std::move(out.machine), std::nullopt, std::move(out.census)});
  return kYes;
}

int run_reduce_splits(const Flags& f) {
  Input in(f.path);
  auto out = reductions::splits_to_gwmm(io::parse_splits(in.stream(), in.name()));
  io::write_machine(std::cout, {std::move(out.machine), std::move(out.word), std::move(out.census)});
  return kYes;
}

int run_reduce_partition(const Flags& f) {
  Input in(f.path);
  const auto inst = io::parse_multiset(in.stream(), in.name());
  const Integer s = require_target(inst.target, in.name());
  io::write_multiset(std::cout, {reductions::subsetsum_to_partition(inst.values, s), std::nullopt});
  return kYes;
}

int run_verify(const Flags& f) {
  verify::Options options;
  options.seed = f.seed;
  options.ewmm_budget = f.budget;
  options.threads = f.threads;
  bool all = true;
  for (const auto& r : verify::run_all(options)) {
    all = all && r.passed();
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.agreements << '/'
              << r.instances << " agree, " << r.yes << " yes, " << r.certificates
              << " certificates (" << r.certificate_failures << " invalid), " << r.unknowns
              << " unknown, " << r.errors << " errors";
    if (r.guarded > 0) std::cout << ", " << r.guarded << " guarded";
    std::cout << ", " << r.seconds << " s\n";
    for (const auto& failure : r.failures) std::cout << "  " << failure << '\n';
  }
  std::cout << (all ? "YES" : "NO") << '\n';
  return all ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for numerical problems with few distinct numbers"};
  app.require_subcommand(1);
  Flags flags;
  std::function<int(const Flags&)> action;

  auto add = [&](const std::string& name, const std::string& help,
                 int (*run)(const Flags&), bool takes_file = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (takes_file) {
      sub->add_option("instance", flags.path, "instance file, or - for standard input")
          ->required();
    }
    sub->callback([&action, run] { action = run; });
    return sub;
  };
  auto certificate = [&](CLI::App* sub) {
    sub->add_flag("--certificate", flags.certificate, "print a certificate after the verdict");
    return sub;
  };
  auto dump = [&](CLI::App* sub) {
    sub->add_flag("--dump-ilp", flags.dump_ilp, "print the integer program");
    return sub;
  };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--budget", flags.budget, "walk states explored before giving up")
        ->capture_default_str();
    sub->add_option("--threads", flags.threads, "worker threads (0: runtime default)");
    return sub;
  };

  dump(certificate(add("subsetsum", "subset sum over a multiset", run_subsetsum)));
  dump(certificate(add("partition", "split a multiset into two equal halves", run_partition)));
  dump(certificate(add("threepartition", "split a multiset into equal-sum triples",
                       run_threepartition)));
  dump(certificate(add("num3dm", "numerical 3-dimensional matching", run_num3dm)));
  dump(certificate(add("nmts", "numerical matching with target sums", run_nmts)));
  budget(dump(certificate(add("ewmm", "census feasibility for some input word", run_ewmm))));
  auto* gwmm = certificate(add("gwmm", "census feasibility for the given word", run_gwmm));
  gwmm->add_flag("--guard", flags.guard,
                 "reject censuses longer than the word first (no empty reads allowed)");
  add("reduce-mcc", "multicolored clique to a given-word census instance", run_reduce_mcc);
  add("reduce-heat", "heat-limited scheduling to an exists-word census instance",
      run_reduce_heat);
  add("reduce-splits", "two-processor splits game to a given-word census instance",
      run_reduce_splits);
  add("reduce-partition", "subset sum to partition", run_reduce_partition);
  auto* verify = add("verify", "compare every solver with its brute-force oracle", run_verify,
                     false);
  verify->add_option("--seed", flags.seed, "corpus seed")->capture_default_str();
  budget(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kYes : kUsage;
  }

  try {
    parallel::set_threads(flags.threads);
    return action(flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
