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

#ifndef NONUM_VERIFY_HPP_
#define NONUM_VERIFY_HPP_

// Paired solver/oracle runs over seeded random corpora, plus certificate
// validators that recompute everything from the instance.

#include <cstdint>
#include <string>
#include <vector>

#include "nonum/census_solvers.hpp"
#include "nonum/multiset.hpp"
#include "nonum/variety.hpp"

namespace nonum::verify {

// Certificate validators. None of them looks at a solver's internals.
bool valid_subset(const Multiset& a, const Integer& s, const variety::SubsetCertificate& cert);
bool valid_partition(const Multiset& a, const variety::SubsetCertificate& cert);
// Each triple must satisfy `fits` and the triples must use every element of
// the three multisets exactly once.
bool valid_cover(const Multiset& a, const Multiset& b, const Multiset& c,
                 const variety::TripleCover& cover,
                 bool (*fits)(const Integer&, const Integer&, const Integer&, const Integer&),
                 const Integer& s);
bool valid_num3dm(const Multiset& a, const Multiset& b, const Multiset& c, const Integer& s,
                  const variety::TripleCover& cover);
bool valid_nmts(const Multiset& a, const Multiset& b, const Multiset& s,
                const variety::TripleCover& cover);
bool valid_3partition(const Multiset& a, const variety::TripleCover& cover);
// Replays the expanded computation on the original machine.
bool valid_ewmm(const mealy::MealyMachine& machine, const mealy::CensusRequirement& census,
                const census::EwmmCertificate& cert);
bool valid_gwmm(const mealy::MealyMachine& machine, const mealy::Word& word,
                const mealy::CensusRequirement& census, const std::vector<std::size_t>& trace);

struct Report {
  std::string name;
  std::size_t instances = 0;
  std::size_t agreements = 0;
  std::size_t yes = 0;                   // solver verdicts Yes
  std::size_t certificates = 0;          // certificates checked
  std::size_t certificate_failures = 0;
  std::size_t unknowns = 0;
  std::size_t guarded = 0;               // guard path taken (given-word family)
  std::size_t errors = 0;                // unexpected exceptions
  std::vector<std::string> failures;     // first few disagreement descriptions
  double seconds = 0;

  bool passed() const {
    return agreements == instances && certificate_failures == 0 && unknowns == 0 && errors == 0;
  }
};

struct Options {
  std::uint64_t seed = 42;
  // Corpus size per family; the given-word family adds `guard_instances`.
  std::size_t variety_instances = 500;
  std::size_t machine_instances = 300;
  std::size_t guard_instances = 40;
  std::size_t graph_instances = 50;
  std::size_t splits_instances = 300;
  std::size_t heat_instances = 300;
  std::uint64_t ewmm_budget = census::EwmmOptions{}.budget;
  int threads = 0;  // 0 keeps the OpenMP default
};

Report check_subset_sum(const Options& options);
Report check_partition(const Options& options);
Report check_3partition(const Options& options);
Report check_num3dm(const Options& options);
Report check_nmts(const Options& options);
Report check_subsetsum_to_partition(const Options& options);
Report check_ewmm(const Options& options);
Report check_gwmm(const Options& options);
Report check_mcc(const Options& options);
Report check_heat(const Options& options);
Report check_splits(const Options& options);

// Every family above, in that order.
std::vector<Report> run_all(const Options& options);

}  // namespace nonum::verify

#endif  // NONUM_VERIFY_HPP_
