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

#ifndef NONUM_CENSUS_SOLVERS_HPP_
#define NONUM_CENSUS_SOLVERS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nonum/ilp.hpp"
#include "nonum/mealy.hpp"

namespace nonum::census {

using mealy::CensusRequirement;
using mealy::MealyMachine;
using mealy::Word;

enum class Verdict { kYes, kNo, kUnknown };

const char* to_string(Verdict verdict);

// ---------------------------------------------------------------------------
// Exists-word problem: is there an input word and a computation whose output
// meets the census?
//
// The machine is subdivided so that its underlying digraph is simple. Walks
// from the start state are enumerated breadth first up to length |S|^2; a
// walk is abandoned as soon as its own output exceeds the census. For every
// surviving walk, closed walks of length at most |S| anchored on it become
// integer variables (one per distinct output-count vector) and an integer
// program decides whether some loop multiplicities fill the remaining census.
//
// Two walks that end in the same state with the same output counts and the
// same set of available loop vectors are interchangeable, so only the first
// (shortest) one is kept.
// ---------------------------------------------------------------------------

// One integer variable of the loop-count program: the output counts that a
// single execution of `cycle` (anchored at `anchor`, in the subdivided
// machine) contributes.
struct LoopVariable {
  std::vector<std::uint64_t> census_vector;  // indexed like output_letters()
  std::size_t anchor;
  std::vector<std::size_t> cycle;
};

struct EwmmCertificate {
  // Subdivided machine the walk lives in; transition 2i / 2i + 1 are the two
  // halves of original transition i.
  MealyMachine subdivided;
  mealy::WalkDecomposition walk;
  // The loop-count program that accepted `walk.base_walk`.
  ilp::IntegerProgram program;
};

struct EwmmOptions {
  // Maximum number of distinct walk states before giving up with kUnknown.
  std::uint64_t budget = 1'000'000;
  // OpenMP threads for the parallel solver; 0 keeps the runtime default.
  int threads = 0;
};

struct EwmmResult {
  Verdict verdict = Verdict::kNo;
  std::optional<EwmmCertificate> certificate;  // set iff kYes
  std::uint64_t walk_states = 0;
  std::uint64_t programs_solved = 0;
};

// Parallel solver: candidate walks of each length are checked concurrently.
// The certificate is identical to the serial one.
EwmmResult solve_ewmm(const MealyMachine& machine, const CensusRequirement& census,
                      const EwmmOptions& options = {});

// Single-threaded reference implementation.
EwmmResult solve_ewmm_serial(const MealyMachine& machine, const CensusRequirement& census,
                             const EwmmOptions& options = {});

// Distinct non-neutral loop vectors of closed walks of length 1..|S| through
// `vertex`, skipping any vector that exceeds `bound` in some coordinate.
// Exposed for tests.
std::vector<LoopVariable> short_loops(const MealyMachine& simple_machine, std::size_t vertex,
                                      const std::vector<std::uint64_t>& bound);

// A concrete computation of the original machine.
struct Computation {
  Word input;
  std::vector<std::size_t> transitions;
};

// Unrolls the certificate (loop counts included) into a computation of the
// original machine.
Computation expand_certificate(const MealyMachine& original, const EwmmCertificate& certificate);

// ---------------------------------------------------------------------------
// Given-word problem: does some computation reading all of `word` output a
// word meeting the census?
//
// Boolean table over (state, partial census c_1..c_sigma, input position,
// trailing empty/empty moves p < |S|). An entry is true iff some computation
// reading the first `position` letters, writing exactly the partial census and
// ending with exactly p moves that read and write the empty letter, stops in
// `state`. Moves that read or write a letter reset p to 0.
// ---------------------------------------------------------------------------

struct GwmmOptions {
  // Dense bitmaps are used while (|x| + 1) * |S|^2 * prod(c_j + 1) stays below
  // this many entries; hash sets of reachable entries otherwise.
  std::uint64_t dense_cap = std::uint64_t{1} << 24;
  // Keep only entries from which the rest of the word can be read while
  // writing each letter the remaining number of times (per-letter bounds).
  // Without pruning the table holds every reachable entry.
  bool prune = true;
};

class GwmmTable {
 public:
  // Throws std::invalid_argument if `word` contains the empty letter and
  // std::overflow_error if the index space does not fit 64 bits.
  static GwmmTable build(const MealyMachine& machine, const Word& word,
                         const CensusRequirement& census, const GwmmOptions& options = {});

  // `partial` is indexed like machine.output_letters().
  bool contains(std::size_t state, const std::vector<std::uint64_t>& partial,
                std::size_t position, std::size_t p) const;
  std::size_t true_entries(std::size_t position) const;
  bool dense() const { return dense_; }
  // False when the census asks for letters the machine never writes; the
  // table is then left empty.
  bool feasible_census() const { return feasible_census_; }

  // Transition indices of one accepting computation, rebuilt backwards from
  // the table, or std::nullopt if no entry at the last position meets the
  // census.
  std::optional<std::vector<std::size_t>> trace() const;

 private:
  struct Layer;
  GwmmTable() = default;

  std::uint64_t encode(std::size_t state, const std::vector<std::uint64_t>& partial,
                       std::size_t p) const;
  bool has(std::size_t position, std::uint64_t key) const;

  std::shared_ptr<const MealyMachine> machine_;
  Word word_;
  std::vector<std::uint64_t> target_;
  std::vector<std::uint64_t> letter_stride_;  // key offset of one more letter j
  std::uint64_t num_states_ = 0;
  std::uint64_t num_p_ = 0;
  bool dense_ = false;
  bool feasible_census_ = true;
  std::vector<std::shared_ptr<Layer>> layers_;
};

std::optional<std::vector<std::size_t>> solve_gwmm(const MealyMachine& machine,
                                                   const Word& word,
                                                   const CensusRequirement& census,
                                                   const GwmmOptions& options = {});

class EmptyLetterPresent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// For machines that never read the empty letter: a census asking for more
// letters than |word| is rejected before any table is built, which keeps the
// table polynomial even for binary-encoded counts. Throws EmptyLetterPresent
// when the empty letter is in the input alphabet.
std::optional<std::vector<std::size_t>> solve_gwmm_binary_guard(
    const MealyMachine& machine, const Word& word, const CensusRequirement& census,
    const GwmmOptions& options = {});

}  // namespace nonum::census

#endif  // NONUM_CENSUS_SOLVERS_HPP_
