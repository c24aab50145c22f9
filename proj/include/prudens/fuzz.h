// Copyright 2026 The Prudens Authors.
//
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

#ifndef PRUDENS_FUZZ_H_
#define PRUDENS_FUZZ_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prudens/generator.h"
#include "prudens/procedures.h"
#include "prudens/report.h"

namespace prudens {

struct FuzzOptions {
  std::uint64_t seed = 1;
  int count = 100;
  GeneratorBounds bounds;
  int jobs = 1;
  bool reduced = true;      // also run the reduced-strategy analogue
  bool shrink = true;
  int max_failures = 5;     // failures kept (and shrunk) in the result
  ProcedureOptions procedure;
};

// Outcome of one generated game.
struct FuzzOutcome {
  int index = 0;
  std::uint64_t seed = 0;
  int fixpoint = 0;
  int cnps_first_failure = -1;  // step, or -1
  int cps_first_failure = -1;
  int refuted = 0;
  int unresolved = 0;
  bool certificates_ok = true;
  bool degree_overflow = false;
  bool reduced_ok = true;
  bool error = false;
  std::string error_text;
  std::vector<TheoremViolation> violations;
  std::string game_text;  // only kept for failures
};

struct FuzzFailure {
  FuzzOutcome outcome;
  std::string shrunk_text;
  std::vector<std::string> shrunk_violations;
};

struct FuzzResult {
  int games = 0;
  int cnps_violations = 0;   // games with a failing PR-CNPS audit
  int cps_violations = 0;
  int refuted = 0;           // candidate triples with a refutation
  int unresolved = 0;
  // Violating games whose first failing candidates are all unresolved, so
  // no certificate rules them out.
  int unrefuted_violations = 0;
  int reduced_failures = 0;
  int certificate_failures = 0;
  int degree_overflows = 0;
  int errors = 0;
  std::vector<int> fixpoint_histogram;  // index = N
  std::vector<FuzzFailure> failures;

  bool ok() const {
    return cnps_violations == 0 && cps_violations == 0 && reduced_failures == 0 &&
           certificate_failures == 0 && degree_overflows == 0 && errors == 0;
  }
};

// Seed of the k-th game in a campaign.
std::uint64_t GameSeed(std::uint64_t campaign_seed, int k);

FuzzOutcome RunOne(const Game& game, const FuzzOptions& options);
FuzzResult RunFuzz(const FuzzOptions& options);

// Runs fn(k) for k in [0, count) on `jobs` threads. fn must write only to
// slot k of caller-owned storage.
void ParallelFor(int count, int jobs, const std::function<void(int)>& fn);

// Greedy shrinking: drop subtrees, actions and payoff magnitude while
// `still_fails` keeps holding. Returns the smallest game reached.
Game ShrinkGame(const Game& game, const std::function<bool(const Game&)>& still_fails);

Json FuzzResultToJson(const FuzzResult& r, const FuzzOptions& options);

}  // namespace prudens

#endif  // PRUDENS_FUZZ_H_
