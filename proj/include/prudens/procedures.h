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

#ifndef PRUDENS_PROCEDURES_H_
#define PRUDENS_PROCEDURES_H_

#include <optional>
#include <string>
#include <vector>

#include "prudens/beliefs.h"
#include "prudens/dominance.h"
#include "prudens/strategy_space.h"

namespace prudens {

enum class Procedure { kIA, kPrCnps, kPrCps };
const char* ProcedureName(Procedure p);

// Outcome of auditing one (step, player, strategy) that IA keeps.
//  kVerified    a witness belief passed every check of the step's definition;
//  kRefuted     a certificate shows no belief can justify it (see Refutation);
//  kUnresolved  neither.
enum class AuditStatus { kVerified, kRefuted, kUnresolved };
const char* AuditStatusName(AuditStatus s);

struct CnpsCheck {
  bool valid_prior = false;        // full support, total 1
  std::vector<char> c_strong;      // one entry per m < n
  bool best_reply = false;
  bool ok() const;
};

struct CnpsWitness {
  int step = 0;
  PlayerId player = 0;
  int strategy = 0;
  std::vector<Measure> levels;  // nu_0 .. nu_{n-1}
  PriorCNPS belief;
  CnpsCheck check;
};

struct CpsCheck {
  bool valid_table = false;
  bool chain_rule = false;
  bool support = false;  // supp mu(.|C) = survivors within C wherever they meet
  bool best_reply = false;
  bool ok() const;
};

struct CpsWitness {
  int step = 0;
  PlayerId player = 0;
  int strategy = 0;
  Measure nu;
  std::vector<int> fallback_events;  // rows copied from the previous step
  ExplicitCPS belief;
  CpsCheck check;
};

// s cannot be justified at `step`: at a history h that s precludes, the
// replacement s^h is weakly dominated within S_i(h) against the co-player
// profiles of step `against` that reach h. Every admissible belief puts those
// profiles infinitely above the rest at h (PR-CNPS, any against < step) or is
// supported exactly on them there (PR-CPS, against = step - 1), so some
// strategy does strictly better than s^h at h.
struct Refutation {
  int step = 0;
  int against = 0;
  PlayerId player = 0;
  int strategy = 0;
  int nonterminal = 0;
  int replacement = 0;
  MixedStrategy certificate;
};

struct Audit {
  int step = 0;
  PlayerId player = 0;
  int strategy = 0;
  AuditStatus status = AuditStatus::kUnresolved;
  int witness = -1;     // index into cnps or cps
  int refutation = -1;  // index into refutations
};

struct ProcedureTrace {
  Procedure procedure = Procedure::kIA;
  StrategySpace::Kind space = StrategySpace::Kind::kFull;
  // Candidate sets, taken from iterated admissibility; steps[0] = S and the
  // last entry repeats the fixpoint.
  std::vector<ProductRestriction> steps;
  int fixpoint = 0;
  std::vector<Elimination> eliminated;
  std::vector<char> elimination_verified;
  std::vector<Audit> audits;
  std::vector<CnpsWitness> cnps;
  std::vector<CpsWitness> cps;
  std::vector<Refutation> refutations;
  int degree_bound = 0;
  bool degree_overflow = false;

  // Candidates at step n that were not refuted or left unresolved.
  ProductRestriction Established(int n) const;
  // Smallest step with a refuted or unresolved candidate.
  std::optional<int> FirstFailure() const;
};

struct ProcedureOptions {
  // Add per-level optimality rows for s^h at histories s precludes when
  // building CNPS/CPS witnesses on the full space.
  bool augment = true;
  // Epsilon degree bound; 0 means fixpoint + 1.
  int degree_bound = 0;
};

ProcedureTrace RunIteratedAdmissibility(const StrategySpace& space);
// On a full space the best-reply notion is rho; on a reduced space rho-bar.
ProcedureTrace PrudentRationalizabilityCnps(const StrategySpace& space,
                                            const ProcedureOptions& options = {});
ProcedureTrace PrudentRationalizabilityCps(const StrategySpace& space,
                                           const ProcedureOptions& options = {});

// Independent re-check of a stored witness against the candidate sets.
CnpsCheck CheckCnpsWitness(const StrategySpace& space, const ProcedureTrace& trace,
                           const CnpsWitness& w);
CpsCheck CheckCpsWitness(const StrategySpace& space, const ProcedureTrace& trace, const CpsWitness& w);
bool CheckRefutation(const StrategySpace& space, const ProcedureTrace& trace, const Refutation& r);

// m(h) for player i: the largest m <= N whose S^m_{-i} meets S_{-i}(h).
int SophisticationIndex(const StrategySpace& space, const ProcedureTrace& trace, PlayerId i, int k);

// For a final-step CNPS witness: c-strong belief in S^m for every m <= m(h),
// at every history h.
bool CheckBestRationalization(const StrategySpace& space, const ProcedureTrace& trace,
                              const CnpsWitness& w);

struct TheoremViolation {
  std::string theorem;  // "cnps" or "cps"
  int step = 0;
  PlayerId player = 0;
  int strategy = 0;
  std::string strategy_name;
  AuditStatus status = AuditStatus::kUnresolved;
  std::string detail;
};

struct TheoremReport {
  ProcedureTrace ia;
  ProcedureTrace cnps;
  ProcedureTrace cps;
  // At most one per procedure: the first failing candidate at the minimal step.
  std::vector<TheoremViolation> violations;
  bool certificates_ok = true;  // every elimination certificate re-verified
  bool ok() const { return violations.empty() && certificates_ok; }
};

TheoremReport VerifyTheorems(const StrategySpace& space, const ProcedureOptions& options = {});

// Reduced-strategy analogue: procedures on the reduced space with rho-bar,
// plus a comparison of the reduced IA steps with the class projections of the
// full IA steps.
struct ReducedReport {
  TheoremReport reduced;
  bool projections_match = true;
  std::optional<int> first_projection_mismatch;
  bool ok() const { return reduced.ok() && projections_match; }
};

ReducedReport VerifyReduced(const StrategySpace& full, const StrategySpace& reduced,
                            const ProcedureOptions& options = {});

}  // namespace prudens

#endif  // PRUDENS_PROCEDURES_H_
