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

#ifndef PRUDENS_DOMINANCE_H_
#define PRUDENS_DOMINANCE_H_

#include <optional>
#include <utility>
#include <vector>

#include "prudens/rational.h"
#include "prudens/strategy_space.h"

namespace prudens {

// Positive weights on strategy indices of one player, sorted by index, total 1.
struct MixedStrategy {
  PlayerId owner = 0;
  std::vector<std::pair<int, Rational>> weights;

  Rational Utility(const StrategySpace& space, int co) const;
  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
};

// Whether s is weakly dominated by a mixture on `own` when compared on the
// co-profiles `co` (indices into the co-profile table of player i). Returns
// the dominating mixture; the mixture may put weight on s itself.
std::optional<MixedStrategy> WeaklyDominatedWithin(const StrategySpace& space, PlayerId i, int s,
                                                   const std::vector<int>& own,
                                                   const std::vector<int>& co);

// Weak dominance with respect to Q: mixtures on Q_i against Q_{-i}.
std::optional<MixedStrategy> WeaklyDominated(const StrategySpace& space, const ProductRestriction& q,
                                             PlayerId i, int s);

// Exact substitution check of a dominance certificate.
bool VerifyDominanceWithin(const StrategySpace& space, PlayerId i, int s, const std::vector<int>& own,
                           const std::vector<int>& co, const MixedStrategy& sigma);
bool VerifyDominance(const StrategySpace& space, const ProductRestriction& q, PlayerId i, int s,
                     const MixedStrategy& sigma);

// A standard measure on co-profiles, indexed like the co-profile table.
using Measure = std::vector<Rational>;

// Extra requirement on a justifying measure: `target` must do at least as
// well as every strategy in `rivals` against nu restricted to `mask`.
struct OptimalityConstraint {
  int target = 0;
  std::vector<int> rivals;
  std::vector<char> mask;
};

struct JustifyOptions {
  // Strategies s must beat or tie; empty means all of S_i.
  std::vector<int> scope;
  std::vector<OptimalityConstraint> extra;
  // Try the uniform measure on Q_{-i} before solving an LP.
  bool try_uniform = true;
};

// A measure nu with support exactly Q_{-i} under which s maximizes expected
// payoff over the scope. Solved as: maximize t subject to nu >= t on Q_{-i},
// nu = 0 elsewhere, total 1, optimality rows; a measure exists iff t* > 0.
std::optional<Measure> JustifyingFullSupportMeasure(const StrategySpace& space,
                                                    const ProductRestriction& q, PlayerId i, int s,
                                                    const JustifyOptions& options = {});

bool VerifyJustifyingMeasure(const StrategySpace& space, const ProductRestriction& q, PlayerId i,
                             int s, const Measure& nu, const JustifyOptions& options = {});

struct Elimination {
  int step = 0;  // removed when forming step `step`
  PlayerId player = 0;
  int strategy = 0;
  MixedStrategy certificate;
};

struct IATrace {
  // steps[0] = S, steps[n] = step n; the last entry repeats the fixpoint.
  std::vector<ProductRestriction> steps;
  int fixpoint = 0;  // N: the first n with steps[n + 1] == steps[n]
  std::vector<Elimination> eliminated;
};

// Iterated admissibility: all players at once, maximal deletion each round.
IATrace IteratedAdmissibility(const StrategySpace& space);

}  // namespace prudens

#endif  // PRUDENS_DOMINANCE_H_
