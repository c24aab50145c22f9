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

#ifndef PRUDENS_BEST_REPLY_H_
#define PRUDENS_BEST_REPLY_H_

#include <stdexcept>
#include <vector>

#include "prudens/beliefs.h"
#include "prudens/hyperreal.h"
#include "prudens/strategy_space.h"

namespace prudens {

class StrategyDisallowsHistory : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sum over co-profiles of U_i(r, .) times the conditional mass. With the
// unnormalized conditionals of a prior this is the expected payoff times a
// positive factor shared by every strategy at the same history.
Hyperreal ExpectedPayoff(const StrategySpace& space, PlayerId i, int r, const ConditionalMeasure& m);

// Expected payoff of r at the k-th nonterminal history; r must allow it.
Hyperreal ExpectedPayoff(const StrategySpace& space, const ConditioningFamily& family,
                         const Belief& b, int r, int k);

// Strategies of S_i(h) maximizing the conditional expected payoff, ties kept.
std::vector<int> ArgmaxAt(const StrategySpace& space, const ConditioningFamily& family,
                          const Belief& b, int k);

// rho_i: s such that s^h is optimal in S_i(h) at every nonterminal h.
// Needs a full space (replacements).
std::vector<int> SequentialBestReplies(const StrategySpace& space, const ConditioningFamily& family,
                                       const Belief& b);

// rho-bar_i: s optimal at every history s allows. Works on either space.
std::vector<int> WeakSequentialBestReplies(const StrategySpace& space,
                                           const ConditioningFamily& family, const Belief& b);

// Membership tests for a single strategy; cheaper than building the sets.
bool IsSequentialBestReply(const StrategySpace& space, const ConditioningFamily& family,
                           const Belief& b, int s);
bool IsWeakSequentialBestReply(const StrategySpace& space, const ConditioningFamily& family,
                               const Belief& b, int s);

}  // namespace prudens

#endif  // PRUDENS_BEST_REPLY_H_
