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

#ifndef PRUDENS_BELIEFS_H_
#define PRUDENS_BELIEFS_H_

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "prudens/hyperreal.h"
#include "prudens/rational.h"
#include "prudens/strategy_space.h"

namespace prudens {

class InvalidBelief : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IncompleteTable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A set of co-player profiles of one player, as a 0/1 mask over co-profile
// indices of a StrategySpace.
using CoEvent = std::vector<char>;

// The distinct events S_{-i}(h), h in H. Event 0 is S_{-i} itself (the root);
// the rest follow the first history inducing them, in canonical order.
class ConditioningFamily {
 public:
  ConditioningFamily(const StrategySpace& space, PlayerId i);

  PlayerId owner() const { return owner_; }
  int num_co_profiles() const { return num_co_; }
  int num_events() const { return static_cast<int>(events_.size()); }
  int num_histories() const { return static_cast<int>(event_of_.size()); }
  const CoEvent& Event(int e) const { return events_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& Members(int e) const { return members_[static_cast<std::size_t>(e)]; }
  const std::vector<HistoryId>& Histories(int e) const { return histories_[static_cast<std::size_t>(e)]; }
  // Event induced by the k-th nonterminal history.
  int EventOf(int k) const { return event_of_[static_cast<std::size_t>(k)]; }
  // Whether Event(inner) is a subset of Event(outer).
  bool Contains(int outer, int inner) const;

 private:
  PlayerId owner_ = 0;
  int num_co_ = 0;
  std::vector<CoEvent> events_;
  std::vector<std::vector<int>> members_;
  std::vector<std::vector<HistoryId>> histories_;
  std::vector<int> event_of_;
};

// Full-support non-standard prior over S_{-i}: every value > 0, total exactly 1.
// Conditionals are the restrictions of the prior, left unnormalized.
class PriorCNPS {
 public:
  PriorCNPS() = default;  // empty, not a valid belief
  static PriorCNPS Create(PlayerId owner, std::vector<Hyperreal> prior);
  // The uniform prior 1/|S_{-i}|.
  static PriorCNPS Uniform(PlayerId owner, int num_co, int degree_bound = kDefaultDegreeBound);

  PlayerId owner() const { return owner_; }
  const std::vector<Hyperreal>& prior() const { return prior_; }

 private:
  PlayerId owner_ = 0;
  std::vector<Hyperreal> prior_;
};

// Standard conditional probability system given as one distribution per
// conditioning event. Construction checks each row is a probability measure
// concentrated on its event; the chain rule is checked separately.
class ExplicitCPS {
 public:
  ExplicitCPS() = default;  // empty, not a valid belief
  static ExplicitCPS Create(PlayerId owner, const ConditioningFamily& family,
                            std::vector<std::vector<Rational>> table);

  PlayerId owner() const { return owner_; }
  const std::vector<std::vector<Rational>>& table() const { return table_; }
  const std::vector<Rational>& Row(int e) const { return table_[static_cast<std::size_t>(e)]; }

 private:
  PlayerId owner_ = 0;
  std::vector<std::vector<Rational>> table_;
};

using Belief = std::variant<PriorCNPS, ExplicitCPS>;

PlayerId OwnerOf(const Belief& b);

// mu(.|C) up to a positive factor common to all of C: prior restrictions for
// PriorCNPS, the exact row for ExplicitCPS. Zero outside C.
struct ConditionalMeasure {
  std::vector<Hyperreal> mass;

  Hyperreal MassOf(const CoEvent& e) const;
  Hyperreal Total() const;
};

ConditionalMeasure Conditional(const Belief& b, const ConditioningFamily& family, int event);
ConditionalMeasure ConditionalAt(const Belief& b, const ConditioningFamily& family, int k);

struct ChainRuleViolation {
  int profile;  // the singleton E
  int inner;    // D
  int outer;    // C
  Rational lhs;  // mu(E|C)
  Rational rhs;  // mu(E|D) mu(D|C)
};

struct ChainRuleReport {
  bool ok = true;
  std::vector<ChainRuleViolation> violations;
};

// Checks mu(E|C) = mu(E|D) mu(D|C) for every D within C in the family and
// every singleton E within D. Throws IncompleteTable if rows are missing.
ChainRuleReport ValidateChainRule(const ExplicitCPS& cps, const ConditioningFamily& family);

struct CautionResult {
  bool believed = false;
  // E does not meet the conditioning event; `believed` is then false.
  bool vacuous = false;
};

// Cautious belief in E given the k-th nonterminal history.
CautionResult CautiouslyBelieves(const Belief& b, const ConditioningFamily& family, int k,
                                 const CoEvent& e);
// Cautious belief at every event meeting E (distinct events).
bool CStronglyBelieves(const Belief& b, const ConditioningFamily& family, const CoEvent& e);
// The same through the intersection form, ranging over histories.
bool CStronglyBelievesIntersection(const Belief& b, const ConditioningFamily& family,
                                   const CoEvent& e);
bool StronglyBelieves(const Belief& b, const ConditioningFamily& family, const CoEvent& e);
bool WeaklyBelieves(const Belief& b, const ConditioningFamily& family, int k, const CoEvent& e);

}  // namespace prudens

#endif  // PRUDENS_BELIEFS_H_
