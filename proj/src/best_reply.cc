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

#include "prudens/best_reply.h"

#include <algorithm>

namespace prudens {
namespace {

void CheckOwner(const ConditioningFamily& family, const Belief& b) {
  if (OwnerOf(b) != family.owner()) throw std::invalid_argument("belief belongs to another player");
}

// argmax mask over strategies of i at every nonterminal history.
std::vector<std::vector<char>> OptimalMasks(const StrategySpace& space,
                                            const ConditioningFamily& family, const Belief& b) {
  CheckOwner(family, b);
  const PlayerId i = family.owner();
  std::vector<std::vector<char>> out;
  for (int k = 0; k < space.num_nonterminals(); ++k) {
    std::vector<char> mask(static_cast<std::size_t>(space.NumStrategies(i)), 0);
    for (int s : ArgmaxAt(space, family, b, k)) mask[static_cast<std::size_t>(s)] = 1;
    out.push_back(std::move(mask));
  }
  return out;
}

// Whether `target` attains the maximum over S_i(h) at the k-th history.
bool OptimalAt(const StrategySpace& space, const ConditioningFamily& family, const Belief& b,
               int k, int target) {
  const PlayerId i = family.owner();
  const ConditionalMeasure m = ConditionalAt(b, family, k);
  const Hyperreal mine = ExpectedPayoff(space, i, target, m);
  for (int r : space.Allowing(i, k)) {
    if (r != target && ExpectedPayoff(space, i, r, m) > mine) return false;
  }
  return true;
}

}  // namespace

Hyperreal ExpectedPayoff(const StrategySpace& space, PlayerId i, int r, const ConditionalMeasure& m) {
  Hyperreal v;
  for (std::size_t co = 0; co < m.mass.size(); ++co) {
    if (m.mass[co].IsZero()) continue;
    v.AddScaled(space.Utility(i, r, static_cast<int>(co)), m.mass[co]);
  }
  return v;
}

Hyperreal ExpectedPayoff(const StrategySpace& space, const ConditioningFamily& family,
                         const Belief& b, int r, int k) {
  CheckOwner(family, b);
  const PlayerId i = family.owner();
  if (!space.Allows(i, r, k)) {
    throw StrategyDisallowsHistory(space.name(i, r) + " does not allow " +
                                   space.game().HistoryName(space.game().nonterminals()[static_cast<std::size_t>(k)]));
  }
  return ExpectedPayoff(space, i, r, ConditionalAt(b, family, k));
}

std::vector<int> ArgmaxAt(const StrategySpace& space, const ConditioningFamily& family,
                          const Belief& b, int k) {
  CheckOwner(family, b);
  const PlayerId i = family.owner();
  const ConditionalMeasure m = ConditionalAt(b, family, k);
  std::vector<int> best;
  Hyperreal top;
  for (int r : space.Allowing(i, k)) {
    Hyperreal v = ExpectedPayoff(space, i, r, m);
    if (best.empty() || v > top) {
      best.assign(1, r);
      top = std::move(v);
    } else if (v == top) {
      best.push_back(r);
    }
  }
  return best;
}

std::vector<int> SequentialBestReplies(const StrategySpace& space, const ConditioningFamily& family,
                                       const Belief& b) {
  if (space.kind() != StrategySpace::Kind::kFull) {
    throw std::logic_error("sequential best replies need the full strategy space");
  }
  const auto opt = OptimalMasks(space, family, b);
  const PlayerId i = family.owner();
  std::vector<int> out;
  for (int s = 0; s < space.NumStrategies(i); ++s) {
    bool ok = true;
    for (int k = 0; k < space.num_nonterminals() && ok; ++k) {
      ok = opt[static_cast<std::size_t>(k)][static_cast<std::size_t>(space.Replacement(i, s, k))] != 0;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<int> WeakSequentialBestReplies(const StrategySpace& space,
                                           const ConditioningFamily& family, const Belief& b) {
  const auto opt = OptimalMasks(space, family, b);
  const PlayerId i = family.owner();
  std::vector<int> out;
  for (int s = 0; s < space.NumStrategies(i); ++s) {
    const auto& hs = space.AllowedNonterminals(i, s);
    if (std::all_of(hs.begin(), hs.end(), [&](int k) {
          return opt[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] != 0;
        })) {
      out.push_back(s);
    }
  }
  return out;
}

bool IsSequentialBestReply(const StrategySpace& space, const ConditioningFamily& family,
                           const Belief& b, int s) {
  if (space.kind() != StrategySpace::Kind::kFull) {
    throw std::logic_error("sequential best replies need the full strategy space");
  }
  CheckOwner(family, b);
  for (int k = 0; k < space.num_nonterminals(); ++k) {
    if (!OptimalAt(space, family, b, k, space.Replacement(family.owner(), s, k))) return false;
  }
  return true;
}

bool IsWeakSequentialBestReply(const StrategySpace& space, const ConditioningFamily& family,
                               const Belief& b, int s) {
  CheckOwner(family, b);
  for (int k : space.AllowedNonterminals(family.owner(), s)) {
    if (!OptimalAt(space, family, b, k, s)) return false;
  }
  return true;
}

}  // namespace prudens
