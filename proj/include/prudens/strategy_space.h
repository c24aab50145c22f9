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

#ifndef PRUDENS_STRATEGY_SPACE_H_
#define PRUDENS_STRATEGY_SPACE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prudens/game.h"
#include "prudens/rational.h"

namespace prudens {

// Q = Q_1 x ... x Q_n as sorted strategy indices into a StrategySpace.
struct ProductRestriction {
  std::vector<std::vector<int>> members;

  bool Contains(PlayerId i, int s) const;
  std::size_t Size(PlayerId i) const { return members[static_cast<std::size_t>(i)].size(); }
  bool AnyEmpty() const;
  // Q_i is a subset of other.Q_i for every i.
  bool IsSubsetOf(const ProductRestriction& other) const;

  friend bool operator==(const ProductRestriction&, const ProductRestriction&) = default;
};

// The strategic form of a Game over an explicit strategy list per player:
// either every strategy (kFull) or one canonical representative per
// behavioral-equivalence class (kReduced). Builds the payoff table, the
// co-player profile indexing and the allow sets S_i(h), S_{-i}(h) eagerly.
//
// Co-player profiles of player i are indexed in mixed radix over the other
// players in player order, earlier players most significant.
class StrategySpace {
 public:
  enum class Kind { kFull, kReduced };

  static StrategySpace Full(std::shared_ptr<const Game> game,
                            std::size_t cap = kDefaultStrategyCap);
  static StrategySpace Reduced(std::shared_ptr<const Game> game,
                               std::size_t cap = kDefaultStrategyCap);

  const Game& game() const { return *game_; }
  const std::shared_ptr<const Game>& game_ptr() const { return game_; }
  Kind kind() const { return kind_; }
  int num_players() const { return game_->num_players(); }
  int num_nonterminals() const { return static_cast<int>(game_->nonterminals().size()); }

  int NumStrategies(PlayerId i) const { return static_cast<int>(at(strategies_, i).size()); }
  const Strategy& strategy(PlayerId i, int s) const { return at(at(strategies_, i), s); }
  const std::string& name(PlayerId i, int s) const { return at(at(names_, i), s); }
  int FindByName(PlayerId i, const std::string& name) const;  // -1 when absent
  // Exact match for full spaces; index of the equivalence class for reduced ones.
  std::optional<int> IndexOf(const Strategy& s) const;
  // For reduced spaces, the full strategies in class s in enumeration order.
  // For full spaces, just strategy(i, s).
  const std::vector<Strategy>& ClassMembers(PlayerId i, int s) const {
    return at(at(class_members_, i), s);
  }

  int NumCoProfiles(PlayerId i) const { return at(co_counts_, i); }
  // Strategy index per player with entry i set to -1.
  std::vector<int> CoProfile(PlayerId i, int co) const;
  // Index of the co-player part of a full profile (entry i ignored).
  int CoIndex(PlayerId i, std::span<const int> profile) const;
  std::string CoProfileName(PlayerId i, int co) const;
  std::vector<std::string> CoProfileNames(PlayerId i, int co) const;

  const Rational& Utility(PlayerId i, int s, int co) const {
    return at(utilities_, i)[static_cast<std::size_t>(s) * static_cast<std::size_t>(NumCoProfiles(i)) +
                             static_cast<std::size_t>(co)];
  }
  HistoryId Outcome(std::span<const int> profile) const;

  // Allow sets keyed by nonterminal index k (position in game().nonterminals()).
  bool Allows(PlayerId i, int s, int k) const {
    return at(allow_mask_, i)[static_cast<std::size_t>(s) * static_cast<std::size_t>(num_nonterminals()) +
                              static_cast<std::size_t>(k)] != 0;
  }
  const std::vector<int>& Allowing(PlayerId i, int k) const { return at(at(allowing_, i), k); }
  const std::vector<int>& CoAllowing(PlayerId i, int k) const { return at(at(co_allowing_, i), k); }
  const std::vector<char>& CoAllowingMask(PlayerId i, int k) const {
    return at(at(co_allowing_mask_, i), k);
  }
  // H_i(s) as nonterminal indices.
  const std::vector<int>& AllowedNonterminals(PlayerId i, int s) const {
    return at(at(allowed_nonterminals_, i), s);
  }
  // Index of s^h. Only full spaces carry replacements (throws otherwise).
  int Replacement(PlayerId i, int s, int k) const;

  ProductRestriction Everything() const;
  std::vector<char> CoMask(PlayerId i, const ProductRestriction& q) const;
  std::vector<int> CoProfilesWithin(PlayerId i, const ProductRestriction& q) const;

 private:
  StrategySpace() = default;
  void Build(std::size_t cap);

  template <typename V>
  static const typename V::value_type& at(const V& v, int k) {
    return v[static_cast<std::size_t>(k)];
  }

  std::shared_ptr<const Game> game_;
  Kind kind_ = Kind::kFull;
  std::vector<std::vector<Strategy>> strategies_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<Strategy>>> class_members_;
  std::vector<int> co_counts_;
  std::vector<HistoryId> outcomes_;  // by full profile index
  std::vector<std::vector<Rational>> utilities_;
  std::vector<std::vector<char>> allow_mask_;
  std::vector<std::vector<std::vector<int>>> allowing_;
  std::vector<std::vector<std::vector<int>>> co_allowing_;
  std::vector<std::vector<std::vector<char>>> co_allowing_mask_;
  std::vector<std::vector<std::vector<int>>> allowed_nonterminals_;
  std::vector<std::vector<int>> replacement_;
};

// Partition of S_i into behavioral-equivalence classes. Each class lists
// indices into EnumerateStrategies(game, i) in increasing order; the first
// index is the canonical representative (lexicographically least choices).
std::vector<std::vector<int>> ReduceStrategies(const Game& game, PlayerId i,
                                               std::size_t cap = kDefaultStrategyCap);

}  // namespace prudens

#endif  // PRUDENS_STRATEGY_SPACE_H_
