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

#ifndef PRUDENS_GAME_H_
#define PRUDENS_GAME_H_

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prudens/rational.h"

namespace prudens {

using PlayerId = int;
// Index of a node of the history tree in canonical preorder; the root is 0.
using HistoryId = int;
// One action index per player, into that player's action list at a history.
using ActionProfile = std::vector<int>;

class GameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultStrategyCap = 1'000'000;

// Recursive description used to build a Game. A node with no actions is
// terminal and must carry one payoff per player; otherwise every player has a
// nonempty action list and `children` holds one node per action profile in
// product order (first player's action most significant).
struct NodeSpec {
  std::vector<std::vector<std::string>> actions;
  std::vector<NodeSpec> children;
  std::vector<Rational> payoff;
};

// Finite multistage game with observed actions. Immutable once built.
//
// A(h) is always the full product of the per-player action sets, and a player
// with a single action at h is inactive there (the action is "wait").
class Game {
 public:
  static Game Create(std::vector<std::string> players, const NodeSpec& root);

  int num_players() const { return static_cast<int>(players_.size()); }
  const std::vector<std::string>& players() const { return players_; }
  const std::string& player_name(PlayerId i) const { return players_[static_cast<std::size_t>(i)]; }
  int PlayerIndex(const std::string& name) const;  // -1 when absent

  HistoryId root() const { return 0; }
  int num_histories() const { return static_cast<int>(nodes_.size()); }
  bool IsTerminal(HistoryId h) const { return node(h).children.empty(); }
  bool IsStatic() const { return nonterminals_.size() == 1; }

  // H, the nonterminal histories, in canonical preorder.
  const std::vector<HistoryId>& nonterminals() const { return nonterminals_; }
  const std::vector<HistoryId>& terminals() const { return terminals_; }
  // Position of h in nonterminals(); -1 for terminal histories.
  int NonterminalIndex(HistoryId h) const { return node(h).nonterminal_index; }

  const std::vector<std::string>& Actions(HistoryId h, PlayerId i) const {
    return node(h).actions[static_cast<std::size_t>(i)];
  }
  bool IsActive(HistoryId h, PlayerId i) const { return Actions(h, i).size() > 1; }
  const std::vector<HistoryId>& Children(HistoryId h) const { return node(h).children; }
  HistoryId Child(HistoryId h, std::span<const int> profile) const;
  HistoryId Parent(HistoryId h) const { return node(h).parent; }
  // Profile played at Parent(h) to reach h. Empty for the root.
  const ActionProfile& IncomingProfile(HistoryId h) const { return node(h).incoming; }
  int Depth(HistoryId h) const { return node(h).depth; }
  // Ancestors of h from the root down, excluding h.
  std::vector<HistoryId> StrictPrefixes(HistoryId h) const;
  // Weak prefix relation h <= other.
  bool IsPrefix(HistoryId h, HistoryId other) const;

  const Rational& Payoff(HistoryId z, PlayerId i) const;
  const std::vector<Rational>& Payoffs(HistoryId z) const { return node(z).payoff; }

  // "/" for the root, "/(T,L)/(a,wait)" otherwise.
  std::string HistoryName(HistoryId h) const;
  // Inverse of HistoryName restricted to this game; -1 when absent.
  HistoryId FindHistory(const std::vector<std::vector<std::string>>& path) const;
  std::vector<std::vector<std::string>> HistoryPath(HistoryId h) const;

  // Rebuilds the recursive description (used by the shrinker and serializer).
  NodeSpec ToSpec(HistoryId h = 0) const;

 private:
  struct Node {
    HistoryId parent = -1;
    ActionProfile incoming;
    int depth = 0;
    int nonterminal_index = -1;
    std::vector<std::vector<std::string>> actions;
    std::vector<HistoryId> children;
    std::vector<Rational> payoff;
  };

  const Node& node(HistoryId h) const { return nodes_[static_cast<std::size_t>(h)]; }
  HistoryId Build(const NodeSpec& spec, HistoryId parent, const ActionProfile& incoming);

  std::vector<std::string> players_;
  std::vector<Node> nodes_;
  std::vector<HistoryId> nonterminals_;
  std::vector<HistoryId> terminals_;
};

// A pure strategy: one action index per nonterminal history (indexed by
// NonterminalIndex), including histories the strategy itself precludes.
struct Strategy {
  PlayerId owner = 0;
  std::vector<int> choice;

  friend auto operator<=>(const Strategy&, const Strategy&) = default;
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// All strategies of player i in canonical order: lexicographic in the choice
// vector, histories in canonical preorder. Throws SizeLimit above `cap`.
std::vector<Strategy> EnumerateStrategies(const Game& game, PlayerId i,
                                          std::size_t cap = kDefaultStrategyCap);
std::size_t CountStrategies(const Game& game, PlayerId i);

// The terminal history induced by a profile (one strategy per player).
HistoryId Path(const Game& game, std::span<const Strategy> profile);

// Whether s agrees, at every strict prefix of h, with the profile leading
// toward h. Together over players this is membership in S(h).
bool Allows(const Game& game, const Strategy& s, HistoryId h);

// H_i(s): nonterminal histories allowed by s, as history ids in canonical order.
std::vector<HistoryId> AllowedHistories(const Game& game, const Strategy& s);

// s^h: at each strict prefix of h, the action leading toward h; s elsewhere.
Strategy ReplacementStrategy(const Game& game, const Strategy& s, HistoryId h);

// Same allowed histories and the same choices on them.
bool BehaviorallyEquivalent(const Game& game, const Strategy& s, const Strategy& t);

// Display name: actions at the histories where the owner is active, joined by
// '.'; a player who is never active is named by the root action.
std::string StrategyName(const Game& game, const Strategy& s);

}  // namespace prudens

#endif  // PRUDENS_GAME_H_
