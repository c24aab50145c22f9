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

#include "prudens/game.h"

#include <limits>
#include <set>
#include <sstream>

namespace prudens {

namespace {

std::size_t ProfileCount(const std::vector<std::vector<std::string>>& actions) {
  std::size_t count = 1;
  for (const auto& list : actions) count *= list.size();
  return count;
}

}  // namespace

Game Game::Create(std::vector<std::string> players, const NodeSpec& root) {
  if (players.empty()) throw GameError("a game needs at least one player");
  std::set<std::string> seen;
  for (const auto& p : players) {
    if (p.empty()) throw GameError("empty player name");
    if (!seen.insert(p).second) throw GameError("duplicate player '" + p + "'");
  }
  if (root.actions.empty()) throw GameError("the root history must be nonterminal");
  Game game;
  game.players_ = std::move(players);
  game.Build(root, -1, {});
  return game;
}

HistoryId Game::Build(const NodeSpec& spec, HistoryId parent, const ActionProfile& incoming) {
  const HistoryId id = static_cast<HistoryId>(nodes_.size());
  nodes_.emplace_back();
  {
    Node& n = nodes_.back();
    n.parent = parent;
    n.incoming = incoming;
    n.depth = parent < 0 ? 0 : nodes_[static_cast<std::size_t>(parent)].depth + 1;
  }
  const std::size_t np = players_.size();
  if (spec.actions.empty()) {
    if (!spec.children.empty()) throw GameError("terminal history with children");
    if (spec.payoff.size() != np) {
      throw GameError("terminal history " + HistoryName(id) + " needs " + std::to_string(np) +
                      " payoffs, got " + std::to_string(spec.payoff.size()));
    }
    nodes_[static_cast<std::size_t>(id)].payoff = spec.payoff;
    terminals_.push_back(id);
    return id;
  }
  if (spec.actions.size() != np) {
    throw GameError("history " + HistoryName(id) + " must list actions for every player");
  }
  for (std::size_t i = 0; i < np; ++i) {
    if (spec.actions[i].empty()) {
      throw GameError("player '" + players_[i] + "' has no action at " + HistoryName(id));
    }
    std::set<std::string> names(spec.actions[i].begin(), spec.actions[i].end());
    if (names.size() != spec.actions[i].size()) {
      throw GameError("duplicate action for '" + players_[i] + "' at " + HistoryName(id));
    }
  }
  if (!spec.payoff.empty()) throw GameError("nonterminal history " + HistoryName(id) + " has a payoff");
  const std::size_t count = ProfileCount(spec.actions);
  if (spec.children.size() != count) {
    throw GameError("history " + HistoryName(id) + " needs " + std::to_string(count) +
                    " successors, got " + std::to_string(spec.children.size()));
  }
  nodes_[static_cast<std::size_t>(id)].actions = spec.actions;
  nodes_[static_cast<std::size_t>(id)].nonterminal_index = static_cast<int>(nonterminals_.size());
  nonterminals_.push_back(id);

  ActionProfile profile(np, 0);
  std::vector<HistoryId> children;
  children.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t rest = k;
    for (std::size_t i = np; i-- > 0;) {
      profile[i] = static_cast<int>(rest % spec.actions[i].size());
      rest /= spec.actions[i].size();
    }
    children.push_back(Build(spec.children[k], id, profile));
  }
  nodes_[static_cast<std::size_t>(id)].children = std::move(children);
  return id;
}

int Game::PlayerIndex(const std::string& name) const {
  for (std::size_t i = 0; i < players_.size(); ++i) {
    if (players_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

HistoryId Game::Child(HistoryId h, std::span<const int> profile) const {
  const Node& n = node(h);
  std::size_t index = 0;
  for (std::size_t i = 0; i < n.actions.size(); ++i) {
    index = index * n.actions[i].size() + static_cast<std::size_t>(profile[i]);
  }
  return n.children[index];
}

std::vector<HistoryId> Game::StrictPrefixes(HistoryId h) const {
  std::vector<HistoryId> out;
  for (HistoryId p = Parent(h); p >= 0; p = Parent(p)) out.push_back(p);
  return {out.rbegin(), out.rend()};
}

bool Game::IsPrefix(HistoryId h, HistoryId other) const {
  while (other >= 0 && Depth(other) > Depth(h)) other = Parent(other);
  return other == h;
}

const Rational& Game::Payoff(HistoryId z, PlayerId i) const {
  const Node& n = node(z);
  if (n.payoff.empty()) throw GameError("payoff requested at nonterminal " + HistoryName(z));
  return n.payoff[static_cast<std::size_t>(i)];
}

std::vector<std::vector<std::string>> Game::HistoryPath(HistoryId h) const {
  std::vector<std::vector<std::string>> path;
  for (HistoryId cur = h; Parent(cur) >= 0; cur = Parent(cur)) {
    const Node& parent = node(Parent(cur));
    std::vector<std::string> names;
    const ActionProfile& a = node(cur).incoming;
    for (std::size_t i = 0; i < a.size(); ++i) {
      names.push_back(parent.actions[i][static_cast<std::size_t>(a[i])]);
    }
    path.push_back(std::move(names));
  }
  return {path.rbegin(), path.rend()};
}

std::string Game::HistoryName(HistoryId h) const {
  if (h < 0 || static_cast<std::size_t>(h) >= nodes_.size() || Parent(h) < 0) return "/";
  std::ostringstream out;
  for (const auto& profile : HistoryPath(h)) {
    out << "/(";
    for (std::size_t i = 0; i < profile.size(); ++i) out << (i ? "," : "") << profile[i];
    out << ")";
  }
  return out.str();
}

HistoryId Game::FindHistory(const std::vector<std::vector<std::string>>& path) const {
  HistoryId cur = root();
  for (const auto& names : path) {
    if (IsTerminal(cur) || names.size() != players_.size()) return -1;
    ActionProfile profile(players_.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& list = node(cur).actions[i];
      int found = -1;
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (list[k] == names[i]) found = static_cast<int>(k);
      }
      if (found < 0) return -1;
      profile[i] = found;
    }
    cur = Child(cur, profile);
  }
  return cur;
}

NodeSpec Game::ToSpec(HistoryId h) const {
  NodeSpec spec;
  const Node& n = node(h);
  spec.actions = n.actions;
  spec.payoff = n.payoff;
  for (HistoryId c : n.children) spec.children.push_back(ToSpec(c));
  return spec;
}

std::size_t CountStrategies(const Game& game, PlayerId i) {
  std::size_t count = 1;
  for (HistoryId h : game.nonterminals()) {
    const std::size_t k = game.Actions(h, i).size();
    if (count > std::numeric_limits<std::size_t>::max() / k) {
      return std::numeric_limits<std::size_t>::max();
    }
    count *= k;
  }
  return count;
}

std::vector<Strategy> EnumerateStrategies(const Game& game, PlayerId i, std::size_t cap) {
  const std::size_t count = CountStrategies(game, i);
  if (count > cap) {
    throw SizeLimit("player '" + game.player_name(i) + "' has more than " + std::to_string(cap) +
                    " strategies");
  }
  const auto& hs = game.nonterminals();
  std::vector<Strategy> out;
  out.reserve(count);
  Strategy s{i, std::vector<int>(hs.size(), 0)};
  while (true) {
    out.push_back(s);
    // Odometer with the last history varying fastest.
    std::size_t k = hs.size();
    while (k > 0) {
      --k;
      if (++s.choice[k] < static_cast<int>(game.Actions(hs[k], i).size())) break;
      s.choice[k] = 0;
      if (k == 0) return out;
    }
    if (hs.empty()) return out;
  }
}

HistoryId Path(const Game& game, std::span<const Strategy> profile) {
  HistoryId h = game.root();
  ActionProfile a(static_cast<std::size_t>(game.num_players()));
  while (!game.IsTerminal(h)) {
    const int k = game.NonterminalIndex(h);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = profile[i].choice[static_cast<std::size_t>(k)];
    h = game.Child(h, a);
  }
  return h;
}

bool Allows(const Game& game, const Strategy& s, HistoryId h) {
  for (HistoryId cur = h; game.Parent(cur) >= 0; cur = game.Parent(cur)) {
    const int k = game.NonterminalIndex(game.Parent(cur));
    if (s.choice[static_cast<std::size_t>(k)] !=
        game.IncomingProfile(cur)[static_cast<std::size_t>(s.owner)]) {
      return false;
    }
  }
  return true;
}

std::vector<HistoryId> AllowedHistories(const Game& game, const Strategy& s) {
  std::vector<HistoryId> out;
  for (HistoryId h : game.nonterminals()) {
    if (Allows(game, s, h)) out.push_back(h);
  }
  return out;
}

Strategy ReplacementStrategy(const Game& game, const Strategy& s, HistoryId h) {
  Strategy out = s;
  for (HistoryId cur = h; game.Parent(cur) >= 0; cur = game.Parent(cur)) {
    const int k = game.NonterminalIndex(game.Parent(cur));
    out.choice[static_cast<std::size_t>(k)] =
        game.IncomingProfile(cur)[static_cast<std::size_t>(s.owner)];
  }
  return out;
}

bool BehaviorallyEquivalent(const Game& game, const Strategy& s, const Strategy& t) {
  if (s.owner != t.owner) return false;
  for (HistoryId h : game.nonterminals()) {
    const bool a = Allows(game, s, h);
    if (a != Allows(game, t, h)) return false;
    const auto k = static_cast<std::size_t>(game.NonterminalIndex(h));
    if (a && s.choice[k] != t.choice[k]) return false;
  }
  return true;
}

std::string StrategyName(const Game& game, const Strategy& s) {
  std::string name;
  for (HistoryId h : game.nonterminals()) {
    if (!game.IsActive(h, s.owner)) continue;
    if (!name.empty()) name += '.';
    name += game.Actions(h, s.owner)[static_cast<std::size_t>(
        s.choice[static_cast<std::size_t>(game.NonterminalIndex(h))])];
  }
  if (name.empty()) {
    if (game.nonterminals().empty()) return "-";
    name = game.Actions(game.root(), s.owner)[0];
  }
  return name;
}

}  // namespace prudens
