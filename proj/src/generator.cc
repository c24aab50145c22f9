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

#include "prudens/generator.h"

#include <string>

namespace prudens {
namespace {

const char* const kNames[3][3] = {{"T", "M", "B"}, {"L", "C", "R"}, {"x", "y", "z"}};

}  // namespace

std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

GameGenerator::GameGenerator(std::uint64_t seed, GeneratorBounds bounds) : rng_(seed), bounds_(bounds) {}

int GameGenerator::Below(int n) { return n <= 1 ? 0 : static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

bool GameGenerator::Chance(int percent) { return Below(100) < percent; }

Rational GameGenerator::Payoff() {
  const int r = bounds_.payoff_range;
  const int v = Below(2 * r + 1) - r;
  if (Chance(15)) return Rational(2 * v + 1, 2);
  return Rational(v);
}

// `histories` counts nodes already placed; `strategies` holds the running
// strategy count per player.
NodeSpec GameGenerator::Grow(int depth, int& histories, std::vector<std::size_t>& strategies) {
  NodeSpec node;
  const auto terminal = [&] {
    NodeSpec leaf;
    for (int i = 0; i < players_; ++i) leaf.payoff.push_back(Payoff());
    return leaf;
  };
  // Pick movers: alternating (one mover) or simultaneous.
  std::vector<int> counts(static_cast<std::size_t>(players_), 1);
  std::vector<int> candidates;
  for (int i = 0; i < players_; ++i) {
    if (strategies[static_cast<std::size_t>(i)] * 2 <= static_cast<std::size_t>(bounds_.max_strategies)) {
      candidates.push_back(i);
    }
  }
  if (candidates.empty()) return terminal();
  const bool simultaneous = candidates.size() > 1 && Chance(45);
  std::vector<int> movers;
  if (simultaneous) {
    for (int i : candidates) {
      if (Chance(70)) movers.push_back(i);
    }
    if (movers.empty()) movers.push_back(candidates[static_cast<std::size_t>(Below(static_cast<int>(candidates.size())))]);
  } else {
    movers.push_back(candidates[static_cast<std::size_t>(Below(static_cast<int>(candidates.size())))]);
  }
  int product = 1;
  for (int i : movers) {
    const std::size_t cur = strategies[static_cast<std::size_t>(i)];
    int a = 2 + Below(bounds_.max_actions - 1);
    while (a > 2 && cur * static_cast<std::size_t>(a) > static_cast<std::size_t>(bounds_.max_strategies)) --a;
    counts[static_cast<std::size_t>(i)] = a;
    product *= a;
  }
  while (histories + product > bounds_.max_histories && product > 1) {
    // Trim the largest action set, dropping movers that fall to one action.
    int big = -1;
    for (int i : movers) {
      if (counts[static_cast<std::size_t>(i)] > 1 && (big < 0 || counts[static_cast<std::size_t>(i)] > counts[static_cast<std::size_t>(big)])) big = i;
    }
    product /= counts[static_cast<std::size_t>(big)];
    --counts[static_cast<std::size_t>(big)];
    product *= counts[static_cast<std::size_t>(big)];
  }
  if (product <= 1) return terminal();
  histories += product;
  for (int i = 0; i < players_; ++i) {
    const int a = counts[static_cast<std::size_t>(i)];
    std::vector<std::string> names;
    if (a == 1) {
      names.emplace_back(kWaitAction);
    } else {
      for (int k = 0; k < a; ++k) names.emplace_back(kNames[i][k]);
    }
    node.actions.push_back(std::move(names));
    strategies[static_cast<std::size_t>(i)] *= static_cast<std::size_t>(a);
  }
  for (int c = 0; c < product; ++c) {
    const bool expand = depth + 1 < bounds_.max_stages && Chance(depth == 0 ? 40 : 25);
    node.children.push_back(expand ? Grow(depth + 1, histories, strategies) : terminal());
  }
  return node;
}

Game GameGenerator::Next() {
  const int r = Below(10);
  players_ = r < 1 ? 1 : r < 7 ? 2 : 3;
  if (players_ > bounds_.max_players) players_ = bounds_.max_players;
  std::vector<std::string> names;
  for (int i = 0; i < players_; ++i) names.push_back("P" + std::to_string(i + 1));
  int histories = 1;
  std::vector<std::size_t> strategies(static_cast<std::size_t>(players_), 1);
  NodeSpec root;
  // The root must be a decision node: retry until some player moves.
  for (int attempt = 0; attempt < 8 && root.children.empty(); ++attempt) {
    histories = 1;
    std::fill(strategies.begin(), strategies.end(), 1);
    root = Grow(0, histories, strategies);
  }
  if (root.children.empty()) {
    root = NodeSpec{};
    root.actions.assign(static_cast<std::size_t>(players_), {std::string(kWaitAction)});
    root.actions[0] = {"T", "B"};
    for (int c = 0; c < 2; ++c) {
      NodeSpec leaf;
      for (int i = 0; i < players_; ++i) leaf.payoff.push_back(Payoff());
      root.children.push_back(leaf);
    }
  }
  return Game::Create(names, root);
}

Game GenerateGame(std::uint64_t seed, const GeneratorBounds& bounds) {
  return GameGenerator(seed, bounds).Next();
}

}  // namespace prudens
