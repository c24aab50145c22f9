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

#ifndef PRUDENS_GENERATOR_H_
#define PRUDENS_GENERATOR_H_

#include <cstdint>
#include <random>

#include "prudens/dsl.h"
#include "prudens/game.h"

namespace prudens {

struct GeneratorBounds {
  int max_players = 3;
  int max_histories = 12;   // all nodes, terminal ones included
  int max_actions = 3;      // per player and history
  int max_strategies = 6;   // per player
  int max_stages = 3;
  int payoff_range = 3;     // payoffs in [-range, range], sometimes halves
};

// Deterministic for a given seed and bounds on every platform: only the raw
// mt19937_64 stream is used, never the std distributions.
class GameGenerator {
 public:
  explicit GameGenerator(std::uint64_t seed, GeneratorBounds bounds = {});
  Game Next();

 private:
  int Below(int n);  // uniform in [0, n)
  bool Chance(int percent);
  Rational Payoff();
  NodeSpec Grow(int depth, int& histories, std::vector<std::size_t>& strategies);

  std::mt19937_64 rng_;
  GeneratorBounds bounds_;
  int players_ = 0;
};

Game GenerateGame(std::uint64_t seed, const GeneratorBounds& bounds = {});

// SplitMix64 step; used to derive per-game seeds from a campaign seed.
std::uint64_t MixSeed(std::uint64_t x);

}  // namespace prudens

#endif  // PRUDENS_GENERATOR_H_
