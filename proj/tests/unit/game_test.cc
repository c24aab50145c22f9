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

#include <memory>
#include <random>

#include "../oracles/oracles.h"
#include "doctest.h"
#include "prudens/dsl.h"
#include "prudens/game.h"
#include "prudens/strategy_space.h"
#include "testkit.h"

using namespace prudens;

namespace {

const char* kTwoRounds = R"(players P1
at / actions P1: a b
payoff /(b) = 0
at /(a) actions P1: a b
payoff /(a)/(a) = 1
payoff /(a)/(b) = 2
)";

std::vector<Game> RandomGames(std::uint64_t seed, int n) {
  std::vector<Game> out;
  GeneratorBounds b;
  b.max_strategies = 5;
  for (int k = 0; k < n; ++k) out.push_back(GenerateGame(MixSeed(seed + static_cast<std::uint64_t>(k)), b));
  return out;
}

}  // namespace

TEST_SUITE("game") {
  TEST_CASE("strategy counts") {
    const Game one = ParseGame("players P1 P2\nmatrix P1: T B  P2: L R\n(T,L)=1 1 (T,R)=0 0 (B,L)=0 0 (B,R)=1 1\n");
    CHECK(CountStrategies(one, 0) == 2);
    CHECK(CountStrategies(one, 1) == 2);
    const Game two = ParseGame(kTwoRounds);
    CHECK(CountStrategies(two, 0) == 4);
    CHECK(EnumerateStrategies(two, 0).size() == 4);
  }

  TEST_CASE("the root cannot be terminal") {
    NodeSpec leaf;
    leaf.payoff = {Rational(1)};
    CHECK_THROWS_AS(Game::Create({"P1"}, leaf), GameError);
  }

  TEST_CASE("static outcome is the action profile") {
    const Game g = ParseGame("players P1 P2\nmatrix P1: T B  P2: L R\n(T,L)=1 2 (T,R)=3 4 (B,L)=5 6 (B,R)=7 8\n");
    const auto s1 = EnumerateStrategies(g, 0), s2 = EnumerateStrategies(g, 1);
    const std::vector<Strategy> prof{s1[1], s2[0]};
    const HistoryId z = Path(g, prof);
    CHECK(g.HistoryName(z) == "/(B,L)");
    CHECK(g.Payoff(z, 0) == 5);
  }

  TEST_CASE("payoff table matches the tree walk") {
    for (const Game& g : RandomGames(100, 60)) {
      const StrategySpace space = testkit::FullOf(g);
      for (PlayerId i = 0; i < space.num_players(); ++i) {
        for (int s = 0; s < space.NumStrategies(i); ++s) {
          for (int co = 0; co < space.NumCoProfiles(i); ++co) {
            REQUIRE(space.Utility(i, s, co) == oracle::Payoff(space, i, s, co));
          }
        }
      }
    }
  }

  TEST_CASE("allow sets") {
    for (const Game& g : RandomGames(200, 60)) {
      for (PlayerId i = 0; i < g.num_players(); ++i) {
        const auto strategies = EnumerateStrategies(g, i);
        for (const auto& s : strategies) CHECK(Allows(g, s, g.root()));
        for (HistoryId h = 0; h < g.num_histories(); ++h) {
          for (const auto& s : strategies) REQUIRE(Allows(g, s, h) == oracle::Allows(g, s, h));
        }
      }
      // s in S(h) iff h is a prefix of the outcome of s.
      const StrategySpace space = testkit::FullOf(g);
      for (int co = 0; co < space.NumCoProfiles(0); ++co) {
        auto prof = space.CoProfile(0, co);
        for (int s = 0; s < space.NumStrategies(0); ++s) {
          prof[0] = s;
          std::vector<Strategy> full;
          for (PlayerId j = 0; j < g.num_players(); ++j) full.push_back(space.strategy(j, prof[static_cast<std::size_t>(j)]));
          const HistoryId z = Path(g, full);
          CHECK(z == oracle::Walk(g, full));
          for (HistoryId h = 0; h < g.num_histories(); ++h) {
            bool all = true;
            for (const auto& t : full) all = all && Allows(g, t, h);
            REQUIRE(all == g.IsPrefix(h, z));
          }
        }
      }
    }
  }

  TEST_CASE("prefix monotonicity and prefix-closed H_i(s)") {
    for (const Game& g : RandomGames(300, 40)) {
      for (PlayerId i = 0; i < g.num_players(); ++i) {
        for (const auto& s : EnumerateStrategies(g, i)) {
          for (HistoryId h = 1; h < g.num_histories(); ++h) {
            if (Allows(g, s, h)) REQUIRE(Allows(g, s, g.Parent(h)));
          }
        }
      }
    }
  }

  TEST_CASE("replacement strategies") {
    const Game two = ParseGame(kTwoRounds);
    const auto ss = EnumerateStrategies(two, 0);
    const HistoryId ha = two.FindHistory({{"a"}});
    for (const auto& s : ss) {
      CHECK(ReplacementStrategy(two, s, two.root()) == s);
      if (Allows(two, s, ha)) CHECK(ReplacementStrategy(two, s, ha) == s);
    }
    for (const Game& g : RandomGames(400, 60)) {
      for (PlayerId i = 0; i < g.num_players(); ++i) {
        for (const auto& s : EnumerateStrategies(g, i)) {
          for (HistoryId h : g.nonterminals()) {
            const Strategy r = ReplacementStrategy(g, s, h);
            REQUIRE(r == testkit::OracleReplacement(g, s, h));
            CHECK(Allows(g, r, h));
            CHECK(ReplacementStrategy(g, r, h) == r);
            const auto prefixes = g.StrictPrefixes(h);
            for (HistoryId k : g.nonterminals()) {
              const auto idx = static_cast<std::size_t>(g.NonterminalIndex(k));
              if (r.choice[idx] != s.choice[idx]) {
                CHECK(std::find(prefixes.begin(), prefixes.end(), k) != prefixes.end());
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("behavioral equivalence is realization equivalence") {
    for (const Game& g : RandomGames(500, 60)) {
      for (PlayerId i = 0; i < g.num_players(); ++i) {
        const auto ss = EnumerateStrategies(g, i);
        for (const auto& s : ss) {
          CHECK(BehaviorallyEquivalent(g, s, s));
          for (const auto& t : ss) REQUIRE(BehaviorallyEquivalent(g, s, t) == oracle::RealizationEquivalent(g, s, t));
        }
      }
    }
  }

  TEST_CASE("reduced strategies") {
    const Game st = ParseGame("players P1 P2\nmatrix P1: T M B  P2: L R\n(T,L)=0 0 (T,R)=0 0 (M,L)=0 0 (M,R)=0 0 (B,L)=0 0 (B,R)=0 0\n");
    for (const auto& cls : ReduceStrategies(st, 0)) CHECK(cls.size() == 1);
    const Game two = ParseGame(kTwoRounds);
    const auto classes = ReduceStrategies(two, 0);
    CHECK(classes.size() == 3);  // b.a and b.b coincide
    bool big = false;
    for (const auto& c : classes) big = big || c.size() > 1;
    CHECK(big);
    for (const Game& g : RandomGames(600, 40)) {
      for (PlayerId i = 0; i < g.num_players(); ++i) {
        const auto cls = ReduceStrategies(g, i);
        CHECK(cls.size() <= CountStrategies(g, i));
        const StrategySpace red = testkit::ReducedOf(g);
        CHECK(red.NumStrategies(i) == static_cast<int>(cls.size()));
        for (int s = 0; s < red.NumStrategies(i); ++s) {
          // the representative is the first member in enumeration order
          CHECK(red.strategy(i, s) == red.ClassMembers(i, s).front());
        }
      }
    }
  }

  TEST_CASE("strategy cap") {
    CHECK_THROWS_AS(StrategySpace::Full(std::make_shared<const Game>(ParseGame(kTwoRounds)), 3), SizeLimit);
  }
}
