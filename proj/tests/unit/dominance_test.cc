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

#include <random>

#include "../oracles/oracles.h"
#include "doctest.h"
#include "prudens/dominance.h"
#include "prudens/dsl.h"
#include "testkit.h"

using namespace prudens;

namespace {

StrategySpace Load(const std::string& name) { return testkit::FullOf(LoadGameFile(testkit::CorpusDir() + "/" + name + ".seqgame")); }

}  // namespace

TEST_SUITE("dominance") {
  TEST_CASE("pure weak dominance") {
    const StrategySpace space = Load("weak_dom_2x2");
    const auto all = space.Everything();
    const auto d = WeaklyDominated(space, all, 0, space.FindByName(0, "B"));
    REQUIRE(d.has_value());
    CHECK(d->weights == std::vector<std::pair<int, Rational>>{{space.FindByName(0, "T"), Rational(1)}});
    CHECK(VerifyDominance(space, all, 0, space.FindByName(0, "B"), *d));
    CHECK_FALSE(WeaklyDominated(space, all, 0, space.FindByName(0, "T")).has_value());
  }

  TEST_CASE("matching pennies") {
    const StrategySpace space = Load("matching_pennies");
    const auto all = space.Everything();
    for (PlayerId i = 0; i < 2; ++i) {
      for (int s = 0; s < 2; ++s) {
        CHECK_FALSE(WeaklyDominated(space, all, i, s).has_value());
        CHECK_FALSE(oracle::Dominated(space, all, i, s));
        const auto nu = JustifyingFullSupportMeasure(space, all, i, s);
        REQUIRE(nu.has_value());
        CHECK(VerifyJustifyingMeasure(space, all, i, s, *nu));
      }
    }
  }

  TEST_CASE("only a mixture dominates") {
    const StrategySpace space = testkit::FullOf(
        ParseGame("players P1 P2\nmatrix P1: U M D  P2: L R\n(U,L)=4 0 (U,R)=0 0 (M,L)=0 0 (M,R)=4 0 (D,L)=1 0 (D,R)=1 0\n"));
    const auto all = space.Everything();
    const int d = space.FindByName(0, "D");
    CHECK_FALSE(WeaklyDominatedWithin(space, 0, d, {0}, {0, 1}).has_value());
    CHECK_FALSE(WeaklyDominatedWithin(space, 0, d, {1}, {0, 1}).has_value());
    const auto mix = WeaklyDominated(space, all, 0, d);
    REQUIRE(mix.has_value());
    CHECK(mix->weights.size() == 2);
    CHECK(VerifyDominance(space, all, 0, d, *mix));
    CHECK(oracle::Dominated(space, all, 0, d));
    CHECK_FALSE(JustifyingFullSupportMeasure(space, all, 0, d).has_value());
  }

  TEST_CASE("dominant strategy is justified") {
    const StrategySpace space = Load("weak_dom_2x2");
    const auto all = space.Everything();
    const int t = space.FindByName(0, "T");
    const auto nu = JustifyingFullSupportMeasure(space, all, 0, t);
    REQUIRE(nu.has_value());
    for (const auto& x : *nu) CHECK(x > 0);
    CHECK(VerifyJustifyingMeasure(space, all, 0, t, *nu));
    // a measure with a zero entry is not full support
    Measure bad = *nu;
    bad[0] = 0;
    bad[1] = 1;
    CHECK_FALSE(VerifyJustifyingMeasure(space, all, 0, t, bad));
  }

  TEST_CASE("iterated admissibility by hand") {
    const StrategySpace mp = Load("matching_pennies");
    const IATrace a = IteratedAdmissibility(mp);
    CHECK(a.fixpoint == 0);
    CHECK(a.steps.back() == mp.Everything());

    const StrategySpace wd = Load("weak_dom_2x2");
    const IATrace b = IteratedAdmissibility(wd);
    REQUIRE(b.fixpoint == 2);
    CHECK(b.steps[1].members[0] == std::vector<int>{wd.FindByName(0, "T")});
    CHECK(b.steps[1].members[1].size() == 2);
    CHECK(b.steps[2].members[1] == std::vector<int>{wd.FindByName(1, "L")});
  }

  TEST_CASE("trace invariants and certificates") {
    std::vector<Game> games;
    for (const auto& ng : testkit::CorpusGames()) games.push_back(ng.game);
    for (int k = 0; k < 150; ++k) games.push_back(testkit::FuzzGame(77, k));
    for (const Game& g : games) {
      const StrategySpace space = testkit::FullOf(g);
      const IATrace t = IteratedAdmissibility(space);
      int bound = 0;
      for (PlayerId i = 0; i < space.num_players(); ++i) bound += space.NumStrategies(i) - 1;
      CHECK(t.fixpoint <= bound);
      REQUIRE(static_cast<int>(t.steps.size()) == t.fixpoint + 2);
      CHECK(t.steps.front() == space.Everything());
      CHECK(t.steps[static_cast<std::size_t>(t.fixpoint)] == t.steps.back());
      for (std::size_t n = 1; n < t.steps.size(); ++n) {
        CHECK(t.steps[n].IsSubsetOf(t.steps[n - 1]));
        CHECK_FALSE(t.steps[n].AnyEmpty());
        if (static_cast<int>(n) <= t.fixpoint) CHECK(t.steps[n] != t.steps[n - 1]);
      }
      for (const auto& e : t.eliminated) {
        CHECK(VerifyDominance(space, t.steps[static_cast<std::size_t>(e.step - 1)], e.player, e.strategy, e.certificate));
      }
    }
  }

  TEST_CASE("matches brute-force iterated admissibility") {
    std::vector<Game> games;
    for (const auto& ng : testkit::CorpusGames()) games.push_back(ng.game);
    GeneratorBounds small;
    small.max_strategies = 4;
    for (int k = 0; k < 200; ++k) games.push_back(testkit::FuzzGame(78, k, small));
    for (const Game& g : games) {
      const StrategySpace space = testkit::FullOf(g);
      const IATrace t = IteratedAdmissibility(space);
      const auto brute = oracle::IteratedAdmissibility(space);
      CHECK(brute == t.steps);
    }
  }

  TEST_CASE("admissible iff justified by a full-support measure") {
    std::vector<Game> games;
    for (const auto& ng : testkit::CorpusGames()) games.push_back(ng.game);
    for (int k = 0; k < 100; ++k) games.push_back(testkit::FuzzGame(79, k));
    const auto t = testkit::AdmissibilityEquivalence(games, 1000000);
    INFO(t.Summary());
    CHECK(t.ok());
    CHECK(t.aux > 500);
  }
}
