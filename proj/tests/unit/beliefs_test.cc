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
#include "prudens/beliefs.h"
#include "prudens/dsl.h"
#include "testkit.h"

using namespace prudens;

namespace {

Hyperreal H(const char* s) { return Hyperreal::Parse(s); }

// P1 has one action; P2 picks a, b or c. P1's co-profiles are P2's actions.
StrategySpace Abc() {
  return testkit::FullOf(ParseGame("players P1 P2\nmatrix P1: x  P2: a b c\n(x,a)=1 0 (x,b)=0 0 (x,c)=0 0\n"));
}
StrategySpace Ab() {
  return testkit::FullOf(ParseGame("players P1 P2\nmatrix P1: x  P2: a b\n(x,a)=1 0 (x,b)=0 0\n"));
}

CoEvent Ev(std::initializer_list<int> bits) { return CoEvent(bits.begin(), bits.end()); }

}  // namespace

TEST_SUITE("beliefs") {
  TEST_CASE("conditioning family") {
    for (const auto& [name, g] : testkit::CorpusGames()) {
      const StrategySpace space = testkit::FullOf(g);
      for (PlayerId i = 0; i < space.num_players(); ++i) {
        const ConditioningFamily fam(space, i);
        CHECK(fam.EventOf(0) == 0);
        CHECK(std::count(fam.Event(0).begin(), fam.Event(0).end(), 1) == space.NumCoProfiles(i));
        for (int e = 0; e < fam.num_events(); ++e) {
          CHECK_FALSE(fam.Members(e).empty());
          CHECK(fam.Contains(0, e));
          for (int f = 0; f < e; ++f) CHECK(fam.Event(e) != fam.Event(f));
        }
      }
    }
  }

  TEST_CASE("prior validation") {
    CHECK_NOTHROW(PriorCNPS::Create(0, {H("1 - e"), H("e")}));
    CHECK_THROWS_AS(PriorCNPS::Create(0, {H("1/2"), H("1/4")}), InvalidBelief);
    CHECK_THROWS_AS(PriorCNPS::Create(0, {Hyperreal(1), Hyperreal(0)}), InvalidBelief);
    CHECK_THROWS_AS(PriorCNPS::Create(0, {H("1 + e"), H("-e")}), InvalidBelief);
    const PriorCNPS u = PriorCNPS::Uniform(0, 4);
    for (const auto& x : u.prior()) CHECK(x == Hyperreal(Rational(1, 4)));
  }

  TEST_CASE("conditionals of a prior") {
    const Game g = testkit::FixtureGame("deep_three_round");
    const StrategySpace space = testkit::FullOf(g);
    const ConditioningFamily fam(space, 0);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const PriorCNPS p = testkit::PriorOf(testkit::RandomLevels(rng, fam.num_co_profiles()), 0);
      const Belief b = p;
      CHECK(Conditional(b, fam, 0).mass == p.prior());
      for (int e = 0; e < fam.num_events(); ++e) {
        const ConditionalMeasure m = Conditional(b, fam, e);
        CHECK(m.Total() > Hyperreal(0));
        // Normalized by series division, the conditional sums to exactly 1
        // in the first three orders.
        std::vector<Rational> sum(3, 0);
        for (std::size_t c = 0; c < m.mass.size(); ++c) {
          if (!fam.Event(e)[c]) {
            CHECK(m.mass[c].IsZero());
            continue;
          }
          const auto [shift, q] = oracle::Divide(m.mass[c], m.Total(), 3);
          for (int k = 0; k + shift < 3; ++k) sum[static_cast<std::size_t>(k + shift)] += q[static_cast<std::size_t>(k)];
        }
        CHECK(sum == std::vector<Rational>{1, 0, 0});
      }
    }
  }

  TEST_CASE("chain rule") {
    const Game g = testkit::FixtureGame("deep_three_round");
    const StrategySpace space = testkit::FullOf(g);
    const ConditioningFamily fam(space, 0);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
      const ExplicitCPS cps = testkit::CpsOf(testkit::RandomLevels(rng, fam.num_co_profiles()), fam);
      CHECK(ValidateChainRule(cps, fam).ok);
    }
    // A full-support rational prior, conditioned.
    testkit::Levels flat(1, std::vector<Rational>(static_cast<std::size_t>(fam.num_co_profiles())));
    for (std::size_t c = 0; c < flat[0].size(); ++c) flat[0][c] = Rational(static_cast<long>(c + 1), 1);
    Rational total = 0;
    for (auto& x : flat[0]) total += x;
    for (auto& x : flat[0]) x /= total;
    const ExplicitCPS good = testkit::CpsOf(flat, fam);
    CHECK(ValidateChainRule(good, fam).ok);
    // Perturb one entry of a proper sub-event, keeping the row a distribution.
    int e = 1;
    while (e < fam.num_events() && fam.Members(e).size() < 2) ++e;
    REQUIRE(e < fam.num_events());
    auto table = good.table();
    const auto& mem = fam.Members(e);
    table[static_cast<std::size_t>(e)][static_cast<std::size_t>(mem[0])] += Rational(1, 100);
    table[static_cast<std::size_t>(e)][static_cast<std::size_t>(mem[1])] -= Rational(1, 100);
    const ExplicitCPS bad = ExplicitCPS::Create(0, fam, table);
    const ChainRuleReport r = ValidateChainRule(bad, fam);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.violations.empty());
    bool names_e = false;
    for (const auto& v : r.violations) names_e = names_e || v.inner == e || v.outer == e;
    CHECK(names_e);
    CHECK_THROWS_AS(ExplicitCPS::Create(0, fam, {}), IncompleteTable);
  }

  TEST_CASE("cautious belief") {
    const StrategySpace ab = Ab();
    const ConditioningFamily f2(ab, 0);
    const Belief lex = PriorCNPS::Create(0, {H("1 - e"), H("e")});
    const Belief half = PriorCNPS::Create(0, {H("1/2"), H("1/2")});
    CHECK(CautiouslyBelieves(lex, f2, 0, Ev({1, 0})).believed);
    CHECK_FALSE(CautiouslyBelieves(half, f2, 0, Ev({1, 0})).believed);
    CHECK(CautiouslyBelieves(half, f2, 0, Ev({1, 1})).believed);
    const auto vac = CautiouslyBelieves(lex, f2, 0, Ev({0, 0}));
    CHECK_FALSE(vac.believed);
    CHECK(vac.vacuous);

    const StrategySpace abc = Abc();
    const ConditioningFamily f3(abc, 0);
    const Belief three = PriorCNPS::Create(0, {H("1 - e - e^2"), H("e"), H("e^2")});
    CHECK(CautiouslyBelieves(three, f3, 0, Ev({1, 1, 0})).believed);
    CHECK_FALSE(CautiouslyBelieves(three, f3, 0, Ev({1, 0, 1})).believed);
    CHECK(CautiouslyBelieves(three, f3, 0, Ev({1, 1, 1})).believed);
  }

  TEST_CASE("weak belief") {
    const StrategySpace ab = Ab();
    const ConditioningFamily f2(ab, 0);
    CHECK(WeaklyBelieves(PriorCNPS::Create(0, {H("1 - e"), H("e")}), f2, 0, Ev({1, 0})));
    CHECK_FALSE(WeaklyBelieves(PriorCNPS::Create(0, {H("1/2"), H("1/2")}), f2, 0, Ev({1, 0})));
  }

  TEST_CASE("c-strong and strong belief") {
    for (const auto& [name, g] : testkit::CorpusGames()) {
      const StrategySpace space = testkit::FullOf(g);
      for (PlayerId i = 0; i < space.num_players(); ++i) {
        const ConditioningFamily fam(space, i);
        const int n = fam.num_co_profiles();
        const Belief u = PriorCNPS::Uniform(i, n);
        CHECK(CStronglyBelieves(u, fam, CoEvent(static_cast<std::size_t>(n), 1)));
        CHECK(CStronglyBelieves(u, fam, CoEvent(static_cast<std::size_t>(n), 0)));
        if (n > 1) {
          CoEvent some(static_cast<std::size_t>(n), 1);
          some[0] = 0;
          CHECK_FALSE(StronglyBelieves(u, fam, some));
        }
      }
    }
    // A CPS concentrated on E wherever E is possible.
    const Game g = testkit::FixtureGame("deep_three_round");
    const StrategySpace space = testkit::FullOf(g);
    const ConditioningFamily fam(space, 0);
    const int n = fam.num_co_profiles();
    CoEvent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(n - 1)] = 1;
    testkit::Levels nu(2, std::vector<Rational>(static_cast<std::size_t>(n), 0));
    nu[0][static_cast<std::size_t>(n - 1)] = 1;
    for (auto& x : nu[1]) x = Rational(1, n);
    CHECK(StronglyBelieves(testkit::CpsOf(nu, fam), fam, e));
  }

  TEST_CASE("stored belief witnesses") {
    struct Case {
      const char* name;
      bool c_strong_e, c_strong_f, strong_e, strong_f;
      bool has_f;
    };
    for (const Case& c : {Case{"c_strong_not_monotone", true, false, false, false, true},
                          Case{"strong_not_monotone", false, false, true, false, true},
                          Case{"strong_not_c_strong", false, false, true, false, false},
                          Case{"c_strong_not_strong", true, false, false, false, false}}) {
      CAPTURE(c.name);
      const Game g = testkit::FixtureGame(c.name);
      const Json t = testkit::FixtureTranscript(c.name);
      const StrategySpace space = testkit::FullOf(g);
      const PlayerId i = g.PlayerIndex(t.at("player").get<std::string>());
      const ConditioningFamily fam(space, i);
      const Belief b = testkit::BeliefFromJson(fam, t.at("belief"));
      if (const auto* cps = std::get_if<ExplicitCPS>(&b)) CHECK(ValidateChainRule(*cps, fam).ok);
      const CoEvent e = testkit::EventFromNames(space, i, t.at("E"));
      if (std::string(c.name).find("not_monotone") != std::string::npos) {
        const CoEvent f = testkit::EventFromNames(space, i, t.at("F"));
        for (std::size_t k = 0; k < e.size(); ++k) CHECK((!e[k] || f[k]));
        if (c.c_strong_e) {
          CHECK(CStronglyBelieves(b, fam, e));
          CHECK_FALSE(CStronglyBelieves(b, fam, f));
        } else {
          CHECK(StronglyBelieves(b, fam, e));
          CHECK_FALSE(StronglyBelieves(b, fam, f));
        }
        CHECK_FALSE(g.IsStatic());
      } else {
        CHECK(StronglyBelieves(b, fam, e) == c.strong_e);
        CHECK(CStronglyBelieves(b, fam, e) == c.c_strong_e);
      }
    }
  }

  TEST_CASE("standard approximation of cautious belief") {
    // For a CPS, when every profile of E at h has positive probability,
    // cautious belief at h is just support inclusion.
    std::mt19937_64 rng(9);
    int tested = 0;
    for (int k = 0; k < 300; ++k) {
      const Game g = GenerateGame(rng());
      const StrategySpace space = testkit::FullOf(g);
      const ConditioningFamily fam(space, 0);
      const ExplicitCPS cps = testkit::CpsOf(testkit::RandomLevels(rng, fam.num_co_profiles()), fam);
      for (int h = 0; h < space.num_nonterminals(); ++h) {
        const auto& row = cps.Row(fam.EventOf(h));
        const CoEvent& cond = fam.Event(fam.EventOf(h));
        CoEvent e(cond.size(), 0);
        bool positive = true, inside = true, meets = false;
        for (std::size_t c = 0; c < e.size(); ++c) {
          e[c] = static_cast<char>(row[c] > 0 || rng() % 3 == 0);
          if (cond[c] && e[c]) {
            meets = true;
            positive = positive && row[c] > 0;
          }
          if (row[c] > 0 && !e[c]) inside = false;
        }
        if (!positive || !meets) continue;
        ++tested;
        CHECK(CautiouslyBelieves(cps, fam, h, e).believed == inside);
      }
    }
    CHECK(tested > 100);
  }

  TEST_CASE("cautious belief implies weak belief") {
    const auto t = testkit::CautiousImpliesWeak(31, 3000);
    INFO(t.Summary());
    CHECK(t.ok());
    CHECK(t.aux > 300);
  }

  TEST_CASE("event and history forms of c-strong belief agree") {
    const auto t = testkit::CStrongForms(32, 2000);
    INFO(t.Summary());
    CHECK(t.ok());
  }
}
