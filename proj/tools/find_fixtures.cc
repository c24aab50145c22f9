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

// Bounded search for the frozen test fixtures. Run once; the outputs under
// tests/fixtures are checked in and re-verified by the unit tests.
//
//   prudens_find_fixtures <out-dir>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>

#include "prudens/beliefs.h"
#include "prudens/dsl.h"
#include "prudens/generator.h"
#include "prudens/procedures.h"
#include "prudens/report.h"

using namespace prudens;

namespace {

void Write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  std::cout << "wrote " << path << "\n";
}

Json Names(const StrategySpace& space, PlayerId i, const CoEvent& e) {
  Json j = Json::array();
  for (int co = 0; co < space.NumCoProfiles(i); ++co) {
    if (e[static_cast<std::size_t>(co)]) j.push_back(space.CoProfileName(i, co));
  }
  return j;
}

int TotalStrategies(const StrategySpace& s) {
  int t = 0;
  for (PlayerId i = 0; i < s.game().num_players(); ++i) t += s.NumStrategies(i);
  return t;
}

using Levels = std::vector<std::vector<Rational>>;

// Three probability vectors; the last has full support.
Levels RandomLevels(std::mt19937_64& rng, int n) {
  Levels nu(3, std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (int level = 0; level < 3; ++level) {
    Rational total = 0;
    for (int c = 0; c < n; ++c) {
      const bool on = level == 2 || rng() % 2 == 0;
      if (on) nu[level][static_cast<std::size_t>(c)] = static_cast<long>(1 + rng() % 3);
      total += nu[level][static_cast<std::size_t>(c)];
    }
    if (total == 0) {
      nu[level][0] = 1;
      total = 1;
    }
    for (auto& x : nu[level]) x /= total;
  }
  return nu;
}

// (1 - e - e^2) nu0 + e nu1 + e^2 nu2.
PriorCNPS PriorOf(const Levels& nu, PlayerId owner) {
  std::vector<Hyperreal> prior;
  for (std::size_t c = 0; c < nu[0].size(); ++c) {
    prior.push_back(Hyperreal::FromCoefficients({nu[0][c], nu[1][c] - nu[0][c], nu[2][c] - nu[0][c]},
                                                kDefaultDegreeBound));
  }
  return PriorCNPS::Create(owner, std::move(prior));
}

// Each event conditions the first level that gives it positive mass.
ExplicitCPS CpsOf(const Levels& nu, const ConditioningFamily& fam) {
  std::vector<std::vector<Rational>> table;
  for (int e = 0; e < fam.num_events(); ++e) {
    const CoEvent& ev = fam.Event(e);
    for (const auto& level : nu) {
      Rational mass = 0;
      for (std::size_t c = 0; c < level.size(); ++c) {
        if (ev[c]) mass += level[c];
      }
      if (mass == 0) continue;
      std::vector<Rational> row(level.size(), 0);
      for (std::size_t c = 0; c < level.size(); ++c) {
        if (ev[c]) row[c] = level[c] / mass;
      }
      table.push_back(std::move(row));
      break;
    }
  }
  return ExplicitCPS::Create(fam.owner(), fam, std::move(table));
}

Json BeliefJson(const Belief& b) {
  Json j;
  if (const auto* p = std::get_if<PriorCNPS>(&b)) {
    j["kind"] = "prior";
    j["prior"] = Json::array();
    for (const auto& x : p->prior()) j["prior"].push_back(x.ToString());
  } else {
    j["kind"] = "cps";
    j["table"] = Json::array();
    for (const auto& row : std::get<ExplicitCPS>(b).table()) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(ToString(x));
      j["table"].push_back(r);
    }
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : ".";
  GeneratorBounds bounds;
  bounds.max_players = 2;

  // 1. A non-static game with at least three IA rounds in which some player's
  //    co-player sets shrink twice, with a verified step-3 witness, and a
  //    verified CPS witness that would not do at the previous step.
  {
    auto analyse = [](const StrategySpace& space, const TheoremReport& r) {
      const Game& g = space.game();
      Json t;
      t["fixpoint"] = r.ia.fixpoint;
      Json deep = Json::array();
      for (const auto& w : r.cnps.cnps) {
        if (w.step != 3 || !w.check.ok()) continue;
        const auto& steps = r.ia.steps;
        const CoEvent e0 = space.CoMask(w.player, steps[0]), e1 = space.CoMask(w.player, steps[1]),
                      e2 = space.CoMask(w.player, steps[2]);
        if (e0 == e1 || e1 == e2) continue;
        deep.push_back({{"player", g.player_name(w.player)}, {"strategy", space.name(w.player, w.strategy)}});
      }
      t["step3_witnesses_with_two_shrinks"] = deep;
      Json nonnest = Json::array();
      for (const auto& w : r.cps.cps) {
        if (w.step < 2 || !w.check.ok()) continue;
        CpsWitness earlier = w;
        earlier.step = w.step - 1;
        if (!CheckCpsWitness(space, r.cps, earlier).support) {
          nonnest.push_back({{"step", w.step}, {"player", g.player_name(w.player)},
                             {"strategy", space.name(w.player, w.strategy)}});
        }
      }
      t["cps_non_nesting"] = nonnest;
      return t;
    };
    std::optional<std::pair<std::uint64_t, int>> best;
    for (std::uint64_t seed = 1; seed <= 20000; ++seed) {
      const Game g = GenerateGame(MixSeed(seed), bounds);
      if (g.IsStatic()) continue;
      const StrategySpace space = StrategySpace::Full(std::make_shared<const Game>(g));
      if (RunIteratedAdmissibility(space).fixpoint < 3) continue;
      const int size = TotalStrategies(space);
      if (best && size >= best->second) continue;
      const TheoremReport r = VerifyTheorems(space);
      if (!r.ok()) continue;
      const Json t = analyse(space, r);
      if (t["step3_witnesses_with_two_shrinks"].empty() || t["cps_non_nesting"].empty()) continue;
      best = {seed, size};
    }
    if (!best) {
      std::cerr << "no deep game found\n";
      return 1;
    }
    const Game g = GenerateGame(MixSeed(best->first), bounds);
    const StrategySpace space = StrategySpace::Full(std::make_shared<const Game>(g));
    Json t = analyse(space, VerifyTheorems(space));
    t["generator_seed"] = best->first;
    Write(dir + "/deep_three_round.seqgame", "# Found by prudens_find_fixtures.\n" + SerializeGame(g));
    Write(dir + "/deep_three_round.json", t.dump(2) + "\n");
  }

  // 2. Belief-operator witnesses on small non-static games: c-strong and
  //    strong belief are not monotone, and neither implies the other.
  {
    std::mt19937_64 rng(20260101);
    Json found;
    for (std::uint64_t seed = 1; seed <= 4000 && found.size() < 4; ++seed) {
      const Game g = GenerateGame(MixSeed(seed + 1000000), bounds);
      if (g.IsStatic() || g.num_players() != 2) continue;
      const StrategySpace space = StrategySpace::Full(std::make_shared<const Game>(g));
      for (PlayerId i = 0; i < 2; ++i) {
        const ConditioningFamily fam(space, i);
        const int n = space.NumCoProfiles(i);
        if (fam.num_events() < 2 || n > 12) continue;
        for (int trial = 0; trial < 40; ++trial) {
          const Levels nu = RandomLevels(rng, n);
          const Belief b = trial % 2 ? Belief(PriorOf(nu, i)) : Belief(CpsOf(nu, fam));
          CoEvent e(static_cast<std::size_t>(n), 0), f;
          for (auto& x : e) x = rng() % 2;
          f = e;
          for (auto& x : f) x = x || rng() % 3 == 0;
          if (std::count(e.begin(), e.end(), 1) == 0) continue;
          const bool cse = CStronglyBelieves(b, fam, e), csf = CStronglyBelieves(b, fam, f);
          const bool sbe = StronglyBelieves(b, fam, e), sbf = StronglyBelieves(b, fam, f);
          auto record = [&](const char* key, const CoEvent& x, const CoEvent* y) {
            if (found.contains(key)) return;
            Json w;
            w["game"] = SerializeGame(g);
            w["player"] = g.player_name(i);
            w["belief"] = BeliefJson(b);
            w["E"] = Names(space, i, x);
            if (y) w["F"] = Names(space, i, *y);
            found[key] = w;
          };
          if (cse && !csf) record("c_strong_not_monotone", e, &f);
          if (sbe && !sbf) record("strong_not_monotone", e, &f);
          if (sbe && !cse) record("strong_not_c_strong", e, nullptr);
          if (cse && !sbe) record("c_strong_not_strong", e, nullptr);
        }
      }
    }
    for (const auto& [key, w] : found.items()) {
      Write(dir + "/" + key + ".seqgame", "# Found by prudens_find_fixtures.\n" + w["game"].get<std::string>());
      Json t = w;
      t.erase("game");
      Write(dir + "/" + key + ".json", t.dump(2) + "\n");
    }
    if (found.size() < 4) std::cerr << "only " << found.size() << " belief witnesses found\n";
  }
  return 0;
}
