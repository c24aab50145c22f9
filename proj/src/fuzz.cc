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

#include "prudens/fuzz.h"

#include <algorithm>
#include <atomic>
#include <memory>
#include <thread>

#include "prudens/dsl.h"

namespace prudens {
namespace {

void CollectNodes(NodeSpec& n, bool root, std::vector<NodeSpec*>& inner, std::vector<NodeSpec*>& leaves) {
  if (n.children.empty()) {
    leaves.push_back(&n);
    return;
  }
  if (!root) inner.push_back(&n);
  for (auto& c : n.children) CollectNodes(c, false, inner, leaves);
}

const NodeSpec& FirstLeaf(const NodeSpec& n) { return n.children.empty() ? n : FirstLeaf(n.children.front()); }

void RemoveAction(NodeSpec& n, std::size_t player, std::size_t action) {
  std::vector<NodeSpec> kept;
  for (std::size_t c = 0; c < n.children.size(); ++c) {
    // Decode the child's profile in product order, first player most significant.
    std::size_t rest = c, mine = 0;
    for (std::size_t j = n.actions.size(); j-- > 0;) {
      const std::size_t a = rest % n.actions[j].size();
      rest /= n.actions[j].size();
      if (j == player) mine = a;
    }
    if (mine != action) kept.push_back(std::move(n.children[c]));
  }
  n.children = std::move(kept);
  n.actions[player].erase(n.actions[player].begin() + static_cast<std::ptrdiff_t>(action));
}

std::vector<Rational> SmallerPayoffs(const Rational& v) {
  std::vector<Rational> out;
  if (sgn(v) == 0) return out;
  out.emplace_back(0);
  mpz_class whole = abs(v.get_num()) / v.get_den();
  Rational trunc(sgn(v) < 0 ? mpz_class(-whole) : whole);
  if (trunc != v && trunc != 0) out.push_back(trunc);
  if (whole > 1) out.emplace_back(sgn(v) < 0 ? mpz_class(-(whole - 1)) : mpz_class(whole - 1));
  return out;
}

}  // namespace

void ParallelFor(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, count); ++t) {
    pool.emplace_back([&] {
      for (int k = next++; k < count; k = next++) fn(k);
    });
  }
  for (auto& th : pool) th.join();
}

std::uint64_t GameSeed(std::uint64_t campaign_seed, int k) {
  return MixSeed(campaign_seed * 0x100000001b3ULL + static_cast<std::uint64_t>(k));
}

FuzzOutcome RunOne(const Game& game, const FuzzOptions& options) {
  FuzzOutcome o;
  try {
    auto g = std::make_shared<const Game>(game);
    const StrategySpace full = StrategySpace::Full(g);
    const TheoremReport r = VerifyTheorems(full, options.procedure);
    o.fixpoint = r.ia.fixpoint;
    if (auto f = r.cnps.FirstFailure()) o.cnps_first_failure = *f;
    if (auto f = r.cps.FirstFailure()) o.cps_first_failure = *f;
    for (const auto* t : {&r.cnps, &r.cps}) {
      for (const auto& a : t->audits) {
        o.refuted += a.status == AuditStatus::kRefuted;
        o.unresolved += a.status == AuditStatus::kUnresolved;
      }
      o.degree_overflow = o.degree_overflow || t->degree_overflow;
    }
    o.certificates_ok = r.certificates_ok;
    o.violations = r.violations;
    if (options.reduced) {
      const StrategySpace reduced = StrategySpace::Reduced(g);
      const ReducedReport rr = VerifyReduced(full, reduced, options.procedure);
      o.reduced_ok = rr.ok();
      o.degree_overflow = o.degree_overflow || rr.reduced.cnps.degree_overflow;
    }
  } catch (const std::exception& e) {
    o.error = true;
    o.error_text = e.what();
  }
  return o;
}

Game ShrinkGame(const Game& game, const std::function<bool(const Game&)>& still_fails) {
  const std::vector<std::string> players = game.players();
  NodeSpec best = game.ToSpec();
  int budget = 400;
  auto attempt = [&](const NodeSpec& cand) {
    if (budget-- <= 0) return false;
    try {
      return still_fails(Game::Create(players, cand));
    } catch (const GameError&) {
      return false;
    }
  };
  bool changed = true;
  while (changed && budget > 0) {
    changed = false;
    // Collapse a subtree into its first leaf.
    {
      std::vector<NodeSpec*> inner, leaves;
      CollectNodes(best, true, inner, leaves);
      for (std::size_t k = 0; k < inner.size() && !changed; ++k) {
        NodeSpec cand = best;
        std::vector<NodeSpec*> ci, cl;
        CollectNodes(cand, true, ci, cl);
        const NodeSpec leaf = FirstLeaf(*ci[k]);
        *ci[k] = leaf;
        if (attempt(cand)) {
          best = std::move(cand);
          changed = true;
        }
      }
    }
    if (changed) continue;
    // Drop one action of one player somewhere.
    {
      std::vector<NodeSpec*> inner, leaves;
      CollectNodes(best, false, inner, leaves);
      inner.insert(inner.begin(), &best);
      for (std::size_t k = 0; k < inner.size() && !changed; ++k) {
        for (std::size_t i = 0; !changed && i < inner[k]->actions.size(); ++i) {
          for (std::size_t a = 0; !changed && a < inner[k]->actions[i].size(); ++a) {
            if (inner[k]->actions[i].size() < 2) continue;
            NodeSpec cand = best;
            std::vector<NodeSpec*> ci, cl;
            CollectNodes(cand, false, ci, cl);
            ci.insert(ci.begin(), &cand);
            RemoveAction(*ci[k], i, a);
            if (attempt(cand)) {
              best = std::move(cand);
              changed = true;
            }
          }
        }
      }
    }
    if (changed) continue;
    // Pull payoffs toward zero.
    {
      std::vector<NodeSpec*> inner, leaves;
      CollectNodes(best, true, inner, leaves);
      for (std::size_t k = 0; k < leaves.size() && !changed; ++k) {
        // Test !changed first: the pointers dangle once best is replaced.
        for (std::size_t i = 0; !changed && i < leaves[k]->payoff.size(); ++i) {
          for (const Rational& v : SmallerPayoffs(leaves[k]->payoff[i])) {
            NodeSpec cand = best;
            std::vector<NodeSpec*> ci, cl;
            CollectNodes(cand, true, ci, cl);
            cl[k]->payoff[i] = v;
            if (attempt(cand)) {
              best = std::move(cand);
              changed = true;
              break;
            }
          }
        }
      }
    }
  }
  return Game::Create(players, best);
}

FuzzResult RunFuzz(const FuzzOptions& options) {
  std::vector<FuzzOutcome> outcomes(static_cast<std::size_t>(std::max(0, options.count)));
  ParallelFor(options.count, options.jobs, [&](int k) {
    const std::uint64_t seed = GameSeed(options.seed, k);
    FuzzOutcome o;
    try {
      const Game g = GenerateGame(seed, options.bounds);
      o = RunOne(g, options);
      const bool failed = o.error || !o.violations.empty() || !o.reduced_ok || !o.certificates_ok || o.degree_overflow;
      if (failed) o.game_text = SerializeGame(g);
    } catch (const std::exception& e) {
      o.error = true;
      o.error_text = e.what();
    }
    o.index = k;
    o.seed = seed;
    outcomes[static_cast<std::size_t>(k)] = std::move(o);
  });

  FuzzResult r;
  r.games = options.count;
  for (const auto& o : outcomes) {
    if (o.fixpoint >= static_cast<int>(r.fixpoint_histogram.size())) {
      r.fixpoint_histogram.resize(static_cast<std::size_t>(o.fixpoint + 1), 0);
    }
    if (!o.error) ++r.fixpoint_histogram[static_cast<std::size_t>(o.fixpoint)];
    r.cnps_violations += o.cnps_first_failure >= 0;
    r.cps_violations += o.cps_first_failure >= 0;
    r.refuted += o.refuted;
    r.unresolved += o.unresolved;
    if (!o.violations.empty() &&
        std::all_of(o.violations.begin(), o.violations.end(),
                    [](const TheoremViolation& v) { return v.status == AuditStatus::kUnresolved; })) {
      ++r.unrefuted_violations;
    }
    r.reduced_failures += !o.reduced_ok;
    r.certificate_failures += !o.certificates_ok;
    r.degree_overflows += o.degree_overflow;
    r.errors += o.error;
    if (o.game_text.empty() || static_cast<int>(r.failures.size()) >= options.max_failures) continue;
    FuzzFailure f;
    f.outcome = o;
    if (options.shrink && !o.error) {
      const bool want_cnps = o.cnps_first_failure >= 0, want_cps = o.cps_first_failure >= 0;
      const bool want_reduced = !o.reduced_ok;
      const Game small = ShrinkGame(ParseGame(o.game_text), [&](const Game& g) {
        const FuzzOutcome x = RunOne(g, options);
        return !x.error && ((want_cnps && x.cnps_first_failure >= 0) || (want_cps && x.cps_first_failure >= 0) ||
                            (want_reduced && !x.reduced_ok));
      });
      f.shrunk_text = SerializeGame(small);
      const FuzzOutcome again = RunOne(small, options);
      for (const auto& v : again.violations) {
        f.shrunk_violations.push_back(v.theorem + " step " + std::to_string(v.step) + " " +
                                      small.player_name(v.player) + " " + v.strategy_name + ": " + v.detail);
      }
    } else {
      f.shrunk_text = o.game_text;
    }
    r.failures.push_back(std::move(f));
  }
  return r;
}

Json FuzzResultToJson(const FuzzResult& r, const FuzzOptions& options) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "fuzz";
  j["seed"] = options.seed;
  j["count"] = options.count;
  j["bounds"] = {{"max_players", options.bounds.max_players},
                 {"max_histories", options.bounds.max_histories},
                 {"max_actions", options.bounds.max_actions},
                 {"max_strategies", options.bounds.max_strategies},
                 {"max_stages", options.bounds.max_stages},
                 {"payoff_range", options.bounds.payoff_range}};
  j["games"] = r.games;
  j["cnps_violations"] = r.cnps_violations;
  j["cps_violations"] = r.cps_violations;
  j["refuted_candidates"] = r.refuted;
  j["unresolved_candidates"] = r.unresolved;
  j["unrefuted_violations"] = r.unrefuted_violations;
  j["reduced_failures"] = r.reduced_failures;
  j["certificate_failures"] = r.certificate_failures;
  j["degree_overflows"] = r.degree_overflows;
  j["errors"] = r.errors;
  j["fixpoint_histogram"] = r.fixpoint_histogram;
  Json fs = Json::array();
  for (const auto& f : r.failures) {
    Json x;
    x["index"] = f.outcome.index;
    x["game_seed"] = f.outcome.seed;
    if (f.outcome.error) x["error"] = f.outcome.error_text;
    Json vs = Json::array();
    for (const auto& v : f.outcome.violations) {
      vs.push_back({{"procedure", v.theorem}, {"step", v.step}, {"strategy", v.strategy_name},
                    {"status", AuditStatusName(v.status)}});
    }
    x["violations"] = vs;
    x["reduced_ok"] = f.outcome.reduced_ok;
    x["game"] = f.outcome.game_text;
    x["shrunk"] = f.shrunk_text;
    x["shrunk_violations"] = f.shrunk_violations;
    fs.push_back(x);
  }
  j["failures"] = fs;
  j["ok"] = r.ok();
  return j;
}

}  // namespace prudens
