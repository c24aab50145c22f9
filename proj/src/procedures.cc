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

#include "prudens/procedures.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "prudens/best_reply.h"
#include "prudens/hyperreal.h"

namespace prudens {
namespace {

bool Meets(const std::vector<char>& a, const std::vector<char>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] && b[k]) return true;
  }
  return false;
}

bool IsBestReply(const StrategySpace& space, const ConditioningFamily& family, const Belief& b, int s) {
  return space.kind() == StrategySpace::Kind::kFull ? IsSequentialBestReply(space, family, b, s)
                                                    : IsWeakSequentialBestReply(space, family, b, s);
}

CnpsCheck CheckCnps(const StrategySpace& space, const ConditioningFamily& family,
                    const std::vector<ProductRestriction>& steps, const CnpsWitness& w) {
  CnpsCheck c;
  try {
    PriorCNPS::Create(w.belief.owner(), w.belief.prior());
    c.valid_prior = static_cast<int>(w.belief.prior().size()) == space.NumCoProfiles(w.player) &&
                    w.belief.owner() == w.player;
  } catch (const InvalidBelief&) {
    c.valid_prior = false;
  }
  if (!c.valid_prior) return c;
  const Belief b = w.belief;
  for (int m = 0; m < w.step; ++m) {
    c.c_strong.push_back(CStronglyBelieves(b, family, space.CoMask(w.player, steps[static_cast<std::size_t>(m)])) ? 1 : 0);
  }
  c.best_reply = IsBestReply(space, family, b, w.strategy);
  return c;
}

CpsCheck CheckCps(const StrategySpace& space, const ConditioningFamily& family,
                  const std::vector<ProductRestriction>& steps, const CpsWitness& w) {
  CpsCheck c;
  try {
    ExplicitCPS::Create(w.belief.owner(), family, w.belief.table());
    c.valid_table = w.belief.owner() == w.player;
  } catch (const std::invalid_argument&) {
    c.valid_table = false;
  }
  if (!c.valid_table) return c;
  c.chain_rule = ValidateChainRule(w.belief, family).ok;
  const auto survivors = space.CoMask(w.player, steps[static_cast<std::size_t>(w.step - 1)]);
  c.support = true;
  for (int k = 0; k < family.num_histories() && c.support; ++k) {
    const int e = family.EventOf(k);
    const CoEvent& cond = family.Event(e);
    if (!Meets(survivors, cond)) continue;
    const auto& row = w.belief.Row(e);
    for (std::size_t s = 0; s < row.size(); ++s) {
      if ((sgn(row[s]) > 0) != (survivors[s] && cond[s])) {
        c.support = false;
        break;
      }
    }
  }
  c.best_reply = IsBestReply(space, family, Belief(w.belief), w.strategy);
  return c;
}

class Runner {
 public:
  Runner(const StrategySpace& space, const ProcedureOptions& options, Procedure procedure)
      : space_(space), options_(options) {
    const IATrace ia = IteratedAdmissibility(space);
    trace_.procedure = procedure;
    trace_.space = space.kind();
    trace_.steps = ia.steps;
    trace_.fixpoint = ia.fixpoint;
    trace_.eliminated = ia.eliminated;
    for (const auto& e : ia.eliminated) {
      trace_.elimination_verified.push_back(
          VerifyDominance(space, trace_.steps[static_cast<std::size_t>(e.step - 1)], e.player, e.strategy,
                          e.certificate)
              ? 1
              : 0);
    }
    trace_.degree_bound = options.degree_bound > 0 ? options.degree_bound : ia.fixpoint + 1;
    for (PlayerId i = 0; i < space.num_players(); ++i) families_.emplace_back(space, i);
  }

  ProcedureTrace Run() {
    if (trace_.procedure == Procedure::kIA) return std::move(trace_);
    std::map<std::pair<PlayerId, int>, int> last_cps;  // (i, s) -> index of the previous step's witness
    for (int n = 1; n < static_cast<int>(trace_.steps.size()); ++n) {
      for (PlayerId i = 0; i < space_.num_players(); ++i) {
        for (int s : trace_.steps[static_cast<std::size_t>(n)].members[static_cast<std::size_t>(i)]) {
          Audit a{n, i, s, AuditStatus::kUnresolved, -1, -1};
          if (const int r = Refute(n, i, s); r >= 0) {
            a.status = AuditStatus::kRefuted;
            a.refutation = r;
          } else if (trace_.procedure == Procedure::kPrCnps) {
            a.witness = static_cast<int>(trace_.cnps.size());
            trace_.cnps.push_back(BuildCnps(n, i, s));
            if (trace_.cnps.back().check.ok()) a.status = AuditStatus::kVerified;
          } else {
            auto prev = last_cps.find({i, s});
            const CpsWitness* before = prev == last_cps.end() ? nullptr : &trace_.cps[static_cast<std::size_t>(prev->second)];
            CpsWitness w = BuildCps(n, i, s, before);
            a.witness = static_cast<int>(trace_.cps.size());
            last_cps[{i, s}] = a.witness;
            trace_.cps.push_back(std::move(w));
            if (trace_.cps.back().check.ok()) a.status = AuditStatus::kVerified;
          }
          trace_.audits.push_back(a);
        }
      }
    }
    return std::move(trace_);
  }

 private:
  bool full() const { return space_.kind() == StrategySpace::Kind::kFull; }

  std::optional<Measure> Justify(PlayerId i, int s, int k) {
    const auto key = std::make_tuple(i, s, k);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const ProductRestriction& q = trace_.steps[static_cast<std::size_t>(k)];
    std::optional<Measure> nu;
    if (options_.augment && full()) {
      JustifyOptions opt;
      for (int h = 0; h < space_.num_nonterminals(); ++h) {
        if (space_.Allows(i, s, h)) continue;
        opt.extra.push_back({space_.Replacement(i, s, h), space_.Allowing(i, h), space_.CoAllowingMask(i, h)});
      }
      if (!opt.extra.empty()) nu = JustifyingFullSupportMeasure(space_, q, i, s, opt);
    }
    if (!nu) nu = JustifyingFullSupportMeasure(space_, q, i, s);
    cache_.emplace(key, nu);
    return nu;
  }

  int Refute(int n, PlayerId i, int s) {
    if (!full()) return -1;
    std::vector<int> against;
    if (trace_.procedure == Procedure::kPrCps) {
      against.push_back(n - 1);
    } else {
      for (int m = 0; m < n; ++m) against.push_back(m);
    }
    for (int m : against) {
      const auto key = std::make_tuple(i, s, m);
      auto it = refuted_.find(key);
      if (it == refuted_.end()) it = refuted_.emplace(key, FindRefutation(m, i, s)).first;
      if (it->second) {
        Refutation r = *it->second;
        r.step = n;
        trace_.refutations.push_back(std::move(r));
        return static_cast<int>(trace_.refutations.size()) - 1;
      }
    }
    return -1;
  }

  std::optional<Refutation> FindRefutation(int m, PlayerId i, int s) {
    const auto survivors = space_.CoMask(i, trace_.steps[static_cast<std::size_t>(m)]);
    for (int h = 0; h < space_.num_nonterminals(); ++h) {
      if (space_.Allows(i, s, h)) continue;
      std::vector<int> co;
      for (int c : space_.CoAllowing(i, h)) {
        if (survivors[static_cast<std::size_t>(c)]) co.push_back(c);
      }
      if (co.empty()) continue;
      const int r = space_.Replacement(i, s, h);
      const auto dkey = std::make_tuple(i, r, h, m);
      auto it = dominated_.find(dkey);
      if (it == dominated_.end()) {
        it = dominated_.emplace(dkey, WeaklyDominatedWithin(space_, i, r, space_.Allowing(i, h), co)).first;
      }
      if (it->second) return Refutation{0, m, i, s, h, r, *it->second};
    }
    return std::nullopt;
  }

  // nu_l justifies s against step n-1-l, and the prior is
  // nu_0 + sum_{l>=1} e^l (nu_l - nu_0), which totals exactly 1 and has the
  // same leading terms as nu_0 + sum e^l nu_l.
  CnpsWitness BuildCnps(int n, PlayerId i, int s) {
    CnpsWitness w;
    w.step = n;
    w.player = i;
    w.strategy = s;
    for (int l = 0; l < n; ++l) {
      auto nu = Justify(i, s, n - 1 - l);
      if (!nu) return w;
      w.levels.push_back(std::move(*nu));
    }
    const int d = trace_.degree_bound;
    const auto nc = static_cast<std::size_t>(space_.NumCoProfiles(i));
    std::vector<Hyperreal> prior;
    try {
      for (std::size_t c = 0; c < nc; ++c) {
        std::vector<Rational> coeff;
        for (int l = 0; l < n; ++l) {
          coeff.push_back(l == 0 ? w.levels[0][c] : Rational(w.levels[static_cast<std::size_t>(l)][c] - w.levels[0][c]));
        }
        prior.push_back(Hyperreal::FromCoefficients(std::move(coeff), d));
      }
      w.belief = PriorCNPS::Create(i, std::move(prior));
      w.check = CheckCnps(space_, families_[static_cast<std::size_t>(i)], trace_.steps, w);
    } catch (const DegreeOverflow&) {
      trace_.degree_overflow = true;
      w.check = CnpsCheck{};
    } catch (const InvalidBelief&) {
      w.check = CnpsCheck{};
    }
    return w;
  }

  // Condition nu (support = step n-1 survivors) wherever the survivors meet
  // the event; elsewhere reuse the previous step's rows (uniform at the base).
  CpsWitness BuildCps(int n, PlayerId i, int s, const CpsWitness* before) {
    CpsWitness w;
    w.step = n;
    w.player = i;
    w.strategy = s;
    auto nu = Justify(i, s, n - 1);
    if (!nu) return w;
    w.nu = std::move(*nu);
    const ConditioningFamily& fam = families_[static_cast<std::size_t>(i)];
    std::vector<std::vector<Rational>> table;
    for (int e = 0; e < fam.num_events(); ++e) {
      const CoEvent& c = fam.Event(e);
      std::vector<Rational> row(c.size());
      Rational mass = 0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k]) mass += w.nu[k];
      }
      if (sgn(mass) > 0) {
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (c[k]) row[k] = w.nu[k] / mass;
        }
      } else {
        w.fallback_events.push_back(e);
        if (before && before->check.valid_table) {
          row = before->belief.Row(e);
        } else {
          const Rational u(1, static_cast<long>(fam.Members(e).size()));
          for (int k : fam.Members(e)) row[static_cast<std::size_t>(k)] = u;
        }
      }
      table.push_back(std::move(row));
    }
    try {
      w.belief = ExplicitCPS::Create(i, fam, std::move(table));
      w.check = CheckCps(space_, fam, trace_.steps, w);
    } catch (const std::invalid_argument&) {
      w.check = CpsCheck{};
    }
    return w;
  }

  const StrategySpace& space_;
  ProcedureOptions options_;
  ProcedureTrace trace_;
  std::vector<ConditioningFamily> families_;
  std::map<std::tuple<PlayerId, int, int>, std::optional<Measure>> cache_;
  std::map<std::tuple<PlayerId, int, int>, std::optional<Refutation>> refuted_;
  std::map<std::tuple<PlayerId, int, int, int>, std::optional<MixedStrategy>> dominated_;
};

std::optional<TheoremViolation> FirstViolation(const StrategySpace& space, const ProcedureTrace& t,
                                               const char* theorem) {
  const auto step = t.FirstFailure();
  if (!step) return std::nullopt;
  for (const auto& a : t.audits) {
    if (a.step != *step || a.status == AuditStatus::kVerified) continue;
    TheoremViolation v;
    v.theorem = theorem;
    v.step = a.step;
    v.player = a.player;
    v.strategy = a.strategy;
    v.strategy_name = space.name(a.player, a.strategy);
    v.status = a.status;
    if (a.status == AuditStatus::kRefuted) {
      const auto& r = t.refutations[static_cast<std::size_t>(a.refutation)];
      const Game& g = space.game();
      v.detail = "replacement " + space.name(r.player, r.replacement) + " at " +
                 g.HistoryName(g.nonterminals()[static_cast<std::size_t>(r.nonterminal)]) +
                 " is weakly dominated there" +
                 (r.against > 0 ? " against the step-" + std::to_string(r.against) + " survivors" : std::string()) +
                 ", so no admissible step-" + std::to_string(r.step) + " belief justifies " + v.strategy_name;
    } else {
      v.detail = "no witness belief verified for " + v.strategy_name;
    }
    return v;
  }
  return std::nullopt;
}

}  // namespace

const char* ProcedureName(Procedure p) {
  switch (p) {
    case Procedure::kIA: return "ia";
    case Procedure::kPrCnps: return "pr-cnps";
    case Procedure::kPrCps: return "pr-cps";
  }
  return "?";
}

const char* AuditStatusName(AuditStatus s) {
  switch (s) {
    case AuditStatus::kVerified: return "verified";
    case AuditStatus::kRefuted: return "refuted";
    case AuditStatus::kUnresolved: return "unresolved";
  }
  return "?";
}

bool CnpsCheck::ok() const {
  return valid_prior && best_reply &&
         std::all_of(c_strong.begin(), c_strong.end(), [](char c) { return c != 0; });
}

bool CpsCheck::ok() const { return valid_table && chain_rule && support && best_reply; }

ProductRestriction ProcedureTrace::Established(int n) const {
  ProductRestriction q = steps[static_cast<std::size_t>(n)];
  for (const auto& a : audits) {
    if (a.step != n || a.status == AuditStatus::kVerified) continue;
    auto& m = q.members[static_cast<std::size_t>(a.player)];
    m.erase(std::remove(m.begin(), m.end(), a.strategy), m.end());
  }
  return q;
}

std::optional<int> ProcedureTrace::FirstFailure() const {
  std::optional<int> best;
  for (const auto& a : audits) {
    if (a.status != AuditStatus::kVerified && (!best || a.step < *best)) best = a.step;
  }
  return best;
}

ProcedureTrace RunIteratedAdmissibility(const StrategySpace& space) {
  return Runner(space, {}, Procedure::kIA).Run();
}

ProcedureTrace PrudentRationalizabilityCnps(const StrategySpace& space, const ProcedureOptions& options) {
  return Runner(space, options, Procedure::kPrCnps).Run();
}

ProcedureTrace PrudentRationalizabilityCps(const StrategySpace& space, const ProcedureOptions& options) {
  return Runner(space, options, Procedure::kPrCps).Run();
}

CnpsCheck CheckCnpsWitness(const StrategySpace& space, const ProcedureTrace& trace, const CnpsWitness& w) {
  return CheckCnps(space, ConditioningFamily(space, w.player), trace.steps, w);
}

CpsCheck CheckCpsWitness(const StrategySpace& space, const ProcedureTrace& trace, const CpsWitness& w) {
  return CheckCps(space, ConditioningFamily(space, w.player), trace.steps, w);
}

bool CheckRefutation(const StrategySpace& space, const ProcedureTrace& trace, const Refutation& r) {
  if (space.kind() != StrategySpace::Kind::kFull) return false;
  if (r.step < 1 || r.step >= static_cast<int>(trace.steps.size())) return false;
  if (r.against < 0 || r.against >= r.step) return false;
  if (trace.procedure == Procedure::kPrCps && r.against != r.step - 1) return false;
  if (trace.procedure == Procedure::kIA) return false;
  if (space.Allows(r.player, r.strategy, r.nonterminal)) return false;
  if (space.Replacement(r.player, r.strategy, r.nonterminal) != r.replacement) return false;
  const auto survivors = space.CoMask(r.player, trace.steps[static_cast<std::size_t>(r.against)]);
  std::vector<int> co;
  for (int c : space.CoAllowing(r.player, r.nonterminal)) {
    if (survivors[static_cast<std::size_t>(c)]) co.push_back(c);
  }
  return VerifyDominanceWithin(space, r.player, r.replacement, space.Allowing(r.player, r.nonterminal), co,
                               r.certificate);
}

int SophisticationIndex(const StrategySpace& space, const ProcedureTrace& trace, PlayerId i, int k) {
  const auto& cond = space.CoAllowingMask(i, k);
  for (int m = trace.fixpoint; m > 0; --m) {
    if (Meets(space.CoMask(i, trace.steps[static_cast<std::size_t>(m)]), cond)) return m;
  }
  return 0;
}

bool CheckBestRationalization(const StrategySpace& space, const ProcedureTrace& trace, const CnpsWitness& w) {
  const ConditioningFamily family(space, w.player);
  const Belief b = w.belief;
  std::vector<int> memo(static_cast<std::size_t>(trace.fixpoint + 1), -1);
  for (int k = 0; k < space.num_nonterminals(); ++k) {
    const int mh = SophisticationIndex(space, trace, w.player, k);
    for (int m = 0; m <= mh && m < w.step; ++m) {
      auto& v = memo[static_cast<std::size_t>(m)];
      if (v < 0) v = CStronglyBelieves(b, family, space.CoMask(w.player, trace.steps[static_cast<std::size_t>(m)])) ? 1 : 0;
      if (!v) return false;
    }
  }
  return true;
}

TheoremReport VerifyTheorems(const StrategySpace& space, const ProcedureOptions& options) {
  TheoremReport r;
  r.ia = RunIteratedAdmissibility(space);
  r.cnps = PrudentRationalizabilityCnps(space, options);
  r.cps = PrudentRationalizabilityCps(space, options);
  for (const auto* t : {&r.ia, &r.cnps, &r.cps}) {
    for (char ok : t->elimination_verified) r.certificates_ok = r.certificates_ok && ok;
  }
  if (auto v = FirstViolation(space, r.cnps, "cnps")) r.violations.push_back(*v);
  if (auto v = FirstViolation(space, r.cps, "cps")) r.violations.push_back(*v);
  return r;
}

ReducedReport VerifyReduced(const StrategySpace& full, const StrategySpace& reduced,
                            const ProcedureOptions& options) {
  ReducedReport out;
  out.reduced = VerifyTheorems(reduced, options);
  const IATrace ia = IteratedAdmissibility(full);
  const auto& rsteps = out.reduced.ia.steps;
  const std::size_t len = std::max(ia.steps.size(), rsteps.size());
  for (std::size_t n = 0; n < len; ++n) {
    const auto& fq = ia.steps[std::min(n, ia.steps.size() - 1)];
    const auto& rq = rsteps[std::min(n, rsteps.size() - 1)];
    ProductRestriction proj;
    for (PlayerId i = 0; i < full.num_players(); ++i) {
      std::vector<int> m;
      for (int s : fq.members[static_cast<std::size_t>(i)]) m.push_back(*reduced.IndexOf(full.strategy(i, s)));
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      proj.members.push_back(std::move(m));
    }
    if (!(proj == rq)) {
      out.projections_match = false;
      out.first_projection_mismatch = static_cast<int>(n);
      break;
    }
  }
  return out;
}

}  // namespace prudens
