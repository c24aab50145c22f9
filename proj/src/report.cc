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

#include "prudens/report.h"

#include <algorithm>
#include <sstream>

namespace prudens {
namespace {

Json Names(const StrategySpace& space, PlayerId i, const std::vector<int>& idx) {
  Json a = Json::array();
  for (int s : idx) a.push_back(space.name(i, s));
  return a;
}

Json CoProfile(const StrategySpace& space, PlayerId i, int co) {
  Json a = Json::array();
  for (const auto& n : space.CoProfileNames(i, co)) a.push_back(n);
  return a;
}

Json Histories(const Game& g, const std::vector<HistoryId>& hs) {
  Json a = Json::array();
  for (HistoryId h : hs) a.push_back(g.HistoryName(h));
  return a;
}

Json CnpsChecks(const CnpsCheck& c) {
  Json j;
  j["valid_prior"] = c.valid_prior;
  Json cs = Json::array();
  for (char v : c.c_strong) cs.push_back(v != 0);
  j["c_strong"] = cs;
  j["best_reply"] = c.best_reply;
  j["ok"] = c.ok();
  return j;
}

Json CpsChecks(const CpsCheck& c) {
  Json j;
  j["valid_table"] = c.valid_table;
  j["chain_rule"] = c.chain_rule;
  j["support"] = c.support;
  j["best_reply"] = c.best_reply;
  j["ok"] = c.ok();
  return j;
}

std::string SetText(const StrategySpace& space, PlayerId i, const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? ", " : "") + space.name(i, idx[k]);
  return s + "}";
}

}  // namespace

Json GameToJson(const StrategySpace& space) {
  const Game& g = space.game();
  Json j;
  Json players = Json::array();
  for (const auto& p : g.players()) players.push_back(p);
  j["players"] = players;
  j["histories"] = g.num_histories();
  j["nonterminal_histories"] = static_cast<int>(g.nonterminals().size());
  j["static"] = g.IsStatic();
  j["space"] = space.kind() == StrategySpace::Kind::kFull ? "full" : "reduced";
  Json strategies;
  for (PlayerId i = 0; i < g.num_players(); ++i) {
    Json names = Json::array();
    for (int s = 0; s < space.NumStrategies(i); ++s) names.push_back(space.name(i, s));
    strategies[g.player_name(i)] = names;
  }
  j["strategies"] = strategies;
  return j;
}

Json RestrictionToJson(const StrategySpace& space, const ProductRestriction& q) {
  Json j;
  for (PlayerId i = 0; i < space.num_players(); ++i) {
    j[space.game().player_name(i)] = Names(space, i, q.members[static_cast<std::size_t>(i)]);
  }
  return j;
}

Json MixedToJson(const StrategySpace& space, const MixedStrategy& sigma) {
  Json a = Json::array();
  for (const auto& [r, w] : sigma.weights) {
    a.push_back({{"strategy", space.name(sigma.owner, r)}, {"weight", ToString(w)}});
  }
  return a;
}

Json MeasureToJson(const StrategySpace& space, PlayerId i, const Measure& nu) {
  Json a = Json::array();
  for (std::size_t c = 0; c < nu.size(); ++c) {
    if (sgn(nu[c]) == 0) continue;
    a.push_back({{"profile", CoProfile(space, i, static_cast<int>(c))}, {"p", ToString(nu[c])}});
  }
  return a;
}

Json BeliefToJson(const StrategySpace& space, const ConditioningFamily& family, const Belief& b) {
  const PlayerId i = family.owner();
  Json j;
  if (const auto* p = std::get_if<PriorCNPS>(&b)) {
    j["kind"] = "cnps-prior";
    Json a = Json::array();
    for (std::size_t c = 0; c < p->prior().size(); ++c) {
      a.push_back({{"profile", CoProfile(space, i, static_cast<int>(c))}, {"mass", p->prior()[c].ToString()}});
    }
    j["prior"] = a;
  } else {
    const auto& cps = std::get<ExplicitCPS>(b);
    j["kind"] = "cps";
    Json rows = Json::array();
    for (int e = 0; e < family.num_events(); ++e) {
      rows.push_back({{"histories", Histories(space.game(), family.Histories(e))},
                      {"distribution", MeasureToJson(space, i, cps.Row(e))}});
    }
    j["table"] = rows;
  }
  return j;
}

Json TraceToJson(const StrategySpace& space, const ProcedureTrace& trace, bool witnesses) {
  const Game& g = space.game();
  Json j;
  j["procedure"] = ProcedureName(trace.procedure);
  j["space"] = trace.space == StrategySpace::Kind::kFull ? "full" : "reduced";
  j["fixpoint"] = trace.fixpoint;
  Json steps = Json::array();
  for (const auto& q : trace.steps) steps.push_back(RestrictionToJson(space, q));
  j["steps"] = steps;
  Json elim = Json::array();
  for (std::size_t k = 0; k < trace.eliminated.size(); ++k) {
    const auto& e = trace.eliminated[k];
    elim.push_back({{"step", e.step},
                    {"player", g.player_name(e.player)},
                    {"strategy", space.name(e.player, e.strategy)},
                    {"dominated_by", MixedToJson(space, e.certificate)},
                    {"verified", k < trace.elimination_verified.size() && trace.elimination_verified[k] != 0}});
  }
  j["eliminations"] = elim;
  if (trace.procedure == Procedure::kIA) return j;

  j["degree_bound"] = trace.degree_bound;
  j["degree_overflow"] = trace.degree_overflow;
  std::vector<ConditioningFamily> fams;
  for (PlayerId i = 0; i < space.num_players(); ++i) fams.emplace_back(space, i);
  Json audits = Json::array();
  int counts[3] = {0, 0, 0};
  for (const auto& a : trace.audits) {
    ++counts[static_cast<int>(a.status)];
    Json x;
    x["step"] = a.step;
    x["player"] = g.player_name(a.player);
    x["strategy"] = space.name(a.player, a.strategy);
    x["status"] = AuditStatusName(a.status);
    if (a.refutation >= 0) {
      const auto& r = trace.refutations[static_cast<std::size_t>(a.refutation)];
      x["refutation"] = {{"history", g.HistoryName(g.nonterminals()[static_cast<std::size_t>(r.nonterminal)])},
                         {"replacement", space.name(r.player, r.replacement)},
                         {"against_step", r.against},
                         {"dominated_by", MixedToJson(space, r.certificate)}};
    }
    if (a.witness >= 0 && trace.procedure == Procedure::kPrCnps) {
      const auto& w = trace.cnps[static_cast<std::size_t>(a.witness)];
      x["checks"] = CnpsChecks(w.check);
      if (witnesses && !w.belief.prior().empty()) {
        x["witness"] = BeliefToJson(space, fams[static_cast<std::size_t>(a.player)], Belief(w.belief));
      }
    } else if (a.witness >= 0) {
      const auto& w = trace.cps[static_cast<std::size_t>(a.witness)];
      x["checks"] = CpsChecks(w.check);
      if (witnesses && !w.belief.table().empty()) {
        Json wj = BeliefToJson(space, fams[static_cast<std::size_t>(a.player)], Belief(w.belief));
        Json fb = Json::array();
        for (int e : w.fallback_events) fb.push_back(Histories(g, fams[static_cast<std::size_t>(a.player)].Histories(e)));
        wj["fallback"] = fb;
        x["witness"] = wj;
      }
    }
    audits.push_back(x);
  }
  j["audits"] = audits;
  j["summary"] = {{"verified", counts[0]}, {"refuted", counts[1]}, {"unresolved", counts[2]}};
  if (auto f = trace.FirstFailure()) {
    j["first_failure_step"] = *f;
  } else {
    j["first_failure_step"] = nullptr;
  }
  return j;
}

Json ViolationToJson(const TheoremViolation& v, const StrategySpace& space) {
  return {{"procedure", v.theorem},
          {"step", v.step},
          {"player", space.game().player_name(v.player)},
          {"strategy", v.strategy_name},
          {"status", AuditStatusName(v.status)},
          {"detail", v.detail}};
}

Json TheoremReportToJson(const StrategySpace& space, const TheoremReport& report, bool witnesses) {
  Json j;
  j["ia"] = TraceToJson(space, report.ia, witnesses);
  j["pr_cnps"] = TraceToJson(space, report.cnps, witnesses);
  j["pr_cps"] = TraceToJson(space, report.cps, witnesses);
  Json sizes = Json::array();
  for (std::size_t n = 0; n < report.ia.steps.size(); ++n) {
    Json row;
    row["step"] = static_cast<int>(n);
    Json ia = Json::array(), cn = Json::array(), cp = Json::array();
    for (PlayerId i = 0; i < space.num_players(); ++i) {
      ia.push_back(report.ia.steps[n].Size(i));
      cn.push_back(report.cnps.Established(static_cast<int>(n)).Size(i));
      cp.push_back(report.cps.Established(static_cast<int>(n)).Size(i));
    }
    row["ia"] = ia;
    row["pr_cnps"] = cn;
    row["pr_cps"] = cp;
    sizes.push_back(row);
  }
  j["step_sizes"] = sizes;
  Json vs = Json::array();
  for (const auto& v : report.violations) vs.push_back(ViolationToJson(v, space));
  j["violations"] = vs;
  j["certificates_ok"] = report.certificates_ok;
  j["ok"] = report.ok();
  return j;
}

std::string TraceTable(const StrategySpace& space, const ProcedureTrace& trace) {
  const Game& g = space.game();
  std::ostringstream out;
  out << ProcedureName(trace.procedure) << "  (fixpoint N = " << trace.fixpoint << ")\n";
  std::size_t w = 6;
  for (const auto& p : g.players()) w = std::max(w, p.size() + 2);
  for (std::size_t n = 0; n + 1 < trace.steps.size() || n == 0; ++n) {
    const ProductRestriction shown = trace.procedure == Procedure::kIA ? trace.steps[n] : trace.Established(static_cast<int>(n));
    out << "  step " << n << "\n";
    for (PlayerId i = 0; i < g.num_players(); ++i) {
      out << "    " << g.player_name(i) << std::string(w - g.player_name(i).size(), ' ')
          << SetText(space, i, shown.members[static_cast<std::size_t>(i)]) << "\n";
    }
    if (n + 1 >= trace.steps.size()) break;
  }
  for (std::size_t k = 0; k < trace.eliminated.size(); ++k) {
    const auto& e = trace.eliminated[k];
    out << "  removed at step " << e.step << ": " << g.player_name(e.player) << " " << space.name(e.player, e.strategy)
        << " dominated by";
    for (const auto& [r, wt] : e.certificate.weights) out << " " << ToString(wt) << "*" << space.name(e.player, r);
    out << "\n";
  }
  for (const auto& a : trace.audits) {
    if (a.status == AuditStatus::kVerified) continue;
    out << "  step " << a.step << ": " << g.player_name(a.player) << " " << space.name(a.player, a.strategy) << " "
        << AuditStatusName(a.status) << "\n";
  }
  return out.str();
}

std::string TheoremTable(const StrategySpace& space, const TheoremReport& report) {
  std::ostringstream out;
  out << TraceTable(space, report.ia) << TraceTable(space, report.cnps) << TraceTable(space, report.cps);
  if (report.ok()) {
    out << "all steps agree\n";
  } else {
    for (const auto& v : report.violations) {
      out << "VIOLATION " << v.theorem << " step " << v.step << " " << space.game().player_name(v.player) << " "
          << v.strategy_name << ": " << v.detail << "\n";
    }
    if (!report.certificates_ok) out << "an elimination certificate failed to verify\n";
  }
  return out.str();
}

}  // namespace prudens
