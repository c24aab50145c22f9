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

#include "prudens/beliefs.h"

#include <map>

namespace prudens {
namespace {

CoEvent Complement(const CoEvent& e) {
  CoEvent out(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) out[k] = e[k] ? 0 : 1;
  return out;
}

bool Meets(const CoEvent& a, const CoEvent& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] && b[k]) return true;
  }
  return false;
}

void CheckSize(const ConditioningFamily& family, const CoEvent& e) {
  if (static_cast<int>(e.size()) != family.num_co_profiles()) {
    throw std::invalid_argument("event size does not match the co-profile count");
  }
}

// Cautious belief on one conditional: for each s in E∩C, st(mu(not E|C)/mu(s|C)) = 0.
// A standard row can put zero mass on some s in E∩C; the ratio then has no
// standard part and the belief fails.
CautionResult CautiousAt(const ConditionalMeasure& m, const CoEvent& cond, const CoEvent& e) {
  CautionResult r;
  const Hyperreal outside = m.MassOf(Complement(e));
  bool any = false;
  for (std::size_t s = 0; s < e.size(); ++s) {
    if (!e[s] || !cond[s]) continue;
    any = true;
    if (m.mass[s].Sign() <= 0) return r;
    if (!RatioStandardPartIsZero(outside, m.mass[s])) return r;
  }
  if (!any) {
    r.vacuous = true;
    return r;
  }
  r.believed = true;
  return r;
}

}  // namespace

ConditioningFamily::ConditioningFamily(const StrategySpace& space, PlayerId i)
    : owner_(i), num_co_(space.NumCoProfiles(i)) {
  std::map<CoEvent, int> index;
  for (int k = 0; k < space.num_nonterminals(); ++k) {
    const CoEvent& mask = space.CoAllowingMask(i, k);
    auto [it, fresh] = index.emplace(mask, static_cast<int>(events_.size()));
    if (fresh) {
      events_.push_back(mask);
      members_.push_back(space.CoAllowing(i, k));
      histories_.emplace_back();
    }
    histories_[static_cast<std::size_t>(it->second)].push_back(
        space.game().nonterminals()[static_cast<std::size_t>(k)]);
    event_of_.push_back(it->second);
  }
}

bool ConditioningFamily::Contains(int outer, int inner) const {
  const auto& o = Event(outer);
  const auto& in = Event(inner);
  for (std::size_t k = 0; k < o.size(); ++k) {
    if (in[k] && !o[k]) return false;
  }
  return true;
}

PriorCNPS PriorCNPS::Create(PlayerId owner, std::vector<Hyperreal> prior) {
  if (prior.empty()) throw InvalidBelief("empty prior");
  Hyperreal total;
  for (const auto& p : prior) {
    if (p.Sign() <= 0) throw InvalidBelief("prior must give every co-player profile positive mass");
    total += p;
  }
  if (total != Hyperreal(1)) throw InvalidBelief("prior sums to " + total.ToString() + ", not 1");
  PriorCNPS b;
  b.owner_ = owner;
  b.prior_ = std::move(prior);
  return b;
}

PriorCNPS PriorCNPS::Uniform(PlayerId owner, int num_co, int degree_bound) {
  return Create(owner, std::vector<Hyperreal>(static_cast<std::size_t>(num_co),
                                              Hyperreal(Rational(1, num_co), degree_bound)));
}

ExplicitCPS ExplicitCPS::Create(PlayerId owner, const ConditioningFamily& family,
                                std::vector<std::vector<Rational>> table) {
  if (static_cast<int>(table.size()) != family.num_events()) {
    throw IncompleteTable("expected " + std::to_string(family.num_events()) + " rows, got " +
                          std::to_string(table.size()));
  }
  for (int e = 0; e < family.num_events(); ++e) {
    const auto& row = table[static_cast<std::size_t>(e)];
    if (static_cast<int>(row.size()) != family.num_co_profiles()) {
      throw IncompleteTable("row " + std::to_string(e) + " has the wrong length");
    }
    Rational total = 0;
    for (std::size_t s = 0; s < row.size(); ++s) {
      if (sgn(row[s]) < 0) throw InvalidBelief("negative probability in row " + std::to_string(e));
      if (sgn(row[s]) > 0 && !family.Event(e)[s]) {
        throw InvalidBelief("row " + std::to_string(e) + " puts mass outside its event");
      }
      total += row[s];
    }
    if (total != 1) throw InvalidBelief("row " + std::to_string(e) + " does not sum to 1");
  }
  ExplicitCPS b;
  b.owner_ = owner;
  b.table_ = std::move(table);
  return b;
}

PlayerId OwnerOf(const Belief& b) {
  return std::visit([](const auto& x) { return x.owner(); }, b);
}

Hyperreal ConditionalMeasure::MassOf(const CoEvent& e) const {
  Hyperreal total;
  for (std::size_t s = 0; s < mass.size(); ++s) {
    if (e[s]) total += mass[s];
  }
  return total;
}

Hyperreal ConditionalMeasure::Total() const {
  Hyperreal total;
  for (const auto& m : mass) total += m;
  return total;
}

ConditionalMeasure Conditional(const Belief& b, const ConditioningFamily& family, int event) {
  ConditionalMeasure m;
  const CoEvent& c = family.Event(event);
  m.mass.resize(c.size());
  if (const auto* p = std::get_if<PriorCNPS>(&b)) {
    if (p->prior().size() != c.size()) throw InvalidBelief("prior size does not match the game");
    for (std::size_t s = 0; s < c.size(); ++s) {
      if (c[s]) m.mass[s] = p->prior()[s];
    }
  } else {
    const auto& row = std::get<ExplicitCPS>(b).Row(event);
    for (std::size_t s = 0; s < c.size(); ++s) m.mass[s] = Hyperreal(row[s]);
  }
  return m;
}

ConditionalMeasure ConditionalAt(const Belief& b, const ConditioningFamily& family, int k) {
  return Conditional(b, family, family.EventOf(k));
}

// Finite additivity: mu(E|C) = sum over s in E of mu({s}|C), and the same for
// D, so the identity for every E within D follows from the singleton cases.
ChainRuleReport ValidateChainRule(const ExplicitCPS& cps, const ConditioningFamily& family) {
  if (static_cast<int>(cps.table().size()) != family.num_events()) {
    throw IncompleteTable("table does not cover every conditioning event");
  }
  ChainRuleReport report;
  for (int c = 0; c < family.num_events(); ++c) {
    for (int d = 0; d < family.num_events(); ++d) {
      if (!family.Contains(c, d)) continue;
      Rational d_given_c = 0;
      for (int s : family.Members(d)) d_given_c += cps.Row(c)[static_cast<std::size_t>(s)];
      for (int s : family.Members(d)) {
        const Rational lhs = cps.Row(c)[static_cast<std::size_t>(s)];
        const Rational rhs = cps.Row(d)[static_cast<std::size_t>(s)] * d_given_c;
        if (lhs != rhs) {
          report.ok = false;
          report.violations.push_back({s, d, c, lhs, rhs});
        }
      }
    }
  }
  return report;
}

CautionResult CautiouslyBelieves(const Belief& b, const ConditioningFamily& family, int k,
                                 const CoEvent& e) {
  CheckSize(family, e);
  const int ev = family.EventOf(k);
  return CautiousAt(Conditional(b, family, ev), family.Event(ev), e);
}

bool CStronglyBelieves(const Belief& b, const ConditioningFamily& family, const CoEvent& e) {
  CheckSize(family, e);
  for (int ev = 0; ev < family.num_events(); ++ev) {
    if (!Meets(e, family.Event(ev))) continue;
    if (!CautiousAt(Conditional(b, family, ev), family.Event(ev), e).believed) return false;
  }
  return true;
}

bool CStronglyBelievesIntersection(const Belief& b, const ConditioningFamily& family,
                                   const CoEvent& e) {
  CheckSize(family, e);
  for (int k = 0; k < family.num_histories(); ++k) {
    const CoEvent& c = family.Event(family.EventOf(k));
    const ConditionalMeasure m = ConditionalAt(b, family, k);
    Hyperreal off;  // mu of (S minus E) within S(h)
    bool meets = false;
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (c[s] && !e[s]) off += m.mass[s];
      meets = meets || (c[s] && e[s]);
    }
    if (!meets) continue;
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (!c[s] || !e[s]) continue;
      if (m.mass[s].Sign() <= 0 || !RatioStandardPartIsZero(off, m.mass[s])) return false;
    }
  }
  return true;
}

bool StronglyBelieves(const Belief& b, const ConditioningFamily& family, const CoEvent& e) {
  CheckSize(family, e);
  const CoEvent not_e = Complement(e);
  for (int ev = 0; ev < family.num_events(); ++ev) {
    if (!Meets(e, family.Event(ev))) continue;
    const ConditionalMeasure m = Conditional(b, family, ev);
    // mu(E|C) = 1 exactly, i.e. no mass on C minus E.
    if (!m.MassOf(not_e).IsZero()) return false;
  }
  return true;
}

bool WeaklyBelieves(const Belief& b, const ConditioningFamily& family, int k, const CoEvent& e) {
  CheckSize(family, e);
  const ConditionalMeasure m = ConditionalAt(b, family, k);
  // st(m(E)/m(C)) = 1 iff st(m(C minus E)/m(C)) = 0.
  return RatioStandardPartIsZero(m.MassOf(Complement(e)), m.Total());
}

}  // namespace prudens
