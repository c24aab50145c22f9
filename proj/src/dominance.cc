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

#include "prudens/dominance.h"

#include <algorithm>
#include <stdexcept>

#include "prudens/lp.h"

namespace prudens {
namespace {

std::vector<int> AllOf(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k;
  return v;
}

std::optional<MixedStrategy> PureDominator(const StrategySpace& space, PlayerId i, int s,
                                           const std::vector<int>& own, const std::vector<int>& co) {
  for (int r : own) {
    if (r == s) continue;
    bool ge = true, gt = false;
    for (int c : co) {
      const int order = cmp(space.Utility(i, r, c), space.Utility(i, s, c));
      if (order < 0) {
        ge = false;
        break;
      }
      gt = gt || order > 0;
    }
    if (ge && gt) return MixedStrategy{i, {{r, Rational(1)}}};
  }
  return std::nullopt;
}

// Sum of U_i(r, c) over the listed co-profiles: the uniform expectation up to
// a positive factor.
Rational UniformValue(const StrategySpace& space, PlayerId i, int r, const std::vector<int>& co) {
  Rational v = 0;
  for (int c : co) v += space.Utility(i, r, c);
  return v;
}

bool OptimalUnder(const StrategySpace& space, PlayerId i, int s, const std::vector<int>& scope,
                  const Measure& nu, const std::vector<char>* mask) {
  auto value = [&](int r) {
    Rational v = 0;
    for (std::size_t c = 0; c < nu.size(); ++c) {
      if (sgn(nu[c]) == 0 || (mask && !(*mask)[c])) continue;
      v += nu[c] * space.Utility(i, r, static_cast<int>(c));
    }
    return v;
  };
  const Rational mine = value(s);
  for (int r : scope) {
    if (r != s && value(r) > mine) return false;
  }
  return true;
}

bool SatisfiesAll(const StrategySpace& space, PlayerId i, int s, const JustifyOptions& options,
                  const std::vector<int>& scope, const Measure& nu) {
  if (!OptimalUnder(space, i, s, scope, nu, nullptr)) return false;
  for (const auto& x : options.extra) {
    if (!OptimalUnder(space, i, x.target, x.rivals, nu, &x.mask)) return false;
  }
  return true;
}

}  // namespace

Rational MixedStrategy::Utility(const StrategySpace& space, int co) const {
  Rational v = 0;
  for (const auto& [r, w] : weights) v += w * space.Utility(owner, r, co);
  return v;
}

std::optional<MixedStrategy> WeaklyDominatedWithin(const StrategySpace& space, PlayerId i, int s,
                                                   const std::vector<int>& own,
                                                   const std::vector<int>& co) {
  if (co.empty() || own.empty()) return std::nullopt;
  if (auto pure = PureDominator(space, i, s, own, co)) return pure;
  // maximize sum_c (U(sigma, c) - U(s, c))  s.t.  U(sigma, c) >= U(s, c), sigma in the simplex.
  const int n = static_cast<int>(own.size());
  LinearProgram lp(n);
  for (int k = 0; k < n; ++k) {
    lp.objective[static_cast<std::size_t>(k)] = UniformValue(space, i, own[static_cast<std::size_t>(k)], co);
  }
  for (int c : co) {
    auto& row = lp.AddRow(Sense::kGe, space.Utility(i, s, c));
    for (int k = 0; k < n; ++k) row.coeffs[static_cast<std::size_t>(k)] = space.Utility(i, own[static_cast<std::size_t>(k)], c);
  }
  auto& total = lp.AddRow(Sense::kEq, Rational(1));
  for (auto& v : total.coeffs) v = 1;
  const LPSolution sol = SolveLP(lp);
  if (sol.status != LPStatus::kOptimal) return std::nullopt;
  if (sol.value <= UniformValue(space, i, s, co)) return std::nullopt;
  MixedStrategy sigma{i, {}};
  for (int k = 0; k < n; ++k) {
    if (sgn(sol.x[static_cast<std::size_t>(k)]) > 0) {
      sigma.weights.emplace_back(own[static_cast<std::size_t>(k)], sol.x[static_cast<std::size_t>(k)]);
    }
  }
  std::sort(sigma.weights.begin(), sigma.weights.end());
  if (!VerifyDominanceWithin(space, i, s, own, co, sigma)) {
    throw std::logic_error("dominance LP returned a mixture that does not verify");
  }
  return sigma;
}

std::optional<MixedStrategy> WeaklyDominated(const StrategySpace& space, const ProductRestriction& q,
                                             PlayerId i, int s) {
  return WeaklyDominatedWithin(space, i, s, q.members[static_cast<std::size_t>(i)],
                               space.CoProfilesWithin(i, q));
}

bool VerifyDominanceWithin(const StrategySpace& space, PlayerId i, int s, const std::vector<int>& own,
                           const std::vector<int>& co, const MixedStrategy& sigma) {
  if (sigma.owner != i || sigma.weights.empty()) return false;
  Rational total = 0;
  for (const auto& [r, w] : sigma.weights) {
    if (sgn(w) <= 0 || std::find(own.begin(), own.end(), r) == own.end()) return false;
    total += w;
  }
  if (total != 1) return false;
  bool strict = false;
  for (int c : co) {
    const int order = cmp(sigma.Utility(space, c), space.Utility(i, s, c));
    if (order < 0) return false;
    strict = strict || order > 0;
  }
  return strict;
}

bool VerifyDominance(const StrategySpace& space, const ProductRestriction& q, PlayerId i, int s,
                     const MixedStrategy& sigma) {
  return VerifyDominanceWithin(space, i, s, q.members[static_cast<std::size_t>(i)],
                               space.CoProfilesWithin(i, q), sigma);
}

std::optional<Measure> JustifyingFullSupportMeasure(const StrategySpace& space,
                                                    const ProductRestriction& q, PlayerId i, int s,
                                                    const JustifyOptions& options) {
  const std::vector<int> co = space.CoProfilesWithin(i, q);
  if (co.empty()) return std::nullopt;
  const std::vector<int> scope = options.scope.empty() ? AllOf(space.NumStrategies(i)) : options.scope;
  const auto nc = static_cast<std::size_t>(space.NumCoProfiles(i));
  if (options.try_uniform) {
    Measure nu(nc);
    for (int c : co) nu[static_cast<std::size_t>(c)] = Rational(1, static_cast<long>(co.size()));
    if (SatisfiesAll(space, i, s, options, scope, nu)) return nu;
  }
  // Variables: nu over the listed co-profiles, then t.
  const int k = static_cast<int>(co.size());
  LinearProgram lp(k + 1);
  lp.objective[static_cast<std::size_t>(k)] = 1;
  for (int a = 0; a < k; ++a) {
    auto& row = lp.AddRow(Sense::kGe, Rational(0));
    row.coeffs[static_cast<std::size_t>(a)] = 1;
    row.coeffs[static_cast<std::size_t>(k)] = -1;
  }
  auto& total = lp.AddRow(Sense::kEq, Rational(1));
  for (int a = 0; a < k; ++a) total.coeffs[static_cast<std::size_t>(a)] = 1;
  auto add_optimality = [&](int target, int rival, const std::vector<char>* mask) {
    LinearProgram::Row row{std::vector<Rational>(static_cast<std::size_t>(k + 1)), Sense::kGe, Rational(0)};
    bool any = false;
    for (int a = 0; a < k; ++a) {
      const int c = co[static_cast<std::size_t>(a)];
      if (mask && !(*mask)[static_cast<std::size_t>(c)]) continue;
      row.coeffs[static_cast<std::size_t>(a)] = space.Utility(i, target, c) - space.Utility(i, rival, c);
      any = any || sgn(row.coeffs[static_cast<std::size_t>(a)]) != 0;
    }
    if (any) lp.rows.push_back(std::move(row));
  };
  for (int r : scope) {
    if (r != s) add_optimality(s, r, nullptr);
  }
  for (const auto& x : options.extra) {
    for (int r : x.rivals) {
      if (r != x.target) add_optimality(x.target, r, &x.mask);
    }
  }
  const LPSolution sol = SolveLP(lp);
  if (sol.status != LPStatus::kOptimal || sgn(sol.value) <= 0) return std::nullopt;
  Measure nu(nc);
  for (int a = 0; a < k; ++a) nu[static_cast<std::size_t>(co[static_cast<std::size_t>(a)])] = sol.x[static_cast<std::size_t>(a)];
  if (!VerifyJustifyingMeasure(space, q, i, s, nu, options)) {
    throw std::logic_error("justifying LP returned a measure that does not verify");
  }
  return nu;
}

bool VerifyJustifyingMeasure(const StrategySpace& space, const ProductRestriction& q, PlayerId i,
                             int s, const Measure& nu, const JustifyOptions& options) {
  if (static_cast<int>(nu.size()) != space.NumCoProfiles(i)) return false;
  const auto mask = space.CoMask(i, q);
  Rational total = 0;
  for (std::size_t c = 0; c < nu.size(); ++c) {
    if ((sgn(nu[c]) > 0) != (mask[c] != 0) || sgn(nu[c]) < 0) return false;
    total += nu[c];
  }
  if (total != 1) return false;
  const std::vector<int> scope = options.scope.empty() ? AllOf(space.NumStrategies(i)) : options.scope;
  return SatisfiesAll(space, i, s, options, scope, nu);
}

IATrace IteratedAdmissibility(const StrategySpace& space) {
  IATrace trace;
  trace.steps.push_back(space.Everything());
  while (true) {
    const ProductRestriction& q = trace.steps.back();
    ProductRestriction next;
    for (PlayerId i = 0; i < space.num_players(); ++i) {
      const auto& own = q.members[static_cast<std::size_t>(i)];
      const std::vector<int> co = space.CoProfilesWithin(i, q);
      // Best replies to the uniform measure on Q_{-i} are admissible.
      std::vector<Rational> uv;
      Rational top;
      for (std::size_t k = 0; k < own.size(); ++k) {
        uv.push_back(UniformValue(space, i, own[k], co));
        if (k == 0 || uv.back() > top) top = uv.back();
      }
      std::vector<int> kept;
      for (std::size_t k = 0; k < own.size(); ++k) {
        const int s = own[k];
        if (uv[k] == top) {
          kept.push_back(s);
          continue;
        }
        auto sigma = WeaklyDominatedWithin(space, i, s, own, co);
        if (sigma) {
          trace.eliminated.push_back({static_cast<int>(trace.steps.size()), i, s, std::move(*sigma)});
        } else {
          kept.push_back(s);
        }
      }
      next.members.push_back(std::move(kept));
    }
    if (next == q) {
      trace.fixpoint = static_cast<int>(trace.steps.size()) - 1;
      trace.steps.push_back(next);
      return trace;
    }
    trace.steps.push_back(std::move(next));
  }
}

}  // namespace prudens
