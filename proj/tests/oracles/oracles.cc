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

#include "oracles.h"

#include <algorithm>
#include <variant>

namespace oracle {

std::optional<std::vector<Rational>> Solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

namespace {

// Calls fn on every k-subset of {0..n-1}, stopping when fn returns true.
template <typename F>
bool Subsets(int n, int k, F&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
  if (k > n) return false;
  while (true) {
    if (fn(idx)) return true;
    int j = k - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
    if (j < 0) return false;
    ++idx[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

}  // namespace

bool Dominated(const StrategySpace& space, PlayerId i, int s, const std::vector<int>& own,
               const std::vector<int>& co) {
  const int m = static_cast<int>(own.size());
  const int rows = static_cast<int>(co.size());
  for (int k = 1; k <= m; ++k) {
    const bool hit = Subsets(m, k, [&](const std::vector<int>& support) {
      return Subsets(rows, k - 1, [&](const std::vector<int>& tight) {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        a.emplace_back(static_cast<std::size_t>(k), Rational(1));
        b.emplace_back(1);
        for (int r : tight) {
          const int c = co[static_cast<std::size_t>(r)];
          std::vector<Rational> row;
          for (int t : support) row.push_back(space.Utility(i, own[static_cast<std::size_t>(t)], c));
          a.push_back(std::move(row));
          b.push_back(space.Utility(i, s, c));
        }
        const auto x = Solve(std::move(a), std::move(b));
        if (!x) return false;
        for (const auto& v : *x) {
          if (v < 0) return false;
        }
        Rational slack = 0;
        for (int c : co) {
          Rational u = 0;
          for (int t = 0; t < k; ++t) {
            u += (*x)[static_cast<std::size_t>(t)] *
                 space.Utility(i, own[static_cast<std::size_t>(support[static_cast<std::size_t>(t)])], c);
          }
          const Rational d = u - space.Utility(i, s, c);
          if (d < 0) return false;
          slack += d;
        }
        return slack > 0;
      });
    });
    if (hit) return true;
  }
  return false;
}

bool Dominated(const StrategySpace& space, const ProductRestriction& q, PlayerId i, int s) {
  std::vector<int> co;
  for (int c = 0; c < space.NumCoProfiles(i); ++c) {
    const auto prof = space.CoProfile(i, c);
    bool in = true;
    for (PlayerId j = 0; j < space.num_players(); ++j) {
      if (j != i && !q.Contains(j, prof[static_cast<std::size_t>(j)])) in = false;
    }
    if (in) co.push_back(c);
  }
  return Dominated(space, i, s, q.members[static_cast<std::size_t>(i)], co);
}

std::vector<ProductRestriction> IteratedAdmissibility(const StrategySpace& space) {
  std::vector<ProductRestriction> steps{space.Everything()};
  while (true) {
    const ProductRestriction& cur = steps.back();
    ProductRestriction next = cur;
    for (PlayerId i = 0; i < space.num_players(); ++i) {
      auto& keep = next.members[static_cast<std::size_t>(i)];
      keep.clear();
      for (int s : cur.members[static_cast<std::size_t>(i)]) {
        if (!Dominated(space, cur, i, s)) keep.push_back(s);
      }
    }
    const bool done = next == cur;
    steps.push_back(std::move(next));
    if (done) return steps;
  }
}

HistoryId Walk(const Game& game, const std::vector<Strategy>& profile) {
  HistoryId h = game.root();
  while (!game.IsTerminal(h)) {
    const int k = game.NonterminalIndex(h);
    std::vector<int> a;
    for (const auto& s : profile) a.push_back(s.choice[static_cast<std::size_t>(k)]);
    h = game.Child(h, a);
  }
  return h;
}

Rational Payoff(const StrategySpace& space, PlayerId i, int r, int co) {
  const auto prof = space.CoProfile(i, co);
  std::vector<Strategy> full;
  for (PlayerId j = 0; j < space.num_players(); ++j) {
    const int idx = j == i ? r : prof[static_cast<std::size_t>(j)];
    full.push_back(space.ClassMembers(j, idx).front());
  }
  return space.game().Payoff(Walk(space.game(), full), i);
}

bool Allows(const Game& game, const Strategy& s, HistoryId h) {
  for (HistoryId g = h; g != game.root(); g = game.Parent(g)) {
    const HistoryId p = game.Parent(g);
    const int k = game.NonterminalIndex(p);
    if (game.IncomingProfile(g)[static_cast<std::size_t>(s.owner)] != s.choice[static_cast<std::size_t>(k)]) {
      return false;
    }
  }
  return true;
}

bool RealizationEquivalent(const Game& game, const Strategy& s, const Strategy& t) {
  std::vector<std::vector<Strategy>> all;
  for (PlayerId j = 0; j < game.num_players(); ++j) all.push_back(prudens::EnumerateStrategies(game, j));
  std::vector<std::size_t> pos(all.size(), 0);
  while (true) {
    std::vector<Strategy> a, b;
    for (PlayerId j = 0; j < game.num_players(); ++j) {
      const auto u = static_cast<std::size_t>(j);
      a.push_back(j == s.owner ? s : all[u][pos[u]]);
      b.push_back(j == s.owner ? t : all[u][pos[u]]);
    }
    if (Walk(game, a) != Walk(game, b)) return false;
    std::size_t j = 0;
    for (; j < all.size(); ++j) {
      if (static_cast<int>(j) == s.owner) continue;
      if (++pos[j] < all[j].size()) break;
      pos[j] = 0;
    }
    if (j == all.size()) return true;
  }
}

Hyperreal ExpectedPayoff(const StrategySpace& space, const prudens::ConditioningFamily& family,
                         const prudens::Belief& b, int r, int k) {
  const PlayerId i = family.owner();
  const HistoryId h = space.game().nonterminals()[static_cast<std::size_t>(k)];
  Hyperreal total(0);
  for (int co = 0; co < space.NumCoProfiles(i); ++co) {
    const auto prof = space.CoProfile(i, co);
    bool in = true;
    for (PlayerId j = 0; j < space.num_players(); ++j) {
      if (j != i && !oracle::Allows(space.game(), space.ClassMembers(j, prof[static_cast<std::size_t>(j)]).front(), h)) {
        in = false;
      }
    }
    if (!in) continue;
    const Rational u = Payoff(space, i, r, co);
    if (const auto* p = std::get_if<prudens::PriorCNPS>(&b)) {
      total += u * p->prior()[static_cast<std::size_t>(co)];
    } else {
      const auto& row = std::get<prudens::ExplicitCPS>(b).Row(family.EventOf(k));
      total += Hyperreal(u * row[static_cast<std::size_t>(co)]);
    }
  }
  return total;
}

std::pair<int, std::vector<Rational>> Divide(const Hyperreal& a, const Hyperreal& b, int terms) {
  const int da = *a.LeadingDegree(), db = *b.LeadingDegree();
  auto coef = [](const Hyperreal& x, int d) {
    const auto& c = x.coefficients();
    return d < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(d)] : Rational(0);
  };
  // Long division of power series: q_n = (a_n - sum_{j<n} q_j b_{n-j}) / b_0.
  std::vector<Rational> q;
  for (int n = 0; n < terms; ++n) {
    Rational acc = coef(a, da + n);
    for (int j = 0; j < n; ++j) acc -= q[static_cast<std::size_t>(j)] * coef(b, db + n - j);
    q.push_back(acc / coef(b, db));
  }
  return {da - db, q};
}

std::optional<Rational> StandardRatio(const Hyperreal& a, const Hyperreal& b) {
  if (a.IsZero()) return Rational(0);
  const auto [shift, q] = Divide(a, b, 3);
  if (shift < 0) return std::nullopt;
  return shift > 0 ? Rational(0) : q[0];
}

}  // namespace oracle
