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

#include "prudens/strategy_space.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prudens {
namespace {

constexpr std::size_t kProfileCap = 4'000'000;

// Allowed-nonterminal mask of s by one preorder pass.
std::vector<char> AllowMask(const Game& game, const Strategy& s) {
  const auto& hs = game.nonterminals();
  std::vector<char> allowed(static_cast<std::size_t>(game.num_histories()), 0);
  allowed[0] = 1;
  for (HistoryId h : hs) {
    if (!allowed[static_cast<std::size_t>(h)]) continue;
    const int own = s.choice[static_cast<std::size_t>(game.NonterminalIndex(h))];
    for (HistoryId c : game.Children(h)) {
      if (game.IncomingProfile(c)[static_cast<std::size_t>(s.owner)] == own) {
        allowed[static_cast<std::size_t>(c)] = 1;
      }
    }
  }
  std::vector<char> out(hs.size(), 0);
  for (std::size_t k = 0; k < hs.size(); ++k) out[k] = allowed[static_cast<std::size_t>(hs[k])];
  return out;
}

// Choices on allowed histories, -1 elsewhere: identifies the equivalence class.
std::vector<int> ReducedKey(const std::vector<char>& mask, const Strategy& s) {
  std::vector<int> key(mask.size(), -1);
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (mask[k]) key[k] = s.choice[k];
  }
  return key;
}

std::string ReducedName(const Game& game, const Strategy& s, const std::vector<char>& mask) {
  std::string name;
  const auto& hs = game.nonterminals();
  for (std::size_t k = 0; k < hs.size(); ++k) {
    if (!game.IsActive(hs[k], s.owner)) continue;
    if (!name.empty()) name += '.';
    name += mask[k] ? game.Actions(hs[k], s.owner)[static_cast<std::size_t>(s.choice[k])]
                    : std::string("*");
  }
  if (name.empty()) return StrategyName(game, s);
  return name;
}

}  // namespace

bool ProductRestriction::Contains(PlayerId i, int s) const {
  const auto& m = members[static_cast<std::size_t>(i)];
  return std::binary_search(m.begin(), m.end(), s);
}

bool ProductRestriction::AnyEmpty() const {
  return std::any_of(members.begin(), members.end(), [](const auto& m) { return m.empty(); });
}

bool ProductRestriction::IsSubsetOf(const ProductRestriction& other) const {
  if (members.size() != other.members.size()) return false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!std::includes(other.members[i].begin(), other.members[i].end(), members[i].begin(),
                       members[i].end())) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> ReduceStrategies(const Game& game, PlayerId i, std::size_t cap) {
  const auto all = EnumerateStrategies(game, i, cap);
  std::map<std::vector<int>, std::size_t> seen;
  std::vector<std::vector<int>> classes;
  for (std::size_t s = 0; s < all.size(); ++s) {
    auto key = ReducedKey(AllowMask(game, all[s]), all[s]);
    auto [it, fresh] = seen.emplace(std::move(key), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(static_cast<int>(s));
  }
  return classes;
}

StrategySpace StrategySpace::Full(std::shared_ptr<const Game> game, std::size_t cap) {
  StrategySpace sp;
  sp.game_ = std::move(game);
  sp.kind_ = Kind::kFull;
  for (PlayerId i = 0; i < sp.num_players(); ++i) {
    auto all = EnumerateStrategies(*sp.game_, i, cap);
    std::vector<std::string> names;
    std::vector<std::vector<Strategy>> members;
    for (const auto& s : all) {
      names.push_back(StrategyName(*sp.game_, s));
      members.push_back({s});
    }
    sp.strategies_.push_back(std::move(all));
    sp.names_.push_back(std::move(names));
    sp.class_members_.push_back(std::move(members));
  }
  sp.Build(cap);
  return sp;
}

StrategySpace StrategySpace::Reduced(std::shared_ptr<const Game> game, std::size_t cap) {
  StrategySpace sp;
  sp.game_ = std::move(game);
  sp.kind_ = Kind::kReduced;
  for (PlayerId i = 0; i < sp.num_players(); ++i) {
    const auto all = EnumerateStrategies(*sp.game_, i, cap);
    std::vector<Strategy> reps;
    std::vector<std::string> names;
    std::vector<std::vector<Strategy>> members;
    for (const auto& cls : ReduceStrategies(*sp.game_, i, cap)) {
      const Strategy& rep = all[static_cast<std::size_t>(cls.front())];
      reps.push_back(rep);
      names.push_back(ReducedName(*sp.game_, rep, AllowMask(*sp.game_, rep)));
      std::vector<Strategy> m;
      for (int idx : cls) m.push_back(all[static_cast<std::size_t>(idx)]);
      members.push_back(std::move(m));
    }
    sp.strategies_.push_back(std::move(reps));
    sp.names_.push_back(std::move(names));
    sp.class_members_.push_back(std::move(members));
  }
  sp.Build(cap);
  return sp;
}

void StrategySpace::Build(std::size_t cap) {
  (void)cap;
  const Game& g = *game_;
  const int n = num_players();
  const int nk = num_nonterminals();

  std::size_t profiles = 1;
  for (PlayerId i = 0; i < n; ++i) {
    profiles *= static_cast<std::size_t>(NumStrategies(i));
    if (profiles > kProfileCap) {
      throw SizeLimit("more than " + std::to_string(kProfileCap) + " strategy profiles");
    }
  }
  co_counts_.assign(static_cast<std::size_t>(n), 0);
  for (PlayerId i = 0; i < n; ++i) {
    co_counts_[static_cast<std::size_t>(i)] =
        static_cast<int>(profiles / static_cast<std::size_t>(NumStrategies(i)));
  }

  // Outcomes by full profile index (player 0 most significant), walking the
  // tree once per profile.
  outcomes_.assign(profiles, -1);
  std::vector<int> prof(static_cast<std::size_t>(n), 0);
  ActionProfile a(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx < profiles; ++idx) {
    HistoryId h = g.root();
    while (!g.IsTerminal(h)) {
      const auto k = static_cast<std::size_t>(g.NonterminalIndex(h));
      for (PlayerId j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(j)] =
            strategy(j, prof[static_cast<std::size_t>(j)]).choice[k];
      }
      h = g.Child(h, a);
    }
    outcomes_[idx] = h;
    for (int j = n - 1; j >= 0; --j) {
      if (++prof[static_cast<std::size_t>(j)] < NumStrategies(j)) break;
      prof[static_cast<std::size_t>(j)] = 0;
    }
  }

  utilities_.assign(static_cast<std::size_t>(n), {});
  for (PlayerId i = 0; i < n; ++i) {
    auto& u = utilities_[static_cast<std::size_t>(i)];
    const int nc = NumCoProfiles(i);
    u.resize(static_cast<std::size_t>(NumStrategies(i)) * static_cast<std::size_t>(nc));
    for (int co = 0; co < nc; ++co) {
      auto p = CoProfile(i, co);
      for (int s = 0; s < NumStrategies(i); ++s) {
        p[static_cast<std::size_t>(i)] = s;
        u[static_cast<std::size_t>(s) * static_cast<std::size_t>(nc) + static_cast<std::size_t>(co)] =
            g.Payoff(Outcome(p), i);
      }
    }
  }

  allow_mask_.assign(static_cast<std::size_t>(n), {});
  allowing_.assign(static_cast<std::size_t>(n),
                   std::vector<std::vector<int>>(static_cast<std::size_t>(nk)));
  allowed_nonterminals_.assign(static_cast<std::size_t>(n), {});
  for (PlayerId i = 0; i < n; ++i) {
    auto& mask = allow_mask_[static_cast<std::size_t>(i)];
    mask.assign(static_cast<std::size_t>(NumStrategies(i)) * static_cast<std::size_t>(nk), 0);
    auto& hi = allowed_nonterminals_[static_cast<std::size_t>(i)];
    for (int s = 0; s < NumStrategies(i); ++s) {
      const auto m = AllowMask(g, strategy(i, s));
      std::vector<int> mine;
      for (int k = 0; k < nk; ++k) {
        if (!m[static_cast<std::size_t>(k)]) continue;
        mask[static_cast<std::size_t>(s) * static_cast<std::size_t>(nk) + static_cast<std::size_t>(k)] = 1;
        allowing_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].push_back(s);
        mine.push_back(k);
      }
      hi.push_back(std::move(mine));
    }
  }

  co_allowing_.assign(static_cast<std::size_t>(n),
                      std::vector<std::vector<int>>(static_cast<std::size_t>(nk)));
  co_allowing_mask_.assign(static_cast<std::size_t>(n),
                           std::vector<std::vector<char>>(static_cast<std::size_t>(nk)));
  for (PlayerId i = 0; i < n; ++i) {
    const int nc = NumCoProfiles(i);
    for (int k = 0; k < nk; ++k) {
      auto& list = co_allowing_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      auto& cm = co_allowing_mask_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      cm.assign(static_cast<std::size_t>(nc), 0);
      for (int co = 0; co < nc; ++co) {
        const auto p = CoProfile(i, co);
        bool ok = true;
        for (PlayerId j = 0; j < n && ok; ++j) {
          if (j != i) ok = Allows(j, p[static_cast<std::size_t>(j)], k);
        }
        if (ok) {
          list.push_back(co);
          cm[static_cast<std::size_t>(co)] = 1;
        }
      }
    }
  }

  replacement_.clear();
  if (kind_ == Kind::kFull) {
    replacement_.assign(static_cast<std::size_t>(n), {});
    for (PlayerId i = 0; i < n; ++i) {
      auto& r = replacement_[static_cast<std::size_t>(i)];
      r.resize(static_cast<std::size_t>(NumStrategies(i)) * static_cast<std::size_t>(nk));
      for (int s = 0; s < NumStrategies(i); ++s) {
        for (int k = 0; k < nk; ++k) {
          const Strategy rep = ReplacementStrategy(
              g, strategy(i, s), g.nonterminals()[static_cast<std::size_t>(k)]);
          r[static_cast<std::size_t>(s) * static_cast<std::size_t>(nk) + static_cast<std::size_t>(k)] =
              *IndexOf(rep);
        }
      }
    }
  }
}

int StrategySpace::FindByName(PlayerId i, const std::string& name) const {
  const auto& v = at(names_, i);
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (v[s] == name) return static_cast<int>(s);
  }
  return -1;
}

std::optional<int> StrategySpace::IndexOf(const Strategy& s) const {
  if (s.owner < 0 || s.owner >= num_players()) return std::nullopt;
  const auto& hs = game_->nonterminals();
  if (s.choice.size() != hs.size()) return std::nullopt;
  if (kind_ == Kind::kFull) {
    // Mixed radix, last history least significant.
    long long idx = 0;
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const auto base = static_cast<long long>(game_->Actions(hs[k], s.owner).size());
      if (s.choice[k] < 0 || s.choice[k] >= base) return std::nullopt;
      idx = idx * base + s.choice[k];
    }
    return static_cast<int>(idx);
  }
  for (int c = 0; c < NumStrategies(s.owner); ++c) {
    if (BehaviorallyEquivalent(*game_, strategy(s.owner, c), s)) return c;
  }
  return std::nullopt;
}

std::vector<int> StrategySpace::CoProfile(PlayerId i, int co) const {
  std::vector<int> p(static_cast<std::size_t>(num_players()), -1);
  for (int j = num_players() - 1; j >= 0; --j) {
    if (j == i) continue;
    const int base = NumStrategies(j);
    p[static_cast<std::size_t>(j)] = co % base;
    co /= base;
  }
  return p;
}

int StrategySpace::CoIndex(PlayerId i, std::span<const int> profile) const {
  int idx = 0;
  for (PlayerId j = 0; j < num_players(); ++j) {
    if (j == i) continue;
    idx = idx * NumStrategies(j) + profile[static_cast<std::size_t>(j)];
  }
  return idx;
}

std::vector<std::string> StrategySpace::CoProfileNames(PlayerId i, int co) const {
  std::vector<std::string> out;
  const auto p = CoProfile(i, co);
  for (PlayerId j = 0; j < num_players(); ++j) {
    if (j != i) out.push_back(name(j, p[static_cast<std::size_t>(j)]));
  }
  return out;
}

std::string StrategySpace::CoProfileName(PlayerId i, int co) const {
  std::string out;
  for (const auto& s : CoProfileNames(i, co)) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

HistoryId StrategySpace::Outcome(std::span<const int> profile) const {
  std::size_t idx = 0;
  for (PlayerId j = 0; j < num_players(); ++j) {
    idx = idx * static_cast<std::size_t>(NumStrategies(j)) +
          static_cast<std::size_t>(profile[static_cast<std::size_t>(j)]);
  }
  return outcomes_[idx];
}

int StrategySpace::Replacement(PlayerId i, int s, int k) const {
  if (kind_ != Kind::kFull) throw std::logic_error("replacement strategies need the full space");
  return at(replacement_, i)[static_cast<std::size_t>(s) * static_cast<std::size_t>(num_nonterminals()) +
                             static_cast<std::size_t>(k)];
}

ProductRestriction StrategySpace::Everything() const {
  ProductRestriction q;
  for (PlayerId i = 0; i < num_players(); ++i) {
    std::vector<int> m(static_cast<std::size_t>(NumStrategies(i)));
    for (int s = 0; s < NumStrategies(i); ++s) m[static_cast<std::size_t>(s)] = s;
    q.members.push_back(std::move(m));
  }
  return q;
}

std::vector<char> StrategySpace::CoMask(PlayerId i, const ProductRestriction& q) const {
  const int nc = NumCoProfiles(i);
  std::vector<char> mask(static_cast<std::size_t>(nc), 0);
  for (int co = 0; co < nc; ++co) {
    const auto p = CoProfile(i, co);
    bool ok = true;
    for (PlayerId j = 0; j < num_players() && ok; ++j) {
      if (j != i) ok = q.Contains(j, p[static_cast<std::size_t>(j)]);
    }
    mask[static_cast<std::size_t>(co)] = ok ? 1 : 0;
  }
  return mask;
}

std::vector<int> StrategySpace::CoProfilesWithin(PlayerId i, const ProductRestriction& q) const {
  const auto mask = CoMask(i, q);
  std::vector<int> out;
  for (std::size_t co = 0; co < mask.size(); ++co) {
    if (mask[co]) out.push_back(static_cast<int>(co));
  }
  return out;
}

}  // namespace prudens
