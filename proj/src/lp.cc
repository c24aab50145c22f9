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

#include "prudens/lp.h"

#include <stdexcept>

namespace prudens {
namespace {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    n_ = lp.num_vars;
    m_ = static_cast<int>(lp.rows.size());
    ns_ = 0;
    for (const auto& r : lp.rows) {
      if (r.sense != Sense::kEq) ++ns_;
    }
    width_ = n_ + ns_ + m_;
    t_.assign(static_cast<std::size_t>(m_), std::vector<Rational>(static_cast<std::size_t>(width_)));
    b_.resize(static_cast<std::size_t>(m_));
    sigma_.resize(static_cast<std::size_t>(m_));
    basis_.resize(static_cast<std::size_t>(m_));
    active_art_.assign(static_cast<std::size_t>(width_), 0);
    int slack = n_;
    for (int k = 0; k < m_; ++k) {
      const auto& row = lp.rows[static_cast<std::size_t>(k)];
      if (static_cast<int>(row.coeffs.size()) != n_) throw std::invalid_argument("LP row has the wrong width");
      const int sg = sgn(row.rhs) < 0 ? -1 : 1;
      sigma_[static_cast<std::size_t>(k)] = sg;
      auto& tr = t_[static_cast<std::size_t>(k)];
      for (int j = 0; j < n_; ++j) {
        tr[static_cast<std::size_t>(j)] = sg < 0 ? Rational(-row.coeffs[static_cast<std::size_t>(j)])
                                                 : row.coeffs[static_cast<std::size_t>(j)];
      }
      b_[static_cast<std::size_t>(k)] = sg < 0 ? Rational(-row.rhs) : row.rhs;
      const int art = n_ + ns_ + k;
      tr[static_cast<std::size_t>(art)] = 1;
      int basic = art;
      if (row.sense != Sense::kEq) {
        const int coef = (row.sense == Sense::kLe ? 1 : -1) * sg;
        tr[static_cast<std::size_t>(slack)] = coef;
        if (coef == 1) basic = slack;
        ++slack;
      }
      basis_[static_cast<std::size_t>(k)] = basic;
      if (basic == art) active_art_[static_cast<std::size_t>(art)] = 1;
    }
  }

  LPSolution Solve() {
    LPSolution sol;
    // Phase 1: maximize minus the sum of the artificials in use.
    std::vector<Rational> c1(static_cast<std::size_t>(width_));
    bool any_art = false;
    for (int j = 0; j < width_; ++j) {
      if (active_art_[static_cast<std::size_t>(j)]) {
        c1[static_cast<std::size_t>(j)] = -1;
        any_art = true;
      }
    }
    if (any_art) {
      Price(c1);
      Iterate(sol, /*phase_two=*/false);
      Rational v = 0;
      for (int k = 0; k < m_; ++k) {
        if (active_art_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(k)])]) {
          v -= b_[static_cast<std::size_t>(k)];
        }
      }
      if (sgn(v) < 0) {
        sol.status = LPStatus::kInfeasible;
        sol.y = Duals(c1);
        return sol;
      }
      // Pivot zero-level artificials out where the row allows it.
      for (int k = 0; k < m_; ++k) {
        if (!active_art_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(k)])]) continue;
        for (int j = 0; j < n_ + ns_; ++j) {
          if (sgn(t_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) != 0) {
            Pivot(k, j);
            ++sol.pivots;
            break;
          }
        }
      }
    }
    std::vector<Rational> c2(static_cast<std::size_t>(width_));
    for (int j = 0; j < n_; ++j) c2[static_cast<std::size_t>(j)] = lp_.objective[static_cast<std::size_t>(j)];
    Price(c2);
    const int ray_col = Iterate(sol, /*phase_two=*/true);
    sol.x.assign(static_cast<std::size_t>(n_), Rational(0));
    for (int k = 0; k < m_; ++k) {
      const int v = basis_[static_cast<std::size_t>(k)];
      if (v < n_) sol.x[static_cast<std::size_t>(v)] = b_[static_cast<std::size_t>(k)];
    }
    sol.value = 0;
    for (int j = 0; j < n_; ++j) sol.value += lp_.objective[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
    if (ray_col >= 0) {
      sol.status = LPStatus::kUnbounded;
      sol.ray.assign(static_cast<std::size_t>(n_), Rational(0));
      if (ray_col < n_) sol.ray[static_cast<std::size_t>(ray_col)] = 1;
      for (int k = 0; k < m_; ++k) {
        const int v = basis_[static_cast<std::size_t>(k)];
        if (v < n_) sol.ray[static_cast<std::size_t>(v)] = -t_[static_cast<std::size_t>(k)][static_cast<std::size_t>(ray_col)];
      }
      return sol;
    }
    sol.status = LPStatus::kOptimal;
    sol.y = Duals(c2);
    return sol;
  }

 private:
  // Reduced costs d_j = c_j - c_B B^-1 A_j for the current basis.
  void Price(const std::vector<Rational>& c) {
    d_ = c;
    for (int k = 0; k < m_; ++k) {
      const Rational& cb = c[static_cast<std::size_t>(basis_[static_cast<std::size_t>(k)])];
      if (sgn(cb) == 0) continue;
      const auto& tr = t_[static_cast<std::size_t>(k)];
      for (int j = 0; j < width_; ++j) {
        if (sgn(tr[static_cast<std::size_t>(j)]) != 0) d_[static_cast<std::size_t>(j)] -= cb * tr[static_cast<std::size_t>(j)];
      }
    }
  }

  // y = c_B B^-1, read off the identity block, mapped back through the row signs.
  std::vector<Rational> Duals(const std::vector<Rational>& c) const {
    std::vector<Rational> y(static_cast<std::size_t>(m_));
    for (int r = 0; r < m_; ++r) {
      Rational v = 0;
      for (int k = 0; k < m_; ++k) {
        const Rational& cb = c[static_cast<std::size_t>(basis_[static_cast<std::size_t>(k)])];
        if (sgn(cb) != 0) v += cb * t_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n_ + ns_ + r)];
      }
      y[static_cast<std::size_t>(r)] = sigma_[static_cast<std::size_t>(r)] < 0 ? Rational(-v) : v;
    }
    return y;
  }

  // Bland's rule. Returns the entering column of an unbounded direction, or -1.
  int Iterate(LPSolution& sol, bool phase_two) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < n_ + ns_; ++j) {
        if (sgn(d_[static_cast<std::size_t>(j)]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return -1;
      int leave = -1;
      Rational best;
      for (int k = 0; k < m_; ++k) {
        const Rational& a = t_[static_cast<std::size_t>(k)][static_cast<std::size_t>(enter)];
        if (sgn(a) <= 0) continue;
        Rational ratio = b_[static_cast<std::size_t>(k)] / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(k)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = k;
          best = std::move(ratio);
        }
      }
      if (leave < 0) {
        if (!phase_two) throw std::logic_error("phase one cannot be unbounded");
        return enter;
      }
      Pivot(leave, enter);
      ++sol.pivots;
    }
  }

  void Pivot(int r, int j) {
    auto& pr = t_[static_cast<std::size_t>(r)];
    const Rational p = pr[static_cast<std::size_t>(j)];
    std::vector<int> nz;
    for (int c = 0; c < width_; ++c) {
      if (sgn(pr[static_cast<std::size_t>(c)]) != 0) {
        pr[static_cast<std::size_t>(c)] /= p;
        nz.push_back(c);
      }
    }
    b_[static_cast<std::size_t>(r)] /= p;
    Rational f;
    for (int k = 0; k < m_; ++k) {
      if (k == r) continue;
      auto& tk = t_[static_cast<std::size_t>(k)];
      if (sgn(tk[static_cast<std::size_t>(j)]) == 0) continue;
      f = tk[static_cast<std::size_t>(j)];
      for (int c : nz) tk[static_cast<std::size_t>(c)] -= f * pr[static_cast<std::size_t>(c)];
      b_[static_cast<std::size_t>(k)] -= f * b_[static_cast<std::size_t>(r)];
    }
    if (sgn(d_[static_cast<std::size_t>(j)]) != 0) {
      f = d_[static_cast<std::size_t>(j)];
      for (int c : nz) d_[static_cast<std::size_t>(c)] -= f * pr[static_cast<std::size_t>(c)];
    }
    basis_[static_cast<std::size_t>(r)] = j;
  }

  const LinearProgram& lp_;
  int n_ = 0, m_ = 0, ns_ = 0, width_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> b_;
  std::vector<Rational> d_;
  std::vector<int> sigma_;
  std::vector<int> basis_;
  std::vector<char> active_art_;
};

bool Fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

Rational RowDot(const LinearProgram::Row& row, const std::vector<Rational>& x) {
  Rational v = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(row.coeffs[j]) != 0 && sgn(x[j]) != 0) v += row.coeffs[j] * x[j];
  }
  return v;
}

bool PrimalFeasible(const LinearProgram& lp, const std::vector<Rational>& x, std::string* why) {
  if (static_cast<int>(x.size()) != lp.num_vars) return Fail(why, "point has the wrong size");
  for (const auto& v : x) {
    if (sgn(v) < 0) return Fail(why, "negative variable");
  }
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    const auto& row = lp.rows[r];
    const Rational lhs = RowDot(row, x);
    const bool ok = row.sense == Sense::kLe ? lhs <= row.rhs : row.sense == Sense::kGe ? lhs >= row.rhs : lhs == row.rhs;
    if (!ok) return Fail(why, "row " + std::to_string(r) + " violated");
  }
  return true;
}

bool DualSigns(const LinearProgram& lp, const std::vector<Rational>& y, std::string* why) {
  if (y.size() != lp.rows.size()) return Fail(why, "multiplier vector has the wrong size");
  for (std::size_t r = 0; r < y.size(); ++r) {
    const int s = sgn(y[r]);
    if ((lp.rows[r].sense == Sense::kLe && s < 0) || (lp.rows[r].sense == Sense::kGe && s > 0)) {
      return Fail(why, "multiplier " + std::to_string(r) + " has the wrong sign");
    }
  }
  return true;
}

// y'A, column by column.
std::vector<Rational> Combine(const LinearProgram& lp, const std::vector<Rational>& y) {
  std::vector<Rational> out(static_cast<std::size_t>(lp.num_vars));
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    if (sgn(y[r]) == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += y[r] * lp.rows[r].coeffs[j];
  }
  return out;
}

}  // namespace

LinearProgram::Row& LinearProgram::AddRow(Sense sense, Rational rhs) {
  rows.push_back(Row{std::vector<Rational>(static_cast<std::size_t>(num_vars)), sense, std::move(rhs)});
  return rows.back();
}

LPSolution SolveLP(const LinearProgram& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.num_vars) {
    throw std::invalid_argument("objective has the wrong width");
  }
  return Tableau(lp).Solve();
}

bool VerifyLP(const LinearProgram& lp, const LPSolution& sol, std::string* why) {
  switch (sol.status) {
    case LPStatus::kOptimal: {
      if (!PrimalFeasible(lp, sol.x, why) || !DualSigns(lp, sol.y, why)) return false;
      const auto ya = Combine(lp, sol.y);
      for (std::size_t j = 0; j < ya.size(); ++j) {
        if (ya[j] < lp.objective[j]) return Fail(why, "dual constraint " + std::to_string(j) + " violated");
      }
      Rational cx = 0, by = 0;
      for (std::size_t j = 0; j < sol.x.size(); ++j) cx += lp.objective[j] * sol.x[j];
      for (std::size_t r = 0; r < sol.y.size(); ++r) by += lp.rows[r].rhs * sol.y[r];
      if (cx != sol.value) return Fail(why, "reported value differs from c'x");
      if (cx != by) return Fail(why, "duality gap");
      return true;
    }
    case LPStatus::kInfeasible: {
      if (!DualSigns(lp, sol.y, why)) return false;
      const auto ya = Combine(lp, sol.y);
      for (const auto& v : ya) {
        if (sgn(v) < 0) return Fail(why, "Farkas combination has a negative entry");
      }
      Rational by = 0;
      for (std::size_t r = 0; r < sol.y.size(); ++r) by += lp.rows[r].rhs * sol.y[r];
      if (sgn(by) >= 0) return Fail(why, "Farkas right-hand side is not negative");
      return true;
    }
    case LPStatus::kUnbounded: {
      if (!PrimalFeasible(lp, sol.x, why)) return false;
      if (static_cast<int>(sol.ray.size()) != lp.num_vars) return Fail(why, "ray has the wrong size");
      for (const auto& v : sol.ray) {
        if (sgn(v) < 0) return Fail(why, "ray has a negative entry");
      }
      for (const auto& row : lp.rows) {
        const int s = sgn(RowDot(row, sol.ray));
        if ((row.sense == Sense::kLe && s > 0) || (row.sense == Sense::kGe && s < 0) ||
            (row.sense == Sense::kEq && s != 0)) {
          return Fail(why, "ray leaves the feasible region");
        }
      }
      Rational cd = 0;
      for (std::size_t j = 0; j < sol.ray.size(); ++j) cd += lp.objective[j] * sol.ray[j];
      if (sgn(cd) <= 0) return Fail(why, "ray does not improve the objective");
      return true;
    }
  }
  return Fail(why, "unknown status");
}

}  // namespace prudens
