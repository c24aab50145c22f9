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

#ifndef PRUDENS_LP_H_
#define PRUDENS_LP_H_

#include <string>
#include <vector>

#include "prudens/rational.h"

namespace prudens {

enum class Sense { kLe, kGe, kEq };

// maximize objective . x  subject to  rows,  x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<Rational> coeffs;  // dense, one per variable
    Sense sense = Sense::kLe;
    Rational rhs;
  };
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Row> rows;

  explicit LinearProgram(int n = 0) : num_vars(n), objective(static_cast<std::size_t>(n)) {}
  Row& AddRow(Sense sense, Rational rhs);
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

// Every outcome carries a certificate that VerifyLP checks by substitution:
//  optimal    x feasible, y dual feasible (y >= 0 on <= rows, y <= 0 on >=
//             rows, y'A >= c) and b'y = c'x;
//  infeasible y with the same sign pattern, y'A >= 0 and b'y < 0 (Farkas);
//  unbounded  x feasible and a ray d >= 0 keeping every row satisfied with
//             c'd > 0.
struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  std::vector<Rational> x;
  Rational value;
  std::vector<Rational> y;
  std::vector<Rational> ray;
  int pivots = 0;
};

// Two-phase primal simplex over exact rationals with Bland's rule, so the
// pivot sequence and therefore the returned vertex are deterministic.
LPSolution SolveLP(const LinearProgram& lp);

bool VerifyLP(const LinearProgram& lp, const LPSolution& sol, std::string* why = nullptr);

}  // namespace prudens

#endif  // PRUDENS_LP_H_
