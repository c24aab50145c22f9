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

#ifndef PRUDENS_REPORT_H_
#define PRUDENS_REPORT_H_

#include <string>

#include "json.hpp"
#include "prudens/dominance.h"
#include "prudens/procedures.h"
#include "prudens/strategy_space.h"

namespace prudens {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json GameToJson(const StrategySpace& space);
Json RestrictionToJson(const StrategySpace& space, const ProductRestriction& q);
Json MixedToJson(const StrategySpace& space, const MixedStrategy& sigma);
Json MeasureToJson(const StrategySpace& space, PlayerId i, const Measure& nu);
Json BeliefToJson(const StrategySpace& space, const ConditioningFamily& family, const Belief& b);

// `witnesses` false leaves out belief bodies (checks are always kept).
Json TraceToJson(const StrategySpace& space, const ProcedureTrace& trace, bool witnesses = true);
Json TheoremReportToJson(const StrategySpace& space, const TheoremReport& report, bool witnesses = true);
Json ViolationToJson(const TheoremViolation& v, const StrategySpace& space);

std::string TraceTable(const StrategySpace& space, const ProcedureTrace& trace);
std::string TheoremTable(const StrategySpace& space, const TheoremReport& report);

}  // namespace prudens

#endif  // PRUDENS_REPORT_H_
