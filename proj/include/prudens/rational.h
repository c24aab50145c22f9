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

#ifndef PRUDENS_RATIONAL_H_
#define PRUDENS_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace prudens {

// Exact rational with arbitrary-precision numerator and denominator. GMP keeps
// mpq values canonical (positive denominator, reduced) after every arithmetic
// operation; values built from text go through ParseRational, which
// canonicalizes.
using Rational = mpq_class;

// Accepts "p", "-p" and "p/q" with decimal digits only (no floats, no spaces).
// Throws std::invalid_argument on anything else, including a zero denominator.
Rational ParseRational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string ToString(const Rational& value);

}  // namespace prudens

#endif  // PRUDENS_RATIONAL_H_
