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

#ifndef PRUDENS_HYPERREAL_H_
#define PRUDENS_HYPERREAL_H_

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prudens/rational.h"

namespace prudens {

// Raised when a result would carry a power of the infinitesimal above the
// configured degree bound. Never truncate: a dropped term can flip an order.
class DegreeOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class NegativeInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kDefaultDegreeBound = 16;

// A polynomial c0 + c1*e + ... + cD*e^D in one fixed positive infinitesimal e,
// with exact rational coefficients. This is the value space for non-standard
// probabilities and expected payoffs: every quantity the solver builds is a
// finite sum of standard measures weighted by powers of e.
//
// Canonical form: trailing zero coefficients are stripped, so zero is the
// empty coefficient list and equality is structural.
//
// The degree bound travels with the value. Binary operations use the smaller
// of the two bounds and throw DegreeOverflow instead of truncating.
class Hyperreal {
 public:
  Hyperreal() = default;
  explicit Hyperreal(const Rational& constant, int degree_bound = kDefaultDegreeBound);
  Hyperreal(long constant) : Hyperreal(Rational(constant)) {}  // NOLINT

  static Hyperreal FromCoefficients(std::vector<Rational> coefficients,
                                    int degree_bound = kDefaultDegreeBound);
  // e^power.
  static Hyperreal Epsilon(int power = 1, int degree_bound = kDefaultDegreeBound);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree_bound() const { return degree_bound_; }
  Hyperreal WithDegreeBound(int degree_bound) const;

  bool IsZero() const { return coefficients_.empty(); }
  // -1, 0 or +1. Decided by the lowest-degree nonzero coefficient.
  int Sign() const;
  // Highest power present; -1 for zero.
  int Degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  // Lowest power with a nonzero coefficient; nullopt for zero.
  std::optional<int> LeadingDegree() const;
  const Rational& LeadingCoefficient() const;  // requires !IsZero()
  Rational StandardPart() const;

  Hyperreal& operator+=(const Hyperreal& other);
  Hyperreal& operator-=(const Hyperreal& other);
  // *this += scale * other. The hot path of every expected-payoff sum.
  Hyperreal& AddScaled(const Rational& scale, const Hyperreal& other);

  friend Hyperreal operator+(Hyperreal a, const Hyperreal& b) { return a += b; }
  friend Hyperreal operator-(Hyperreal a, const Hyperreal& b) { return a -= b; }
  friend Hyperreal operator-(Hyperreal a);
  friend Hyperreal operator*(const Hyperreal& a, const Hyperreal& b);
  friend Hyperreal operator*(const Rational& scale, const Hyperreal& a);

  friend bool operator==(const Hyperreal& a, const Hyperreal& b) {
    return a.coefficients_ == b.coefficients_;
  }
  friend std::strong_ordering operator<=>(const Hyperreal& a, const Hyperreal& b);

  // "c0 + c1*e + c2*e^2"; coefficient 1 is written as a bare power of e and
  // negative coefficients as subtraction. Zero renders as "0".
  std::string ToString() const;
  // Inverse of ToString. Also accepts explicit "1*e", "+ -2*e^3" and repeated
  // powers (summed). Throws std::invalid_argument on malformed text.
  static Hyperreal Parse(std::string_view text, int degree_bound = kDefaultDegreeBound);

 private:
  void Normalize();
  void CheckBound() const;

  std::vector<Rational> coefficients_;
  int degree_bound_ = kDefaultDegreeBound;
};

// Ordering of the field: the constant term decides first, then e, then e^2.
// The only total order with 0 < e < r for every positive rational r.
std::strong_ordering Compare(const Hyperreal& a, const Hyperreal& b);

// x > n*y for every natural n. Both arguments must be nonnegative.
bool InfinitelyGreater(const Hyperreal& x, const Hyperreal& y);

// Whether st(numerator / denominator) = 0, decided on leading degrees without
// forming the quotient. Requires numerator >= 0 and denominator > 0.
bool RatioStandardPartIsZero(const Hyperreal& numerator, const Hyperreal& denominator);

}  // namespace prudens

#endif  // PRUDENS_HYPERREAL_H_
