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

#include "prudens/hyperreal.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace prudens {

Hyperreal::Hyperreal(const Rational& constant, int degree_bound)
    : degree_bound_(degree_bound) {
  if (constant != 0) coefficients_.push_back(constant);
}

Hyperreal Hyperreal::FromCoefficients(std::vector<Rational> coefficients, int degree_bound) {
  Hyperreal h;
  h.degree_bound_ = degree_bound;
  h.coefficients_ = std::move(coefficients);
  h.Normalize();
  h.CheckBound();
  return h;
}

Hyperreal Hyperreal::Epsilon(int power, int degree_bound) {
  if (power < 0) throw std::invalid_argument("negative power of e");
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
  c.back() = 1;
  return FromCoefficients(std::move(c), degree_bound);
}

Hyperreal Hyperreal::WithDegreeBound(int degree_bound) const {
  Hyperreal h = *this;
  h.degree_bound_ = degree_bound;
  h.CheckBound();
  return h;
}

void Hyperreal::Normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

void Hyperreal::CheckBound() const {
  if (Degree() > degree_bound_) {
    throw DegreeOverflow("term of degree " + std::to_string(Degree()) +
                         " exceeds degree bound " + std::to_string(degree_bound_));
  }
}

int Hyperreal::Sign() const {
  for (const Rational& c : coefficients_) {
    if (c != 0) return sgn(c);
  }
  return 0;
}

std::optional<int> Hyperreal::LeadingDegree() const {
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] != 0) return static_cast<int>(k);
  }
  return std::nullopt;
}

const Rational& Hyperreal::LeadingCoefficient() const {
  auto k = LeadingDegree();
  if (!k) throw std::logic_error("leading coefficient of zero");
  return coefficients_[static_cast<std::size_t>(*k)];
}

Rational Hyperreal::StandardPart() const {
  return coefficients_.empty() ? Rational(0) : coefficients_.front();
}

Hyperreal& Hyperreal::operator+=(const Hyperreal& other) {
  degree_bound_ = std::min(degree_bound_, other.degree_bound_);
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] += other.coefficients_[k];
  }
  Normalize();
  CheckBound();
  return *this;
}

Hyperreal& Hyperreal::operator-=(const Hyperreal& other) {
  degree_bound_ = std::min(degree_bound_, other.degree_bound_);
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] -= other.coefficients_[k];
  }
  Normalize();
  CheckBound();
  return *this;
}

Hyperreal& Hyperreal::AddScaled(const Rational& scale, const Hyperreal& other) {
  degree_bound_ = std::min(degree_bound_, other.degree_bound_);
  if (scale == 0 || other.IsZero()) {
    CheckBound();
    return *this;
  }
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  mpq_class term;
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    mpq_mul(term.get_mpq_t(), scale.get_mpq_t(), other.coefficients_[k].get_mpq_t());
    mpq_add(coefficients_[k].get_mpq_t(), coefficients_[k].get_mpq_t(), term.get_mpq_t());
  }
  Normalize();
  CheckBound();
  return *this;
}

Hyperreal operator-(Hyperreal a) {
  for (Rational& c : a.coefficients_) c = -c;
  return a;
}

Hyperreal operator*(const Hyperreal& a, const Hyperreal& b) {
  Hyperreal out;
  out.degree_bound_ = std::min(a.degree_bound_, b.degree_bound_);
  if (a.IsZero() || b.IsZero()) return out;
  const int degree = a.Degree() + b.Degree();
  if (degree > out.degree_bound_) {
    throw DegreeOverflow("product of degree " + std::to_string(degree) +
                         " exceeds degree bound " + std::to_string(out.degree_bound_));
  }
  out.coefficients_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (std::size_t x = 0; x < a.coefficients_.size(); ++x) {
    for (std::size_t y = 0; y < b.coefficients_.size(); ++y) {
      out.coefficients_[x + y] += a.coefficients_[x] * b.coefficients_[y];
    }
  }
  out.Normalize();
  return out;
}

Hyperreal operator*(const Rational& scale, const Hyperreal& a) {
  Hyperreal out;
  out.degree_bound_ = a.degree_bound_;
  return out.AddScaled(scale, a);
}

std::strong_ordering operator<=>(const Hyperreal& a, const Hyperreal& b) {
  const std::size_t n = std::max(a.coefficients_.size(), b.coefficients_.size());
  static const Rational kZero(0);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& x = k < a.coefficients_.size() ? a.coefficients_[k] : kZero;
    const Rational& y = k < b.coefficients_.size() ? b.coefficients_[k] : kZero;
    const int c = cmp(x, y);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering Compare(const Hyperreal& a, const Hyperreal& b) { return a <=> b; }

std::string Hyperreal::ToString() const {
  if (IsZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const Rational& c = coefficients_[k];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << "*";
    out << "e";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

namespace {

class TermReader {
 public:
  explicit TermReader(std::string_view text) : text_(text) {}

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  bool Consume(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string_view Digits() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  // Unsigned rational "p" or "p/q"; empty result when no digits follow.
  std::optional<Rational> UnsignedRational() {
    std::string_view num = Digits();
    if (num.empty()) return std::nullopt;
    std::string literal(num);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::string_view den = Digits();
      if (den.empty()) Fail("missing denominator");
      literal += "/" + std::string(den);
    }
    return ParseRational(literal);
  }
  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument("hyperreal '" + std::string(text_) + "': " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Hyperreal Hyperreal::Parse(std::string_view text, int degree_bound) {
  TermReader reader(text);
  std::vector<Rational> coefficients;
  bool first = true;
  if (reader.AtEnd()) reader.Fail("empty");
  while (!reader.AtEnd()) {
    int sign = 1;
    if (!first) {
      if (reader.Consume('+')) {
      } else if (reader.Consume('-')) {
        sign = -1;
      } else {
        reader.Fail("expected '+' or '-'");
      }
    }
    while (reader.Consume('-')) sign = -sign;
    first = false;
    Rational coefficient(1);
    int power = 0;
    auto literal = reader.UnsignedRational();
    bool has_e = false;
    if (literal) {
      coefficient = *literal;
      if (reader.Consume('*')) {
        if (!reader.Consume('e')) reader.Fail("expected 'e' after '*'");
        has_e = true;
      }
    } else if (reader.Consume('e')) {
      has_e = true;
    } else {
      reader.Fail("expected a term");
    }
    if (has_e) {
      power = 1;
      if (reader.Consume('^')) {
        std::string_view digits = reader.Digits();
        if (digits.empty() || digits.size() > 6) reader.Fail("bad exponent");
        power = std::stoi(std::string(digits));
      }
    }
    if (static_cast<std::size_t>(power) >= coefficients.size()) {
      if (power > degree_bound) {
        throw DegreeOverflow("parsed term of degree " + std::to_string(power) +
                             " exceeds degree bound " + std::to_string(degree_bound));
      }
      coefficients.resize(static_cast<std::size_t>(power) + 1);
    }
    coefficients[static_cast<std::size_t>(power)] += sign * coefficient;
  }
  return FromCoefficients(std::move(coefficients), degree_bound);
}

bool InfinitelyGreater(const Hyperreal& x, const Hyperreal& y) {
  if (x.Sign() < 0 || y.Sign() < 0) {
    throw NegativeInput("infinitely-greater test needs nonnegative arguments");
  }
  if (x.IsZero()) return false;
  if (y.IsZero()) return true;
  return *x.LeadingDegree() < *y.LeadingDegree();
}

bool RatioStandardPartIsZero(const Hyperreal& numerator, const Hyperreal& denominator) {
  if (denominator.IsZero()) throw ZeroDenominator("ratio with zero denominator");
  if (denominator.Sign() < 0 || numerator.Sign() < 0) {
    throw NegativeInput("ratio test needs a nonnegative numerator and positive denominator");
  }
  if (numerator.IsZero()) return true;
  return *numerator.LeadingDegree() > *denominator.LeadingDegree();
}

}  // namespace prudens
