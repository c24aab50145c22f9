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

#include "doctest.h"
#include "prudens/hyperreal.h"
#include "testkit.h"

using prudens::Hyperreal;
using prudens::Rational;

namespace {
Hyperreal H(const char* s, int bound = prudens::kDefaultDegreeBound) { return Hyperreal::Parse(s, bound); }
}  // namespace

TEST_SUITE("hyperreal") {
  TEST_CASE("addition") {
    CHECK(H("1 - e") + H("e") == H("1"));
    CHECK(H("0") + H("3/2*e^2") == H("3/2*e^2"));
    CHECK(H("1/2 + e") + H("1/2 + e") == H("1 + 2*e"));
    CHECK((H("e") - H("e")).IsZero());
    CHECK(H("e - e").coefficients().empty());
  }

  TEST_CASE("multiplication") {
    CHECK(H("e") * H("e") == H("e^2"));
    CHECK(H("1 - e") * H("1 + e") == H("1 - e^2"));
    CHECK(Hyperreal(2) * H("1/2 + e") == H("1 + 2*e"));
    CHECK(Rational(2) * H("1/2 + e") == H("1 + 2*e"));
  }

  TEST_CASE("products past the degree bound throw") {
    CHECK_THROWS_AS(H("e^2", 3) * H("e^2", 3), prudens::DegreeOverflow);
    CHECK_NOTHROW(H("e^2", 4) * H("e^2", 4));
    CHECK_THROWS_AS(H("e^5", 4), prudens::DegreeOverflow);
    // a cancelled top term is fine
    CHECK(H("e^3", 3) - H("e^3", 3) == Hyperreal(0));
  }

  TEST_CASE("order") {
    CHECK(H("1/2 - e") < H("1/2"));
    CHECK(H("e") > H("e^2"));
    CHECK(H("2*e") > H("e"));
    CHECK(H("e") < Hyperreal(Rational(1, 1000000)));
    CHECK(H("-e") < Hyperreal(0));
    CHECK(prudens::Compare(H("1 + e"), H("1 + e")) == std::strong_ordering::equal);
    CHECK(H("1 - 5*e^3").Sign() == 1);
    CHECK(H("-e^2 + 0").Sign() == -1);
  }

  TEST_CASE("standard part and leading degree") {
    CHECK(H("1/2 + 3*e").StandardPart() == Rational(1, 2));
    CHECK(H("e").StandardPart() == 0);
    CHECK(H("7/3").StandardPart() == Rational(7, 3));
    CHECK(*H("e^2 + e^3").LeadingDegree() == 2);
    CHECK(*H("1 - e").LeadingDegree() == 0);
    CHECK(!Hyperreal(0).LeadingDegree().has_value());
    CHECK(H("e^2 + e^3").LeadingCoefficient() == 1);
  }

  TEST_CASE("infinitely greater") {
    CHECK(prudens::InfinitelyGreater(H("e"), H("e^2")));
    CHECK_FALSE(prudens::InfinitelyGreater(H("2*e"), H("e")));
    CHECK_FALSE(prudens::InfinitelyGreater(Hyperreal(0), Hyperreal(0)));
    CHECK(prudens::InfinitelyGreater(H("e^3"), Hyperreal(0)));
    CHECK_THROWS_AS(prudens::InfinitelyGreater(H("-e"), H("e")), prudens::NegativeInput);
  }

  TEST_CASE("ratio standard part") {
    CHECK(prudens::RatioStandardPartIsZero(H("e^2"), H("e")));
    CHECK_FALSE(prudens::RatioStandardPartIsZero(H("e"), H("e")));
    CHECK(prudens::RatioStandardPartIsZero(Hyperreal(0), H("1 - e")));
    CHECK_THROWS_AS(prudens::RatioStandardPartIsZero(H("e"), Hyperreal(0)), prudens::ZeroDenominator);
  }

  TEST_CASE("text") {
    const Hyperreal x = Hyperreal::FromCoefficients({Rational(1, 2), -1, Rational(3, 2)});
    CHECK(x.ToString() == "1/2 - e + 3/2*e^2");
    CHECK(H("1/2 - e + 3/2*e^2") == x);
    CHECK(Hyperreal(0).ToString() == "0");
    CHECK(H("-e^3").ToString() == "-e^3");
    CHECK(H("1*e + -2*e^3 + e").ToString() == "2*e - 2*e^3");
    CHECK_THROWS_AS(H("1 +"), std::invalid_argument);
    CHECK_THROWS_AS(H("e^"), std::invalid_argument);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 500; ++k) {
      const Hyperreal y = testkit::RandomHyperreal(rng, 5);
      CHECK(H(y.ToString().c_str()) == y);
    }
  }

  TEST_CASE("ordered field laws") {
    const auto t = testkit::HyperrealFieldLaws(11, 2000);
    INFO(t.Summary());
    CHECK(t.ok());
  }

  TEST_CASE("standard part is a homomorphism and monotone") {
    const auto t = testkit::StandardPartLaws(12, 2000);
    INFO(t.Summary());
    CHECK(t.ok());
  }

  TEST_CASE("infinitely greater matches the ratio test and series division") {
    const auto t = testkit::InfinitelyGreaterRatio(13, 2000);
    INFO(t.Summary());
    CHECK(t.ok());
  }
}
