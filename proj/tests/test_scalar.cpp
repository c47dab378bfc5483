// Copyright 2026 The Polyconvex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polyconvex/scalar.hpp"

using polyconvex::bigint;
using polyconvex::scalar;

TEST_CASE("canonical form") {
    scalar s{bigint(2), bigint(4)};
    CHECK(s.numerator() == 1);
    CHECK(s.denominator() == 2);

    scalar neg(bigint(3), bigint(-6));
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);

    scalar zero(bigint(0), bigint(-7));
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);

    CHECK_THROWS_AS(scalar(bigint(1), bigint(0)), std::domain_error);
}

TEST_CASE("exact arithmetic") {
    scalar third(bigint(1), bigint(3));
    CHECK(third + third + third == scalar(1));
    CHECK(scalar(1) / scalar(3) == third);
    CHECK(third * scalar(3) == scalar(1));
    CHECK(scalar(1, 2) - scalar(1, 3) == scalar(1, 6));
    CHECK((-third).sign() == -1);
    CHECK(scalar(0).sign() == 0);
    CHECK(third.sign() == 1);
    CHECK_THROWS_AS(scalar(1) / scalar(0), std::domain_error);
}

TEST_CASE("ordering") {
    CHECK(scalar(1, 3) < scalar(1, 2));
    CHECK(scalar(-1, 2) < scalar(-1, 3));
    CHECK(scalar(2, 4) == scalar(1, 2));
    CHECK(scalar(7) > scalar(13, 2));
}

TEST_CASE("parse accepts integers, decimals, and fractions") {
    CHECK(scalar::parse("17") == scalar(17));
    CHECK(scalar::parse("-3") == scalar(-3));
    CHECK(scalar::parse("+5") == scalar(5));
    CHECK(scalar::parse("2.5") == scalar(5, 2));
    CHECK(scalar::parse("-0.125") == scalar(-1, 8));
    CHECK(scalar::parse(".5") == scalar(1, 2));
    CHECK(scalar::parse("3.") == scalar(3));
    CHECK(scalar::parse("3/4") == scalar(3, 4));
    CHECK(scalar::parse("-7/12") == scalar(-7, 12));
    CHECK(scalar::parse("0.1") == scalar(1, 10));  // exact, unlike any float
}

TEST_CASE("parse rejects junk") {
    CHECK_FALSE(scalar::parse("").has_value());
    CHECK_FALSE(scalar::parse("x").has_value());
    CHECK_FALSE(scalar::parse("1x").has_value());
    CHECK_FALSE(scalar::parse("1/0").has_value());
    CHECK_FALSE(scalar::parse("1/-2").has_value());
    CHECK_FALSE(scalar::parse("1.2.3").has_value());
    CHECK_FALSE(scalar::parse("-").has_value());
    CHECK_FALSE(scalar::parse(".").has_value());
    CHECK_FALSE(scalar::parse("1e3").has_value());
}

TEST_CASE("str/parse round trip on random rationals") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        auto num = static_cast<std::int64_t>(rng() % 20001) - 10000;
        auto den = static_cast<std::int64_t>(rng() % 999) + 1;
        scalar s{bigint(num), bigint(den)};
        auto back = scalar::parse(s.str());
        REQUIRE(back.has_value());
        CHECK(*back == s);
    }
}

TEST_CASE("huge values stay exact") {
    scalar big = scalar::parse("123456789012345678901234567890").value();
    scalar tiny(bigint(1), bigint("987654321098765432109876543210"));
    CHECK(big * tiny == scalar(bigint("123456789012345678901234567890"),
                               bigint("987654321098765432109876543210")));
    CHECK((big - big).is_zero());
}
