// Copyright 2026 The pingpong-ghz Authors
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

#include "pingpong/exact.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace pingpong {
namespace {

ExactReal make(long long pn, long long pd, long long qn, long long qd) {
    return ExactReal(Rational(pn, pd), Rational(qn, qd));
}

TEST(ExactReal, AddIsComponentwise) {
    EXPECT_EQ(ExactReal::fraction(1, 2) + ExactReal::fraction(1, 2), ExactReal(1));
    EXPECT_EQ(ExactReal::sqrt2_times(1, 2) + ExactReal::sqrt2_times(1, 2), ExactReal::sqrt2_times(1, 1));
    EXPECT_TRUE(add(ExactReal::inv_sqrt2(), -ExactReal::inv_sqrt2()).is_zero());
}

TEST(ExactReal, MulFollowsFieldLaw) {
    EXPECT_EQ(mul(ExactReal::inv_sqrt2(), ExactReal::inv_sqrt2()), ExactReal::fraction(1, 2));
    EXPECT_EQ(mul(ExactReal::inv_sqrt2(), ExactReal::fraction(1, 2)), ExactReal::sqrt2_times(1, 4));
    ExactReal x = make(3, 7, -2, 5);
    EXPECT_EQ(mul(ExactReal(1), x), x);
}

TEST(ExactReal, InverseViaConjugate) {
    EXPECT_EQ(inv(ExactReal(2)), ExactReal::fraction(1, 2));
    EXPECT_EQ(inv(ExactReal::inv_sqrt2()), ExactReal::sqrt2_times(1, 1));
    EXPECT_EQ(inv(make(1, 1, 1, 1)), make(-1, 1, 1, 1));
    EXPECT_THROW(inv(ExactReal()), std::domain_error);
    EXPECT_THROW(ExactReal(1) / ExactReal(), std::domain_error);
}

TEST(ExactReal, Rationality) {
    EXPECT_TRUE(is_rational(ExactReal::fraction(1, 4)));
    EXPECT_FALSE(is_rational(ExactReal::inv_sqrt2()));
    EXPECT_TRUE(is_rational(ExactReal()));
}

TEST(ExactReal, ToFloat) {
    EXPECT_EQ(to_float(ExactReal::fraction(1, 2)), 0.5);
    EXPECT_EQ(to_float(ExactReal::fraction(1, 4)), 0.25);
    double r = to_float(ExactReal::inv_sqrt2());
    EXPECT_LE(std::abs(r - 0.7071067811865476), std::nextafter(0.7071067811865476, 1.0) - 0.7071067811865476);
}

TEST(ExactReal, RepresentationIsCanonical) {
    ExactReal a = make(2, 4, 3, 6);
    EXPECT_EQ(a.p(), Rational(1, 2));
    EXPECT_EQ(a.q(), Rational(1, 2));
    EXPECT_EQ(denominator(make(-3, 6, 0, 1).p()), 2);
    EXPECT_NE(ExactReal(1), ExactReal::sqrt2_times(1, 1));
}

TEST(ExactReal, SignAndOrdering) {
    EXPECT_EQ(make(-1, 1, 1, 1).sign(), 1);    // -1 + sqrt 2
    EXPECT_EQ(make(3, 2, -1, 1).sign(), 1);    // 1.5 - 1.414
    EXPECT_EQ(make(7, 5, -1, 1).sign(), -1);   // 1.4 - 1.414
    EXPECT_EQ(ExactReal().sign(), 0);
    EXPECT_LT(ExactReal::fraction(7, 10), ExactReal::inv_sqrt2());
    EXPECT_GT(ExactReal::fraction(71, 100), ExactReal::inv_sqrt2());
}

TEST(ExactReal, Rendering) {
    EXPECT_EQ(ExactReal::fraction(1, 2).to_string(), "1/2");
    EXPECT_EQ(ExactReal::sqrt2_times(1, 4).to_string(), "√2/4");
    EXPECT_EQ(ExactReal::sqrt2_times(-3, 2).to_string(), "-3√2/2");
    EXPECT_EQ(make(-1, 1, 1, 1).to_string(), "-1+√2");
    EXPECT_EQ(make(1, 2, -1, 4).to_string(), "1/2-√2/4");
    EXPECT_EQ(ExactReal().to_string(), "0");
}

TEST(ExactReal, FieldSquareRoot) {
    EXPECT_EQ(field_sqrt(ExactReal::fraction(1, 2)), ExactReal::inv_sqrt2());
    EXPECT_EQ(field_sqrt(ExactReal::fraction(9, 4)), ExactReal::fraction(3, 2));
    EXPECT_EQ(field_sqrt(make(3, 1, 2, 1)), make(1, 1, 1, 1));  // (1 + sqrt 2)^2
    EXPECT_EQ(field_sqrt(make(3, 1, -2, 1)), make(-1, 1, 1, 1));
    EXPECT_FALSE(field_sqrt(ExactReal(3)).has_value());
    EXPECT_FALSE(field_sqrt(ExactReal(-1)).has_value());
    EXPECT_EQ(field_sqrt(ExactReal()), ExactReal());
}

TEST(ExactReal, DecimalRendering) {
    EXPECT_EQ(rational_to_decimal(Rational(1, 8)), "0.125");
    EXPECT_EQ(rational_to_decimal(Rational(-1, 4)), "-0.25");
    EXPECT_EQ(rational_to_decimal(Rational(3)), "3");
    EXPECT_EQ(rational_to_decimal(Rational(1, 3), 5), "0.33333...");
}

TEST(ExactReal, LargeNumeratorsStayExact) {
    ExactReal x = make(1, 3, 1, 7);
    ExactReal acc(1);
    for (int i = 0; i < 40; ++i) {
        acc *= x;
    }
    for (int i = 0; i < 40; ++i) {
        acc /= x;
    }
    EXPECT_EQ(acc, ExactReal(1));
}

class FieldAxioms : public ::testing::Test {
   protected:
    ExactReal random_value() {
        std::uniform_int_distribution<long long> num(-9, 9);
        std::uniform_int_distribution<long long> den(1, 9);
        return make(num(rng_), den(rng_), num(rng_), den(rng_));
    }
    std::mt19937_64 rng_{0x5eed};
};

TEST_F(FieldAxioms, HoldExactlyOnRandomValues) {
    for (int i = 0; i < 300; ++i) {
        ExactReal a = random_value();
        ExactReal b = random_value();
        ExactReal c = random_value();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) {
            EXPECT_EQ(a * inv(a), ExactReal(1));
        }
        EXPECT_EQ(a == b, a.p() == b.p() && a.q() == b.q());
        double da = to_float(a);
        double db = to_float(b);
        if (std::abs(da - db) > 1e-9) {
            EXPECT_EQ(a < b, da < db);
        }
        if (auto root = field_sqrt(a * a)) {
            EXPECT_EQ(*root * *root, a * a);
            EXPECT_GE(root->sign(), 0);
        } else {
            ADD_FAILURE() << "square of " << a << " has no root";
        }
    }
}

}  // namespace
}  // namespace pingpong
