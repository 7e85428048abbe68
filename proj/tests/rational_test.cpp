// Copyright 2026 The qbagslf Authors
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

#include "qbagslf/rational.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <sstream>

namespace qbagslf {
namespace {

TEST(Rational, LowestTermsAndSign) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 6) + Rational(1, 2) + Rational(1, 3), Rational(1));
  EXPECT_EQ(Rational(7, 3) * Rational(3), Rational(7));
  EXPECT_EQ(Rational(2, 7) - Rational(3, 7), Rational(-1, 7));
  EXPECT_EQ(Rational(3, 4) / Rational(3, 8), Rational(2));
  EXPECT_EQ(abs(Rational(-5, 9)), Rational(5, 9));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OrderingAndFormatting) {
  EXPECT_LT(Rational(2, 7), Rational(3, 7));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(7, 3).str(), "7/3");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  std::ostringstream os;
  os << Rational(-2, 6);
  EXPECT_EQ(os.str(), "-1/3");
  EXPECT_DOUBLE_EQ(Rational(3, 7).to_double(), 3.0 / 7.0);
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  EXPECT_THROW(big * Rational(3), std::overflow_error);
}

TEST(Rational, FieldIdentitiesOnRandomValues) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 40);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      ASSERT_EQ((a / b) * b, a);
    }
    ASSERT_EQ(a < b, a.to_double() < b.to_double());
  }
}

}  // namespace
}  // namespace qbagslf
