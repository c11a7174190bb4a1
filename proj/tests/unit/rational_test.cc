// Copyright 2026 The Authors.
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

#include "bfm/rational.h"

#include <cstdint>
#include <limits>
#include <random>

#include <gmpxx.h>
#include <gtest/gtest.h>

#include "bfm/error.h"

namespace bfm {
namespace {

mpq_class Mpq(std::int64_t n, std::int64_t d) {
  mpq_class q(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
  q.canonicalize();
  return q;
}

TEST(RationalTest, ParsesAndPrints) {
  EXPECT_EQ(Rational::Parse("3").ToString(), "3/1");
  EXPECT_EQ(Rational::Parse("6/4").ToString(), "3/2");
  EXPECT_EQ(Rational::Parse("-2/4").ToString(), "-1/2");
  EXPECT_THROW(Rational::Parse("-2/-4"), Error);
  EXPECT_EQ(Rational::Parse("0/7").ToString(), "0/1");
  EXPECT_EQ(Rational::Parse("123456789012345678901234567890/10").ToString(),
            "12345678901234567890123456789/1");
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* text : {"", "1/", "/2", "a", "1/0", "1.5", "1/2/3", " 1"}) {
    try {
      Rational::Parse(text);
      ADD_FAILURE() << "accepted '" << text << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << text;
    }
  }
}

TEST(RationalTest, DecimalRoundsHalfAwayFromZero) {
  EXPECT_EQ(Rational(23, 5).ToDecimal(6), "4.600000");
  EXPECT_EQ(Rational(1, 3).ToDecimal(6), "0.333333");
  EXPECT_EQ(Rational(2, 3).ToDecimal(6), "0.666667");
  EXPECT_EQ(Rational(1, 8).ToDecimal(2), "0.13");
  EXPECT_EQ(Rational(-1, 8).ToDecimal(2), "-0.13");
  EXPECT_EQ(Rational(-1, 1000).ToDecimal(2), "0.00");
  EXPECT_EQ(Rational(7).ToDecimal(0), "7");
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(RationalTest, ExtremeIntegers) {
  const std::int64_t lo = std::numeric_limits<std::int64_t>::min();
  const std::int64_t hi = std::numeric_limits<std::int64_t>::max();
  Rational a(lo);
  EXPECT_EQ(a.ToMpq(), Mpq(lo, 1));
  EXPECT_EQ((-a).ToMpq(), -Mpq(lo, 1));
  Rational b(std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(b.ToString(), "18446744073709551615/1");
  EXPECT_EQ((Rational(hi) * Rational(hi)).ToMpq(), Mpq(hi, 1) * Mpq(hi, 1));
  EXPECT_EQ(Rational(lo, -1).ToMpq(), -Mpq(lo, 1));
}

TEST(RationalTest, SmallAndBigRepresentationsAgree) {
  const Rational big = Rational(std::numeric_limits<std::int64_t>::max()) *
                       Rational(4);
  const Rational back = big / Rational(std::numeric_limits<std::int64_t>::max());
  EXPECT_EQ(back, Rational(4));
  EXPECT_EQ(back.Hash(), Rational(4).Hash());
  EXPECT_TRUE(back.is_small());
}

// Random expression streams checked against GMP.
TEST(RationalPropertyTest, ArithmeticMatchesMpq) {
  std::mt19937_64 rng(17);
  auto draw = [&](int bits) {
    std::int64_t v = static_cast<std::int64_t>(rng() >> (64 - bits));
    return (rng() & 1) ? v : -v;
  };
  for (int trial = 0; trial < 4000; ++trial) {
    const int bits = 1 + static_cast<int>(rng() % 63);
    std::int64_t n1 = draw(bits), n2 = draw(bits);
    std::int64_t d1 = draw(bits), d2 = draw(bits);
    if (d1 == 0) d1 = 1;
    if (d2 == 0) d2 = 3;
    Rational a(n1, d1), b(n2, d2);
    mpq_class qa = Mpq(n1, d1), qb = Mpq(n2, d2);
    ASSERT_EQ(a.ToMpq(), qa);
    ASSERT_EQ((a + b).ToMpq(), mpq_class(qa + qb));
    ASSERT_EQ((a - b).ToMpq(), mpq_class(qa - qb));
    Rational p = a * b;
    ASSERT_EQ(p.ToMpq(), mpq_class(qa * qb));
    // Chains push into the big path and back.
    ASSERT_EQ((p * p - a * a * b * b).sign(), 0);
    if (b.sign() != 0) ASSERT_EQ((a / b).ToMpq(), mpq_class(qa / qb));
    ASSERT_EQ(a < b, qa < qb);
    ASSERT_EQ(a == b, qa == qb);
    ASSERT_EQ(Rational::Parse(a.ToString()), a);
    ASSERT_EQ(a.sign(), sgn(qa));
  }
}

TEST(RationalPropertyTest, EqualValuesHashEqual) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::int64_t n = static_cast<std::int64_t>(rng() % 1000) - 500;
    std::int64_t d = static_cast<std::int64_t>(rng() % 999) + 1;
    std::int64_t k = static_cast<std::int64_t>(rng() % 1000000) + 1;
    Rational a(n, d);
    Rational b = Rational(n * k, d * k);
    Rational c = (a * Rational(std::numeric_limits<std::int64_t>::max())) /
                 Rational(std::numeric_limits<std::int64_t>::max());
    ASSERT_EQ(a, b);
    ASSERT_EQ(a, c);
    ASSERT_EQ(a.Hash(), b.Hash());
    ASSERT_EQ(a.Hash(), c.Hash());
  }
}

}  // namespace
}  // namespace bfm
