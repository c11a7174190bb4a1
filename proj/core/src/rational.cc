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

#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>

#include "bfm/error.h"

namespace bfm {
namespace {

constexpr Int128 kSmallMax = std::numeric_limits<std::int64_t>::max();

UInt128 Abs128(Int128 x) {
  return x < 0 ? static_cast<UInt128>(-(x + 1)) + 1
               : static_cast<UInt128>(x);
}

UInt128 Gcd128(UInt128 a, UInt128 b) {
  while (b != 0 && (a >> 64) != 0) {
    UInt128 t = a % b;
    a = b;
    b = t;
  }
  std::uint64_t x = static_cast<std::uint64_t>(a);
  std::uint64_t y = static_cast<std::uint64_t>(b);
  if ((b >> 64) == 0) return std::gcd(x, y);
  while (b != 0) {
    UInt128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class ToMpz(UInt128 m) {
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  return (hi << 64) + lo;
}

bool FitsSmall(const mpz_class& z) {
  return z.fits_slong_p() && z != std::numeric_limits<long>::min();
}

}  // namespace

Rational Rational::FromParts(Int128 num, Int128 den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (num == 0) return Rational();
  bool negative = (num < 0) != (den < 0);
  UInt128 n = Abs128(num);
  UInt128 d = Abs128(den);
  UInt128 g = Gcd128(n, d);
  n /= g;
  d /= g;
  if (n <= static_cast<UInt128>(kSmallMax) &&
      d <= static_cast<UInt128>(kSmallMax)) {
    Rational r;
    r.num_ = negative ? -static_cast<std::int64_t>(n)
                      : static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpz_class zn = ToMpz(n);
  mpz_class zd = ToMpz(d);
  if (negative) zn = -zn;
  return Rational(mpq_class(zn, zd));
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(FromParts(num, den)) {}

Rational::Rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  if (FitsSmall(q.get_num()) && FitsSmall(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

Rational Rational::Parse(std::string_view text) {
  auto fail = [&]() {
    return Error(ErrorCode::kParse,
                 "malformed rational '" + std::string(text) + "'");
  };
  std::size_t slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  auto valid = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  if (!valid(num_part, true) || !valid(den_part, false)) throw fail();
  mpz_class n(std::string(num_part), 10);
  mpz_class d(std::string(den_part), 10);
  if (d == 0) throw fail();
  return Rational(mpq_class(n, d));
}

mpq_class Rational::ToMpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)),
                   mpz_class(static_cast<long>(den_)));
}

double Rational::ToDouble() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::ToString() const {
  if (big_) {
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::ToDecimal(int places) const {
  if (places < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative decimal places");
  }
  mpq_class q = ToMpq();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class num = abs(q.get_num()) * scale * 2 + q.get_den();
  mpz_class den = q.get_den() * 2;
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string digits = rounded.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  std::string out = (q < 0 && rounded != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::size_t Rational::Hash() const {
  if (big_) return std::hash<std::string>()(ToString());
  std::size_t h = std::hash<std::int64_t>()(num_);
  return h ^ (std::hash<std::int64_t>()(den_) + 0x9e3779b97f4a7c15ULL +
              (h << 6) + (h >> 2));
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(a.ToMpq() + b.ToMpq());
  if (a.den_ == b.den_) return Rational::FromParts(
      static_cast<Int128>(a.num_) + b.num_, a.den_);
  return Rational::FromParts(
      static_cast<Int128>(a.num_) * b.den_ +
          static_cast<Int128>(b.num_) * a.den_,
      static_cast<Int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(a.ToMpq() - b.ToMpq());
  if (a.den_ == b.den_) return Rational::FromParts(
      static_cast<Int128>(a.num_) - b.num_, a.den_);
  return Rational::FromParts(
      static_cast<Int128>(a.num_) * b.den_ -
          static_cast<Int128>(b.num_) * a.den_,
      static_cast<Int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational(a.ToMpq() * b.ToMpq());
  return Rational::FromParts(static_cast<Int128>(a.num_) * b.num_,
                             static_cast<Int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  if (a.big_ || b.big_) return Rational(a.ToMpq() / b.ToMpq());
  return Rational::FromParts(static_cast<Int128>(a.num_) * b.den_,
                             static_cast<Int128>(a.den_) * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  if (a.big_ || b.big_) return false;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    int c = cmp(a.ToMpq(), b.ToMpq());
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  Int128 lhs = static_cast<Int128>(a.num_) * b.den_;
  Int128 rhs = static_cast<Int128>(b.num_) * a.den_;
  return lhs < rhs ? std::strong_ordering::less
                   : lhs > rhs ? std::strong_ordering::greater
                               : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace bfm
