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

#ifndef BFM_RATIONAL_H_
#define BFM_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace bfm {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

// Exact rational number, always in lowest terms with a positive denominator.
// Values whose numerator and denominator fit in int64 are stored inline;
// anything larger lives in a shared immutable GMP rational.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value)  // NOLINT
      : Rational(FromParts(static_cast<Int128>(value), 1)) {}
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  // Accepts "p/q" or "p" with an optional leading minus sign.
  static Rational Parse(std::string_view text);

  mpq_class ToMpq() const;
  double ToDouble() const;
  // Always "p/q", including integers ("3/1").
  std::string ToString() const;
  // Rounded half away from zero to `places` digits after the point.
  std::string ToDecimal(int places) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_small() const { return big_ == nullptr; }
  // Only meaningful when is_small().
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  std::size_t Hash() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  // Throws Error(kInvalidArgument) on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational FromParts(Int128 num, Int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}
inline Rational Abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.Hash(); }
};

}  // namespace bfm

#endif  // BFM_RATIONAL_H_
