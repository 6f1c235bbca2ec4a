#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pricelab::exact {

/// Arbitrary-precision integer used for weights, valuations and thresholds.
using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

/// Exact rational number, always held in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(const Integer& value) : value_(value) {}                // NOLINT(implicit)
  Rational(const Integer& numerator, const Integer& denominator);
  Rational(long long numerator, long long denominator);

  /// Accepts "a/b" or "a" (optionally signed); rejects decimals and zero denominators.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Always "numerator/denominator", e.g. "2/1", "-5/6".
  std::string str() const;

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { Add, Subtract, Multiply, Divide };

/// Binary arithmetic by op tag; division by zero throws ArgumentError.
Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

}  // namespace pricelab::exact
