#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypergen {

using Integer = mpz_class;

/// Exact signed rational backed by GMP. Always canonical: lowest terms with a
/// positive denominator. Division by zero throws DomainError.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value);  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p", "-p" or "p/q" with decimal integers. Anything else,
  /// including decimal points and exponents, throws DomainError.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double (every finite double is a dyadic rational).
  static Rational from_double(double value);

  Integer numerator() const;
  Integer denominator() const;

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const;

  double to_double() const;
  /// "p" when the denominator is one, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

/// Integer power; negative exponents invert the base. 0^0 == 1.
Rational pow(const Rational& base, std::int64_t exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace hypergen
