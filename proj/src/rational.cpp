#include "hypergen/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "hypergen/errors.hpp"

namespace hypergen {
namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text)) {
      throw DomainError("not an exact rational: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' ||
      den.front() == '+') {
    throw DomainError("not an exact rational: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite double has no rational value");
  return Rational(mpq_class(value));
}

Integer Rational::numerator() const { return value_.get_num(); }
Integer Rational::denominator() const { return value_.get_den(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

double Rational::to_double() const { return value_.get_d(); }

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace hypergen
