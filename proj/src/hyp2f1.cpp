#include "hypergen/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypergen {
namespace {

Rational term_ratio(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t k) {
  return Rational(Integer(static_cast<long>(a + k)) * static_cast<long>(b + k),
                  Integer(static_cast<long>(c + k)) * static_cast<long>(k + 1));
}

// A nonzero derivative scale implies the shifted series still terminates; a
// zero scale means the derivative vanishes and the shifted parameters may not
// describe a polynomial at all.
ScaledSeries scaled_or_zero(const Rational& scale, std::int64_t a, std::int64_t b,
                            std::int64_t c) {
  if (scale.is_zero()) return {Rational(0), Terminating2F1::unit()};
  return {scale, Terminating2F1::make(a, b, c)};
}

}  // namespace

Terminating2F1 Terminating2F1::make(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a > 0 && b > 0) {
    throw UndefinedHypergeometric("2F1(" + std::to_string(a) + ", " + std::to_string(b) + "; " +
                                  std::to_string(c) + "; z) does not terminate");
  }
  if (c <= 0) {
    throw UndefinedHypergeometric("2F1(" + std::to_string(a) + ", " + std::to_string(b) + "; " +
                                  std::to_string(c) +
                                  "; z) is undefined for a nonpositive lower parameter");
  }
  return Terminating2F1(a, b, c);
}

std::int64_t Terminating2F1::termination_index() const {
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  if (a_ <= 0) m = std::min(m, -a_);
  if (b_ <= 0) m = std::min(m, -b_);
  return m + 1;
}

std::string Terminating2F1::to_string() const {
  return "2F1(" + std::to_string(a_) + ", " + std::to_string(b_) + "; " + std::to_string(c_) +
         ")";
}

Rational pochhammer(const Rational& a, std::int64_t k) {
  if (k < 0) throw DomainError("Pochhammer index must be ≥ 0");
  if (a.is_integer()) {
    const Integer num = a.numerator();
    if (num.fits_slong_p()) return Rational(pochhammer(static_cast<std::int64_t>(num.get_si()), k));
  }
  Rational result(1);
  Rational factor = a;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= factor;
    factor += Rational(1);
  }
  return result;
}

Integer pochhammer(std::int64_t a, std::int64_t k) {
  if (k < 0) throw DomainError("Pochhammer index must be ≥ 0");
  if (a <= 0 && a + k - 1 >= 0) return 0;
  Integer result = 1;
  for (std::int64_t i = 0; i < k; ++i) result *= static_cast<long>(a + i);
  return result;
}

std::vector<Rational> series_coefficients(const Terminating2F1& f) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(f.termination_index()));
  Rational term(1);
  out.push_back(term);
  for (std::int64_t k = 0; k < f.degree(); ++k) {
    term *= term_ratio(f.a(), f.b(), f.c(), k);
    out.push_back(term);
  }
  return out;
}

Rational eval_terminating_2f1(const Terminating2F1& f, const Rational& z) {
  Rational sum(1);
  Rational term(1);
  for (std::int64_t k = 0; k < f.degree(); ++k) {
    term *= term_ratio(f.a(), f.b(), f.c(), k) * z;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

double eval_terminating_2f1_float(const Terminating2F1& f, double z) {
  double sum = 1.0;
  double compensation = 0.0;
  double term = 1.0;
  for (std::int64_t k = 0; k < f.degree(); ++k) {
    term *= static_cast<double>(f.a() + k) * static_cast<double>(f.b() + k) /
            (static_cast<double>(f.c() + k) * static_cast<double>(k + 1)) * z;
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

Rational scaled_limit_2f1(std::int64_t a, std::int64_t b, std::int64_t m, const Rational& z) {
  if (m < 0) throw DomainError("scaled limit requires m ≥ 0");
  const Rational coefficient =
      Rational(pochhammer(a, m + 1) * pochhammer(b, m + 1), factorial(m + 1));
  if (coefficient.is_zero() || z.is_zero()) return 0;
  const auto g = Terminating2F1::make(a + m + 1, b + m + 1, m + 2);
  return coefficient * pow(z, m + 1) * eval_terminating_2f1(g, z);
}

ArgumentTransform transform_inverse_arg(const Terminating2F1& f, const Rational& z) {
  if (f.a() > 0) throw DomainError("inverse-argument transform needs a = -m ≤ 0");
  if (z.is_zero()) throw DomainError("inverse-argument transform needs z ≠ 0");
  const std::int64_t m = -f.a();
  const std::int64_t b = f.b();
  const std::int64_t c = f.c();
  auto g = Terminating2F1::make(-m, 1 - c - m, 1 - b - m);
  Rational prefactor =
      Rational(pochhammer(b, m), pochhammer(c, m)) * pow(-z, m);
  return {std::move(prefactor), g, Rational(1) / z};
}

ArgumentTransform transform_one_minus_z(const Terminating2F1& f, const Rational& z) {
  if (f.a() > 0) throw DomainError("1 - z transform needs a = -m ≤ 0");
  if (z == Rational(1)) throw DomainError("1 - z transform needs z ≠ 1");
  const std::int64_t m = -f.a();
  const std::int64_t b = f.b();
  const std::int64_t c = f.c();
  auto g = Terminating2F1::make(-m, c - b, 1 - b - m);
  const Rational one_minus_z = Rational(1) - z;
  Rational prefactor =
      Rational(pochhammer(b, m), pochhammer(c, m)) * pow(one_minus_z, m);
  return {std::move(prefactor), g, Rational(1) / one_minus_z};
}

ScaledSeries derivative_2f1(const Terminating2F1& f, std::int64_t r) {
  if (r < 0) throw DomainError("derivative order must be ≥ 0");
  const Rational scale(pochhammer(f.a(), r) * pochhammer(f.b(), r), pochhammer(f.c(), r));
  return scaled_or_zero(scale, f.a() + r, f.b() + r, f.c() + r);
}

ScaledPowerSeries derivative_z_power_2f1(std::int64_t a, std::int64_t b, std::int64_t c,
                                         std::int64_t r) {
  if (c < 1) throw DomainError("z-power derivative needs a positive lower parameter");
  if (r < 0) throw DomainError("derivative order must be ≥ 0");
  if (c - r <= 0) {
    throw UseProposition1("c - r = " + std::to_string(c - r) +
                          " is nonpositive; use prop1_derivative");
  }
  return {Rational(pochhammer(c - r, r)), c - r - 1, Terminating2F1::make(a, b, c - r)};
}

ScaledSeries prop1_derivative(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t r) {
  if (m < 1) throw DomainError("prop1_derivative needs m ≥ 1");
  if (r < m) throw DomainError("prop1_derivative needs r ≥ m; use derivative_z_power_2f1");
  const std::int64_t s = r - m + 1;
  const Rational scale(factorial(m - 1) * pochhammer(a, s) * pochhammer(b, s), factorial(s));
  return scaled_or_zero(scale, a + s, b + s, s + 1);
}

Rational gauss_value_at_one(const Terminating2F1& f) {
  // Chu-Vandermonde: 2F1(-m, b; c; 1) = (c-b)_m / (c)_m.
  const bool a_terminates = f.a() <= 0 && (f.b() > 0 || f.a() >= f.b());
  const std::int64_t m = a_terminates ? -f.a() : -f.b();
  const std::int64_t other = a_terminates ? f.b() : f.a();
  return Rational(pochhammer(f.c() - other, m), pochhammer(f.c(), m));
}

}  // namespace hypergen
