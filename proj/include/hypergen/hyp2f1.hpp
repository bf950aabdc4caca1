#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypergen/core.hpp"

namespace hypergen {

/// Gauss series 2F1(a, b; c; z) that is a polynomial in z.
///
/// Construction requires an upper parameter that is a nonpositive integer
/// and a positive lower parameter c. Series with c <= 0 are not representable;
/// their 1/Gamma(c)-scaled limits go through scaled_limit_2f1.
class Terminating2F1 {
 public:
  /// Throws UndefinedHypergeometric when neither a nor b is <= 0 or when
  /// c <= 0.
  static Terminating2F1 make(std::int64_t a, std::int64_t b, std::int64_t c);

  /// The constant series 2F1(0, 0; 1; z) == 1.
  static Terminating2F1 unit() { return Terminating2F1(0, 0, 1); }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }

  /// Number of (possibly) nonzero terms: 1 + min of -a, -b over the
  /// nonpositive upper parameters.
  std::int64_t termination_index() const;
  /// Polynomial degree bound, termination_index() - 1.
  std::int64_t degree() const { return termination_index() - 1; }

  std::string to_string() const;

  friend bool operator==(const Terminating2F1&, const Terminating2F1&) = default;

 private:
  Terminating2F1(std::int64_t a, std::int64_t b, std::int64_t c) : a_(a), b_(b), c_(c) {}

  std::int64_t a_;
  std::int64_t b_;
  std::int64_t c_;
};

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1. k < 0 throws
/// DomainError.
Rational pochhammer(const Rational& a, std::int64_t k);
Integer pochhammer(std::int64_t a, std::int64_t k);

/// Series coefficients t_k = (a)_k (b)_k / ((c)_k k!), k = 0..degree().
std::vector<Rational> series_coefficients(const Terminating2F1& f);

/// Exact series sum, ascending k with the running term ratio.
Rational eval_terminating_2f1(const Terminating2F1& f, const Rational& z);

/// Double-precision mirror of eval_terminating_2f1 with Neumaier-compensated
/// summation. Advisory only; no exact path consumes it.
double eval_terminating_2f1_float(const Terminating2F1& f, double z);

/// lim_{c -> -m} 2F1(a, b; c; z) / Gamma(c)
///   = (a)_{m+1} (b)_{m+1} / (m+1)! * z^{m+1} * 2F1(a+m+1, b+m+1; m+2; z).
/// Returns 0 outright when the Pochhammer prefactor or z vanishes; otherwise
/// throws UndefinedHypergeometric unless the right-hand series terminates.
Rational scaled_limit_2f1(std::int64_t a, std::int64_t b, std::int64_t m, const Rational& z);

/// 2F1(f; z) == prefactor * 2F1(g; w).
struct ArgumentTransform {
  Rational prefactor;
  Terminating2F1 g;
  Rational w;
};

/// 2F1(-m, b; c; z) = (b)_m/(c)_m (-z)^m 2F1(-m, 1-c-m; 1-b-m; 1/z), using
/// m = -f.a(). Requires f.a() <= 0 and z != 0 (DomainError); a nonpositive
/// 1-b-m throws UndefinedHypergeometric.
ArgumentTransform transform_inverse_arg(const Terminating2F1& f, const Rational& z);

/// 2F1(-m, b; c; z) = (b)_m/(c)_m (1-z)^m 2F1(-m, c-b; 1-b-m; 1/(1-z)).
/// Requires f.a() <= 0 and z != 1 (DomainError).
ArgumentTransform transform_one_minus_z(const Terminating2F1& f, const Rational& z);

/// d^r/dz^r applied to a series: scale * 2F1(g; z). When the derivative
/// vanishes identically, scale is 0 and g is the unit series.
struct ScaledSeries {
  Rational scale;
  Terminating2F1 g;
};

/// d^r/dz^r 2F1(a,b;c;z) = (a)_r (b)_r / (c)_r * 2F1(a+r, b+r; c+r; z).
ScaledSeries derivative_2f1(const Terminating2F1& f, std::int64_t r);

struct ScaledPowerSeries {
  Rational scale;
  std::int64_t power;
  Terminating2F1 g;
};

/// d^r/dz^r (z^{c-1} 2F1(a,b;c;z)) = (c-r)_r z^{c-r-1} 2F1(a,b;c-r;z).
/// Throws UseProposition1 when c - r <= 0 and DomainError for c < 1 or r < 0.
ScaledPowerSeries derivative_z_power_2f1(std::int64_t a, std::int64_t b, std::int64_t c,
                                         std::int64_t r);

/// d^r/dz^r (z^{m-1} 2F1(a,b;m;z)) for r >= m >= 1:
///   (m-1)! (a)_s (b)_s / s! * 2F1(a+s, b+s; s+1; z),  s = r-m+1.
/// Throws DomainError when m < 1 or r < m.
ScaledSeries prop1_derivative(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t r);

/// 2F1(f; 1) via Chu-Vandermonde, (c-b)_m / (c)_m with -m the terminating
/// upper parameter.
Rational gauss_value_at_one(const Terminating2F1& f);

}  // namespace hypergen
