#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypergen/errors.hpp"
#include "hypergen/rational.hpp"

namespace hypergen {

using ComplexF = std::complex<double>;

/// Urn model: `population` balls of which `white` are white; `sample` are
/// drawn without replacement. Only obtainable through make_params, so every
/// instance satisfies 0 <= white <= population and 0 <= sample <= population.
class HypergeomParams {
 public:
  std::int64_t population() const { return population_; }
  std::int64_t white() const { return white_; }
  std::int64_t black() const { return population_ - white_; }
  std::int64_t sample() const { return sample_; }

  friend bool operator==(const HypergeomParams&, const HypergeomParams&) = default;
  friend HypergeomParams make_params(std::int64_t, std::int64_t, std::int64_t);

  std::string to_string() const;

 private:
  HypergeomParams(std::int64_t population, std::int64_t white, std::int64_t sample)
      : population_(population), white_(white), sample_(sample) {}

  std::int64_t population_;
  std::int64_t white_;
  std::int64_t sample_;
};

/// Validates (N, K, n). Throws DomainError on N < 0, K outside [0, N] or n
/// outside [0, N].
HypergeomParams make_params(std::int64_t population, std::int64_t white, std::int64_t sample);

struct SupportRange {
  std::int64_t lo;
  std::int64_t hi;

  friend bool operator==(const SupportRange&, const SupportRange&) = default;
};

/// [max{0, n+K-N}, min{n, K}].
SupportRange support(const HypergeomParams& p);

/// Urn seen from the balls left behind: (N, N-K, N-n). Counts black balls
/// among the N-n remaining; X = X' + n + K - N.
HypergeomParams complement(const HypergeomParams& p);

/// C(m, j) by the multiplicative formula. Zero for j < 0 or j > m; throws
/// DomainError for m < 0.
Integer binomial(std::int64_t m, std::int64_t j);

/// m! for m >= 0.
Integer factorial(std::int64_t m);

/// Dense polynomial over exact rationals, coefficient i multiplies z^i.
/// Trailing zero coefficients are dropped; the zero polynomial keeps a single
/// zero coefficient.
class PgfPolynomial {
 public:
  PgfPolynomial() : coeffs_{Rational(0)} {}
  explicit PgfPolynomial(std::vector<Rational> coeffs);

  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of z^power; zero beyond the stored range.
  Rational coeff(std::int64_t power) const;

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Index of the first nonzero coefficient (0 for the zero polynomial).
  std::int64_t lowest_power() const;
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_.front().is_zero(); }

  Rational evaluate(const Rational& z) const;
  double evaluate(double z) const;
  ComplexF evaluate(ComplexF z) const;

  /// r-th derivative, coefficient-wise.
  PgfPolynomial derivative(std::int64_t r) const;
  /// Multiplies by z^power (power >= 0).
  PgfPolynomial shifted(std::int64_t power) const;

  /// Sum of coefficients.
  Rational total() const;

  /// Space-separated coefficients, lowest power first.
  std::string to_string() const;

  friend bool operator==(const PgfPolynomial&, const PgfPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace hypergen
