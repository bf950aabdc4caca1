#include "hypergen/core.hpp"

#include <algorithm>

namespace hypergen {

HypergeomParams make_params(std::int64_t population, std::int64_t white, std::int64_t sample) {
  if (population < 0) throw DomainError("N must satisfy N ≥ 0");
  if (white < 0 || white > population) throw DomainError("K must satisfy 0 ≤ K ≤ N");
  if (sample < 0 || sample > population) throw DomainError("n must satisfy 0 ≤ n ≤ N");
  return HypergeomParams(population, white, sample);
}

std::string HypergeomParams::to_string() const {
  return "(N=" + std::to_string(population_) + ", K=" + std::to_string(white_) +
         ", n=" + std::to_string(sample_) + ")";
}

SupportRange support(const HypergeomParams& p) {
  const std::int64_t lo = std::max<std::int64_t>(0, p.sample() + p.white() - p.population());
  const std::int64_t hi = std::min(p.sample(), p.white());
  return {lo, hi};
}

HypergeomParams complement(const HypergeomParams& p) {
  return make_params(p.population(), p.black(), p.population() - p.sample());
}

Integer binomial(std::int64_t m, std::int64_t j) {
  if (m < 0) throw DomainError("binomial requires m ≥ 0");
  if (j < 0 || j > m) return 0;
  j = std::min(j, m - j);
  // After step i the running value is C(m-j+i, i), so the division is exact.
  Integer result = 1;
  for (std::int64_t i = 1; i <= j; ++i) {
    result *= static_cast<unsigned long>(m - j + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

Integer factorial(std::int64_t m) {
  if (m < 0) throw DomainError("factorial of a negative integer");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(m));
  return result;
}

PgfPolynomial::PgfPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Rational PgfPolynomial::coeff(std::int64_t power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

std::int64_t PgfPolynomial::lowest_power() const {
  const auto it = std::find_if(coeffs_.begin(), coeffs_.end(),
                               [](const Rational& c) { return !c.is_zero(); });
  return it == coeffs_.end() ? 0 : static_cast<std::int64_t>(it - coeffs_.begin());
}

Rational PgfPolynomial::evaluate(const Rational& z) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double PgfPolynomial::evaluate(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_double();
  return acc;
}

ComplexF PgfPolynomial::evaluate(ComplexF z) const {
  ComplexF acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_double();
  return acc;
}

PgfPolynomial PgfPolynomial::derivative(std::int64_t r) const {
  if (r < 0) throw DomainError("derivative order must be ≥ 0");
  if (r > degree()) return PgfPolynomial();
  std::vector<Rational> out;
  out.reserve(coeffs_.size() - static_cast<std::size_t>(r));
  for (std::int64_t k = r; k <= degree(); ++k) {
    Integer falling = 1;
    for (std::int64_t i = 0; i < r; ++i) falling *= static_cast<unsigned long>(k - i);
    out.push_back(coeffs_[static_cast<std::size_t>(k)] * Rational(falling));
  }
  return PgfPolynomial(std::move(out));
}

PgfPolynomial PgfPolynomial::shifted(std::int64_t power) const {
  if (power < 0) throw DomainError("shift must be ≥ 0");
  if (is_zero()) return *this;
  std::vector<Rational> out(static_cast<std::size_t>(power), Rational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return PgfPolynomial(std::move(out));
}

Rational PgfPolynomial::total() const {
  Rational sum;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

std::string PgfPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ' ';
    out += coeffs_[i].to_string();
  }
  return out;
}

}  // namespace hypergen
