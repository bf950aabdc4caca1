#include "hypergen/oracle.hpp"

namespace hypergen::oracle {
namespace {

void check_bound(const HypergeomParams& p, std::int64_t bound) {
  if (p.population() > bound) {
    throw BoundExceeded("oracle bound is N ≤ " + std::to_string(bound) + ", got " +
                        p.to_string());
  }
}

}  // namespace

PgfPolynomial oracle_pgf(const HypergeomParams& p, std::int64_t bound) {
  check_bound(p, bound);
  const Integer total = binomial(p.population(), p.sample());
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(p.sample()) + 1);
  for (std::int64_t k = 0; k <= p.sample(); ++k) {
    coeffs.emplace_back(binomial(p.white(), k) * binomial(p.black(), p.sample() - k), total);
  }
  return PgfPolynomial(std::move(coeffs));
}

Rational oracle_factorial_moment(const HypergeomParams& p, std::int64_t r, std::int64_t bound) {
  if (r < 1) throw DomainError("factorial moment order must be ≥ 1");
  const auto pgf = oracle_pgf(p, bound);
  Rational sum;
  for (std::int64_t k = 0; k <= pgf.degree(); ++k) {
    Integer falling = 1;
    for (std::int64_t i = 0; i < r; ++i) falling *= static_cast<long>(k - i);
    sum += Rational(falling) * pgf.coeff(k);
  }
  return sum;
}

}  // namespace hypergen::oracle
