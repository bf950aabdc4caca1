#pragma once

#include <cstdint>
#include <vector>

#include "hypergen/core.hpp"

namespace hypergen {

/// Which derivative rule produced a factorial moment.
enum class MomentPath {
  SeriesDerivative,   ///< n <= N-K: d^r 2F1 shifts all three parameters.
  PowerDerivative,    ///< n > N-K, r <= n+K-N: d^r (z^{c-1} 2F1) lowers c.
  Proposition1,       ///< n > N-K, r > n+K-N: lowered c would be nonpositive.
};

struct FactorialMoment {
  Rational value;
  MomentPath path;
};

/// E[X (X-1) ... (X-r+1)] = d^r G_X / dz^r at z = 1, evaluated with the
/// 2F1 derivative rules and Gauss summation. DomainError for r < 1.
FactorialMoment factorial_moment_detail(const HypergeomParams& p, std::int64_t r);
Rational factorial_moment(const HypergeomParams& p, std::int64_t r);

/// (n)_r (K)_r / (N)_r with falling factorials; 0 for r > min{n, K}.
Rational factorial_moment_closed_form(const HypergeomParams& p, std::int64_t r);

/// nK/N (0 for the empty urn).
Rational mean(const HypergeomParams& p);

/// n(N-n)K(N-K) / (N^2 (N-1)) (0 for N <= 1).
Rational variance(const HypergeomParams& p);

/// Stirling numbers of the second kind S(j, s) for 0 <= s <= j <= max_j,
/// as rows of the triangle.
std::vector<std::vector<Integer>> stirling2_table(std::int64_t max_j);

/// E[X^j] for j = 1..max_r from factorial moments and S(j, s).
std::vector<Rational> raw_moments(const HypergeomParams& p, std::int64_t max_r);

}  // namespace hypergen
