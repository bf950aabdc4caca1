#pragma once

#include <cstdint>

#include "hypergen/core.hpp"

// Brute-force reference built from binomials only. Nothing here may depend on
// the 2F1 engine or the closed forms it checks.

namespace hypergen::oracle {

inline constexpr std::int64_t kDefaultBound = 64;

/// Coefficient k is C(K,k) C(N-K,n-k) / C(N,n). Throws BoundExceeded when
/// N > bound.
PgfPolynomial oracle_pgf(const HypergeomParams& p, std::int64_t bound = kDefaultBound);

/// sum_k k(k-1)...(k-r+1) P(X=k). DomainError for r < 1.
Rational oracle_factorial_moment(const HypergeomParams& p, std::int64_t r,
                                 std::int64_t bound = kDefaultBound);

}  // namespace hypergen::oracle
