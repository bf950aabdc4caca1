#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypergen/core.hpp"
#include "hypergen/oracle.hpp"

namespace hypergen::verify {

/// Evaluation points for the branch checks. z = 0 and z = 1 have dedicated
/// unit tests.
std::array<Rational, 6> sample_points();

struct Failure {
  std::int64_t N;
  std::int64_t K;
  std::int64_t n;
  std::string check;
  std::string detail;

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// n_failed counts parameter triples with at least one failing check;
/// failures lists individual checks (capped by GridOptions::max_failures).
struct VerificationReport {
  std::int64_t n_checked = 0;
  std::int64_t n_failed = 0;
  std::vector<Failure> failures;

  bool ok() const { return n_failed == 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

void to_json(nlohmann::json& j, const Failure& f);
void from_json(const nlohmann::json& j, Failure& f);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

struct GridOptions {
  std::int64_t n_max = 30;
  unsigned jobs = 1;
  std::int64_t bound = oracle::kDefaultBound;
  std::size_t max_failures = 50;
  /// Test hook applied to every closed-form polynomial before comparison.
  std::function<void(const HypergeomParams&, PgfPolynomial&)> perturb;
};

/// Every 0 <= K <= N <= n_max, 0 <= n <= N. Per triple: oracle PGF vs the
/// closed-form expansion, every admitted branch at the sample points,
/// factorial moments for r = 1..min{n,K}+1, and the complement shift when
/// n >= N-K. The report is independent of `jobs`.
VerificationReport oracle_grid_check(const GridOptions& options);
VerificationReport oracle_grid_check(std::int64_t n_max);

}  // namespace hypergen::verify
