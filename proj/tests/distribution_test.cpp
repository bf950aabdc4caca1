#include "hypergen/distribution.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "test_support.hpp"

namespace hypergen {
namespace {

Rational q(const char* text) { return Rational::parse(text); }

const std::vector<Rational>& z_grid() {
  static const std::vector<Rational> grid = {q("-2"), q("-1/2"), q("1/3"), q("1"), q("2"),
                                             q("7/5")};
  return grid;
}

TEST(Pmf, Examples) {
  const auto p = make_params(4, 2, 3);
  EXPECT_EQ(pmf(p, 1), q("1/2"));
  EXPECT_EQ(pmf(p, 2), q("1/2"));
  EXPECT_EQ(pmf(p, 0), Rational(0));
  EXPECT_EQ(pmf(p, 3), Rational(0));
  EXPECT_EQ(pmf(p, -1), Rational(0));
  EXPECT_EQ(pmf(make_params(5, 5, 3), 3), Rational(1));
  EXPECT_EQ(pmf(make_params(0, 0, 0), 0), Rational(1));
}

TEST(PgfPolynomial, Examples) {
  EXPECT_EQ(pgf_polynomial(make_params(4, 2, 3)).to_string(), "0 1/2 1/2");
  EXPECT_EQ(pgf_polynomial(make_params(9, 4, 0)).to_string(), "1");
  // C(2,k) C(3,2-k) / C(5,2) = 3/10, 6/10, 1/10
  const auto p = pgf_polynomial(make_params(5, 2, 2));
  EXPECT_EQ(p.to_string(), "3/10 3/5 1/10");
  EXPECT_EQ(p.total(), Rational(1));
  EXPECT_EQ(canonical_branch(make_params(5, 2, 2)), BranchTag::ThmA);
  EXPECT_EQ(canonical_branch(make_params(4, 2, 3)), BranchTag::ThmB);
}

TEST(PgfPolynomial, CoefficientsArePmfOnGrid) {
  for (const auto& p : testing::param_grid(18)) {
    const auto poly = pgf_polynomial(p);
    const auto range = support(p);
    ASSERT_EQ(poly.degree(), range.hi) << p.to_string();
    ASSERT_EQ(poly.lowest_power(), range.lo) << p.to_string();
    EXPECT_EQ(poly.total(), Rational(1));
    for (std::int64_t k = 0; k <= range.hi; ++k) {
      ASSERT_EQ(poly.coeff(k), pmf(p, k)) << p.to_string() << " k=" << k;
      ASSERT_GE(poly.coeff(k), Rational(0));
      ASSERT_LE(poly.coeff(k), Rational(1));
    }
  }
}

TEST(PgfPolynomial, DegenerateUrns) {
  EXPECT_EQ(pgf_polynomial(make_params(0, 0, 0)).to_string(), "1");
  EXPECT_EQ(pgf_polynomial(make_params(6, 0, 4)).to_string(), "1");
  EXPECT_EQ(pgf_polynomial(make_params(6, 6, 4)).to_string(), "0 0 0 0 1");
  EXPECT_EQ(pgf_polynomial(make_params(6, 2, 6)).to_string(), "0 0 1");
}

TEST(BranchOverlap, ShiftedAndUnshiftedFormsAgreeAtBoundary) {
  for (std::int64_t N = 0; N <= 16; ++N) {
    for (std::int64_t K = 0; K <= N; ++K) {
      const auto p = make_params(N, K, N - K);
      const auto a = branch_form(p, BranchTag::ThmA);
      const auto b = branch_form(p, BranchTag::ThmB);
      // Both collapse to n!K!/N! 2F1(-n, -K; 1; z).
      EXPECT_EQ(a.prefactor, b.prefactor);
      EXPECT_EQ(a.series.c(), 1);
      EXPECT_EQ(b.series.c(), 1);
      EXPECT_EQ(pgf_polynomial_via(p, BranchTag::ThmA), pgf_polynomial_via(p, BranchTag::ThmB));
      for (const auto& z : z_grid()) {
        EXPECT_EQ(pgf_eval_branch(p, z, BranchTag::ThmA), pgf_eval_branch(p, z, BranchTag::ThmB));
      }
    }
  }
}

TEST(ComplementIdentity, ShiftedComplementPgf) {
  for (const auto& p : testing::param_grid(16)) {
    if (p.sample() < p.black()) continue;
    const auto shift = p.sample() + p.white() - p.population();
    const auto complement_pgf = pgf_polynomial(complement(p));
    const auto pgf = pgf_polynomial(p);
    for (std::int64_t k = 0; k <= pgf.degree(); ++k) {
      ASSERT_EQ(pgf.coeff(k), complement_pgf.coeff(k - shift)) << p.to_string();
    }
  }
}

TEST(LegacyPrefactor, ExamplesAndFailureSurface) {
  EXPECT_EQ(legacy_pgf_prefactor(make_params(4, 2, 2)), q("1/6"));
  EXPECT_THROW(legacy_pgf_prefactor(make_params(4, 2, 3)), IndeterminateLegacyFormula);
  EXPECT_EQ(legacy_pgf_prefactor(make_params(4, 0, 4)), Rational(1));
  for (const auto& p : testing::param_grid(12)) {
    if (p.sample() >= p.black() + 1) {
      EXPECT_THROW(legacy_pgf_prefactor(p), IndeterminateLegacyFormula) << p.to_string();
    } else {
      EXPECT_EQ(legacy_pgf_prefactor(p), branch_form(p, BranchTag::ThmA).prefactor);
    }
  }
}

TEST(PgfEval, Examples) {
  const auto p = make_params(4, 2, 3);
  EXPECT_EQ(pgf_eval(p, Rational(1)), Rational(1));
  EXPECT_EQ(pgf_eval(p, Rational(2)), Rational(3));
  EXPECT_EQ(pgf_eval(p, Rational(0)), pmf(p, 0));
  // n + K = N: z^0 at z = 0 is 1.
  const auto edge = make_params(4, 2, 2);
  EXPECT_EQ(pgf_eval(edge, Rational(0)), pmf(edge, 0));
  EXPECT_EQ(pgf_eval_branch(edge, Rational(0), BranchTag::ThmB), pmf(edge, 0));
}

TEST(PgfEval, AgreesWithPolynomialOnGrid) {
  for (const auto& p : testing::param_grid(14)) {
    const auto poly = pgf_polynomial(p);
    EXPECT_EQ(pgf_eval(p, Rational(1)), Rational(1));
    EXPECT_EQ(pgf_eval(p, Rational(0)), pmf(p, 0));
    for (const auto& z : z_grid()) ASSERT_EQ(pgf_eval(p, z), poly.evaluate(z)) << p.to_string();
  }
}

TEST(Regions, Examples) {
  using enum BranchTag;
  EXPECT_EQ(classify_regions(make_params(4, 2, 2)),
            (std::vector<BranchTag>{ThmA, ThmB, Cor1a, Cor1b, Cor2a, Cor2b}));
  const auto low = classify_regions(make_params(4, 1, 1));
  EXPECT_NE(std::find(low.begin(), low.end(), ThmA), low.end());
  EXPECT_EQ(std::find(low.begin(), low.end(), ThmB), low.end());
  const auto high = classify_regions(make_params(4, 3, 2));
  EXPECT_NE(std::find(high.begin(), high.end(), ThmB), high.end());
  EXPECT_EQ(std::find(high.begin(), high.end(), ThmA), high.end());
  EXPECT_EQ(classify_regions(make_params(0, 0, 0)).size(), 6u);
}

TEST(Regions, EveryTripleIsCoveredByBothFamilies) {
  for (const auto& p : testing::param_grid(12)) {
    EXPECT_TRUE(branch_admits(p, BranchTag::ThmA) || branch_admits(p, BranchTag::ThmB));
    const bool cor1 = branch_admits(p, BranchTag::Cor1a) || branch_admits(p, BranchTag::Cor1b);
    const bool cor2 = branch_admits(p, BranchTag::Cor2a) || branch_admits(p, BranchTag::Cor2b);
    EXPECT_TRUE(cor1 || cor2) << p.to_string();
    // n = K puts (n, K) on the ascending diagonal: Cor1b and Cor2a overlap.
    if (p.sample() == p.white()) {
      EXPECT_TRUE(branch_admits(p, BranchTag::Cor1b) && branch_admits(p, BranchTag::Cor2a));
    }
  }
}

TEST(BranchNames, RoundTrip) {
  for (auto tag : kAllBranches) EXPECT_EQ(parse_branch(branch_name(tag)), tag);
  EXPECT_FALSE(parse_branch("Thm").has_value());
}

TEST(AlternativeForms, Examples) {
  const auto p = make_params(4, 2, 2);
  EXPECT_EQ(pgf_eval_corollary(p, Rational(2), BranchTag::Cor1b), pgf_eval(p, Rational(2)));
  EXPECT_EQ(pgf_eval_corollary(p, Rational(3), BranchTag::Cor1a), pgf_eval(p, Rational(3)));
  EXPECT_THROW(pgf_eval_corollary(make_params(4, 3, 1), Rational(0), BranchTag::Cor2a),
               DomainError);
  EXPECT_THROW(pgf_eval_corollary(make_params(4, 1, 3), Rational(2), BranchTag::Cor2a),
               DomainError);
  EXPECT_THROW(pgf_eval_corollary(p, Rational(2), BranchTag::ThmA), DomainError);
}

TEST(AlternativeForms, AllAdmittedBranchesAgreeOnGrid) {
  for (const auto& p : testing::param_grid(14)) {
    const auto poly = pgf_polynomial(p);
    for (auto tag : classify_regions(p)) {
      ASSERT_EQ(pgf_polynomial_via(p, tag), poly) << p.to_string() << " " << branch_name(tag);
      for (const auto& z : z_grid()) {
        ASSERT_EQ(pgf_eval_branch(p, z, tag), poly.evaluate(z))
            << p.to_string() << " " << branch_name(tag) << " z=" << z;
      }
    }
    for (auto tag : kAllBranches) {
      if (!branch_admits(p, tag)) {
        EXPECT_THROW(branch_form(p, tag), DomainError);
      }
    }
  }
}

TEST(Mgf, Examples) {
  EXPECT_NEAR(mgf_eval(make_params(4, 2, 3), 0.0), 1.0, 1e-15);
  EXPECT_NEAR(mgf_eval(make_params(4, 2, 3), std::log(2.0)), 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(mgf_eval(make_params(7, 3, 0), 5.0), 1.0);
  EXPECT_THROW(mgf_eval(make_params(4, 2, 3), 1000.0), OverflowError);
  EXPECT_THROW(mgf_eval(make_params(4, 2, 3), std::nan("")), DomainError);
}

TEST(Cf, Examples) {
  const auto p = make_params(4, 2, 3);
  const auto one = cf_eval(p, 0.0);
  EXPECT_NEAR(one.real(), 1.0, 1e-15);
  EXPECT_NEAR(one.imag(), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cf_eval(p, std::numbers::pi)), 0.0, 1e-15);
  for (const auto& params : testing::param_grid(10)) {
    for (double t = -10.0; t <= 10.0; t += 0.37) {
      EXPECT_LE(std::abs(cf_eval(params, t)), 1.0 + 1e-12);
    }
  }
}

TEST(Cgf, Examples) {
  const auto p = make_params(4, 2, 3);
  EXPECT_NEAR(cgf_eval(p, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(cgf_eval(p, std::log(2.0)), std::log(3.0), 1e-12);
  EXPECT_DOUBLE_EQ(cgf_eval(make_params(7, 3, 0), -4.0), 0.0);
  // Stays finite where the MGF itself would overflow.
  EXPECT_NEAR(cgf_eval(p, 1000.0), 2000.0 + std::log(0.5), 1e-9);
  EXPECT_NEAR(cgf_eval(p, -1000.0), -1000.0 + std::log(0.5), 1e-9);
  for (const auto& params : testing::param_grid(10)) {
    for (double t : {-2.5, -0.3, 0.7, 2.0}) {
      EXPECT_NEAR(cgf_eval(params, t), std::log(mgf_eval(params, t)), 1e-12);
    }
  }
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre_case_pgf(1, Rational(0)), q("1/2"));
  EXPECT_EQ(legendre_case_pgf(1, Rational(3)), Rational(2));
  EXPECT_EQ(legendre_case_pgf(2, Rational(2)), pgf_eval(make_params(4, 2, 2), Rational(2)));
  EXPECT_THROW(legendre_case_pgf(2, Rational(1)), DomainError);
  EXPECT_THROW(legendre_case_pgf(0, Rational(2)), DomainError);
}

TEST(Legendre, MatchesBonnetRecurrence) {
  for (std::int64_t m = 1; m <= 10; ++m) {
    const Rational scale(factorial(m) * factorial(m), factorial(2 * m));
    for (const auto& z : {q("-2"), q("-1/2"), q("0"), q("1/3"), q("2"), q("7/5")}) {
      const auto x = (z + Rational(1)) / (z - Rational(1));
      const auto expected = scale * pow(z - Rational(1), m) * testing::legendre_bonnet(m, x);
      EXPECT_EQ(legendre_case_pgf(m, z), expected) << "m=" << m << " z=" << z;
    }
  }
}

}  // namespace
}  // namespace hypergen
