#include "hypergen/core.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hypergen {
namespace {

TEST(MakeParams, AcceptsValidTriples) {
  const auto p = make_params(4, 2, 3);
  EXPECT_EQ(p.population(), 4);
  EXPECT_EQ(p.white(), 2);
  EXPECT_EQ(p.black(), 2);
  EXPECT_EQ(p.sample(), 3);
  EXPECT_NO_THROW(make_params(0, 0, 0));
}

TEST(MakeParams, RejectsOutOfRange) {
  EXPECT_THROW(make_params(4, 5, 1), DomainError);
  EXPECT_THROW(make_params(4, -1, 1), DomainError);
  EXPECT_THROW(make_params(4, 2, 5), DomainError);
  EXPECT_THROW(make_params(4, 2, -1), DomainError);
  EXPECT_THROW(make_params(-1, 0, 0), DomainError);
}

TEST(Support, Examples) {
  EXPECT_EQ(support(make_params(4, 2, 3)), (SupportRange{1, 2}));
  EXPECT_EQ(support(make_params(4, 2, 1)), (SupportRange{0, 1}));
  EXPECT_EQ(support(make_params(5, 5, 3)), (SupportRange{3, 3}));
  EXPECT_EQ(support(make_params(0, 0, 0)), (SupportRange{0, 0}));
}

TEST(Support, WidthFormulaOnGrid) {
  for (const auto& p : testing::param_grid(20)) {
    const auto s = support(p);
    ASSERT_LE(s.lo, s.hi) << p.to_string();
    EXPECT_EQ(s.hi - s.lo, std::min(p.sample(), p.white()) -
                               std::max<std::int64_t>(0, p.sample() + p.white() - p.population()));
  }
}

TEST(Complement, SwapsColoursAndKeptBalls) {
  EXPECT_EQ(complement(make_params(4, 2, 3)), make_params(4, 2, 1));
  EXPECT_EQ(complement(make_params(7, 5, 2)), make_params(7, 2, 5));
  for (const auto& p : testing::param_grid(8)) EXPECT_EQ(complement(complement(p)), p);
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_THROW(binomial(-1, 0), DomainError);
  EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256", 10));
}

TEST(Binomial, PascalAndSymmetry) {
  for (std::int64_t m = 0; m <= 40; ++m) {
    for (std::int64_t j = 0; j <= m; ++j) {
      EXPECT_EQ(binomial(m, j), binomial(m, m - j));
      if (m > 0) {
        EXPECT_EQ(binomial(m, j), binomial(m - 1, j) + binomial(m - 1, j - 1));
      }
    }
  }
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_THROW(factorial(-1), DomainError);
}

TEST(Rational, CanonicalForm) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4).to_string(), "4");
  EXPECT_TRUE(Rational(Integer(8), Integer(4)).is_integer());
}

TEST(Rational, DivisionByZeroIsAnError) {
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
  EXPECT_THROW(pow(Rational(0), -1), DomainError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("1/2"), Rational(Integer(1), Integer(2)));
  EXPECT_EQ(Rational::parse("-7/14"), Rational(Integer(-1), Integer(2)));
  EXPECT_EQ(Rational::parse("+3"), Rational(3));
  EXPECT_EQ(Rational::parse("0"), Rational(0));
  for (const char* bad : {"", "0.5", "1e3", "1/", "/2", "1/-2", "a", "1/0", "--1", " 1"}) {
    EXPECT_THROW(Rational::parse(bad), DomainError) << bad;
  }
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.75), Rational::parse("3/4"));
  EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
  EXPECT_THROW(Rational::from_double(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(Rational, ArithmeticRoundTrips) {
  testing::RationalGen gen(7);
  for (int i = 0; i < 500; ++i) {
    const auto x = gen();
    const auto y = gen.nonzero();
    EXPECT_EQ((x + y) - y, x);
    EXPECT_EQ((x * y) / y, x);
    EXPECT_EQ(x - x, Rational(0));
    EXPECT_EQ(pow(y, 3) * pow(y, -3), Rational(1));
  }
}

TEST(Rational, PowZeroToZeroIsOne) { EXPECT_EQ(pow(Rational(0), 0), Rational(1)); }

TEST(PgfPolynomial, TrimsTrailingZeros) {
  const PgfPolynomial p({Rational(0), Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.lowest_power(), 1);
  EXPECT_TRUE(PgfPolynomial(std::vector<Rational>{}).is_zero());
  EXPECT_EQ(p.coeff(7), Rational(0));
  EXPECT_EQ(p.coeff(-1), Rational(0));
}

TEST(PgfPolynomial, EvaluateAndDifferentiate) {
  // 1/2 z + 1/2 z^2
  const PgfPolynomial p({Rational(0), Rational::parse("1/2"), Rational::parse("1/2")});
  EXPECT_EQ(p.evaluate(Rational(2)), Rational(3));
  EXPECT_DOUBLE_EQ(p.evaluate(2.0), 3.0);
  EXPECT_NEAR(std::abs(p.evaluate(ComplexF(-1.0, 0.0))), 0.0, 1e-15);
  EXPECT_EQ(p.derivative(1), PgfPolynomial({Rational::parse("1/2"), Rational(1)}));
  EXPECT_EQ(p.derivative(2), PgfPolynomial({Rational(1)}));
  EXPECT_TRUE(p.derivative(3).is_zero());
  EXPECT_EQ(p.shifted(2).coeff(3), Rational::parse("1/2"));
  EXPECT_EQ(p.total(), Rational(1));
  EXPECT_EQ(p.to_string(), "0 1/2 1/2");
}

}  // namespace
}  // namespace hypergen
