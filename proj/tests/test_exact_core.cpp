#include "slantlab/operators.hpp"
#include "slantlab/random.hpp"

#include <gtest/gtest.h>

using namespace slantlab;

TEST(Rational, MakeRationalIsCanonical) {
  EXPECT_EQ(to_string(make_rational(3, 12)), "1/4");
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParseRational) {
  EXPECT_EQ(parse_rational("3"), 3);
  EXPECT_EQ(parse_rational("-6/8"), make_rational(-3, 4));
  EXPECT_EQ(parse_rational("+1/2"), make_rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("2/"), std::invalid_argument);
}

TEST(AnalyticPoly, ZeroCoefficientsAreNotStored) {
  AnalyticPoly p{{1, 1}, {2, 3}};
  p.add_term(2, -3);
  EXPECT_EQ(p, AnalyticPoly::monomial(1));
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_EQ(AnalyticPoly{}.degree(), -1);
}

TEST(AnalyticPoly, Cancellation) {
  const AnalyticPoly zz = AnalyticPoly{{1, 1}, {2, 1}} + AnalyticPoly{{1, -1}};
  EXPECT_EQ(zz, AnalyticPoly::monomial(2));
}

TEST(AnalyticPoly, ProductAndSubstitution) {
  const AnalyticPoly p{{0, 1}, {1, 2}};
  EXPECT_EQ(p * p, (AnalyticPoly{{0, 1}, {1, 4}, {2, 4}}));
  EXPECT_EQ(substitute_z_squared(p), (AnalyticPoly{{0, 1}, {2, 2}}));
  EXPECT_EQ(diff_symbol(AnalyticPoly{{1, 5}}, AnalyticPoly{{1, 2}, {3, 1}}), (AnalyticPoly{{1, 3}, {3, -1}}));
}

TEST(AnalyticPoly, NegativeIndexReadsZero) {
  EXPECT_EQ(AnalyticPoly::monomial(0, 5).coeff(-1), 0);
}

// ||z^n||^2 = 1/(n+1): the integral of r^(2n) over the disk with dA/pi.
TEST(Bergman, MonomialNorms) {
  for (long n = 0; n <= 20; ++n) {
    const Rational area_integral = make_rational(2, 2 * n + 2);  // 2 * int_0^1 r^(2n+1) dr
    EXPECT_EQ(bergman_norm_squared(AnalyticPoly::monomial(static_cast<Degree>(n))), area_integral);
  }
}

TEST(Bergman, InnerProductIsBilinearAndOrthogonal) {
  Sampler rng(11);
  for (int i = 0; i < 50; ++i) {
    const AnalyticPoly p = rng.poly(10), q = rng.poly(10), r = rng.poly(10);
    const Rational c = rng.nonzero_rational();
    EXPECT_EQ(bergman_inner(p + c * q, r), bergman_inner(p, r) + c * bergman_inner(q, r));
    EXPECT_EQ(bergman_inner(p, q), bergman_inner(q, p));
  }
  EXPECT_EQ(bergman_inner(AnalyticPoly::monomial(2), AnalyticPoly::monomial(3)), 0);
}

TEST(HarmonicSymbol, ZbarZeroFoldsIntoAnalyticConstant) {
  const HarmonicSymbol s(AnalyticPoly{{1, 1}}, AnalyticPoly{{0, 2}, {1, 1}});
  EXPECT_EQ(s.analytic(), (AnalyticPoly{{0, 2}, {1, 1}}));
  EXPECT_EQ(s.coanalytic(), AnalyticPoly::monomial(1));
  EXPECT_EQ(s.coanalytic_degree(), 1);
}

TEST(HarmonicSymbol, FromConjugateCoeffs) {
  const HarmonicSymbol s = HarmonicSymbol::from_conjugate_coeffs({3, 0, -1});
  EXPECT_EQ(s.analytic(), AnalyticPoly::constant(3));
  EXPECT_EQ(s.coanalytic(), AnalyticPoly::monomial(2, -1));
}

TEST(HarmonicSymbol, ProportionalityRatio) {
  const HarmonicSymbol g(AnalyticPoly{{1, 1}}, AnalyticPoly{{1, 1}});
  EXPECT_EQ(proportionality_ratio(Rational(3) * g, g), Rational(3));
  EXPECT_FALSE(proportionality_ratio(g + HarmonicSymbol(AnalyticPoly{{2, 1}}), g));
  EXPECT_FALSE(proportionality_ratio(g, HarmonicSymbol{}));
  const HarmonicSymbol only_conj = HarmonicSymbol::zbar_power(2, 4);
  EXPECT_EQ(proportionality_ratio(HarmonicSymbol::zbar_power(2, -2), only_conj), make_rational(-1, 2));
}

TEST(Sampler, CoefficientsAvoidZeroAndStayInRange) {
  Sampler rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Rational c = rng.coeff();
    EXPECT_NE(c, 0);
    EXPECT_LE(abs(c), 3);
  }
}

TEST(Sampler, SameSeedSameStream) {
  Sampler a(99), b(99);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.poly(12), b.poly(12));
}
