#include "slantlab/operators.hpp"
#include "slantlab/random.hpp"

#include <gtest/gtest.h>

using namespace slantlab;

namespace {

// Complex conjugate of a symbol with rational coefficients: swap the parts.
HarmonicSymbol conjugate(const HarmonicSymbol& s) {
  AnalyticPoly an = s.coanalytic(), co = s.analytic();
  return HarmonicSymbol(std::move(an), std::move(co));
}

}  // namespace

// <zbar^j z^k, z^m> = delta_(k, j+m) ||z^k||^2, so the projection coefficient
// is ||z^k||^2 / ||z^(k-j)||^2.
TEST(Projection, MatchesInnerProductOracle) {
  for (Degree k = 0; k <= 30; ++k)
    for (Degree j = 0; j <= 32; ++j) {
      const AnalyticPoly got = project_monomial(j, k);
      if (j > k) {
        EXPECT_TRUE(got.is_zero()) << j << "," << k;
        continue;
      }
      const Rational expect = bergman_norm_squared(AnalyticPoly::monomial(k)) /
                              bergman_norm_squared(AnalyticPoly::monomial(k - j));
      EXPECT_EQ(got, AnalyticPoly::monomial(k - j, expect)) << j << "," << k;
    }
}

TEST(Toeplitz, MixedSymbolExample) {
  const HarmonicSymbol s(AnalyticPoly{{1, 1}}, AnalyticPoly{{2, 1}});
  EXPECT_EQ(toeplitz_apply(s, AnalyticPoly::monomial(2)), (AnalyticPoly{{0, make_rational(1, 3)}, {3, 1}}));
}

TEST(Toeplitz, AnalyticSymbolIsMultiplication) {
  Sampler rng(5);
  for (int i = 0; i < 30; ++i) {
    const AnalyticPoly phi = rng.poly(6), p = rng.poly(10);
    EXPECT_EQ(toeplitz_apply(HarmonicSymbol(phi), p), phi * p);
  }
}

TEST(Toeplitz, AdjointIsConjugateSymbol) {
  Sampler rng(17);
  for (int i = 0; i < 100; ++i) {
    const HarmonicSymbol s = rng.symbol(5, 5);
    const AnalyticPoly p = rng.poly(12), q = rng.poly(12);
    EXPECT_EQ(bergman_inner(toeplitz_apply(s, p), q), bergman_inner(p, toeplitz_apply(conjugate(s), q)));
  }
}

TEST(Slant, EvenAndOddMonomials) {
  for (Degree n = 0; n <= 20; ++n) {
    EXPECT_EQ(slant_apply(AnalyticPoly::monomial(2 * n)), AnalyticPoly::monomial(n));
    EXPECT_TRUE(slant_apply(AnalyticPoly::monomial(2 * n + 1)).is_zero());
  }
}

TEST(SlantAdjoint, Examples) {
  EXPECT_EQ(slant_adjoint_apply(AnalyticPoly::monomial(3)), AnalyticPoly::monomial(6, make_rational(7, 4)));
  EXPECT_EQ(slant_adjoint_apply(AnalyticPoly::monomial(0)), AnalyticPoly::monomial(0));
}

TEST(SlantAdjoint, IsTheBergmanAdjointOfW) {
  Sampler rng(23);
  for (int i = 0; i < 200; ++i) {
    const AnalyticPoly p = rng.poly(40), q = rng.poly(20);
    EXPECT_EQ(bergman_inner(slant_apply(p), q), bergman_inner(p, slant_adjoint_apply(q)));
  }
}

TEST(SlantToeplitz, IsWAfterT) {
  Sampler rng(29);
  for (int i = 0; i < 50; ++i) {
    const HarmonicSymbol s = rng.symbol(4, 4);
    const AnalyticPoly p = rng.poly(15);
    EXPECT_EQ(slant_toeplitz_apply(s, p), slant_apply(toeplitz_apply(s, p)));
    EXPECT_EQ(apply_expr(OperatorExpr::slant_toeplitz(s), p), slant_toeplitz_apply(s, p));
  }
}

TEST(OperatorExpr, RightmostActsFirst) {
  const OperatorExpr w = OperatorExpr::slant() * OperatorExpr::slant_adjoint();
  // W W* z = W (3/2 z^2) = 3/2 z, whereas W* W z = 0.
  EXPECT_EQ(apply_expr(w, AnalyticPoly::monomial(1)), AnalyticPoly::monomial(1, make_rational(3, 2)));
  EXPECT_TRUE(apply_expr(OperatorExpr::slant_adjoint() * OperatorExpr::slant(), AnalyticPoly::monomial(1)).is_zero());
  EXPECT_EQ(apply_expr(OperatorExpr::identity(), AnalyticPoly::monomial(4)), AnalyticPoly::monomial(4));
}

TEST(OperatorExpr, CompositionIsAssociative) {
  Sampler rng(31);
  for (int i = 0; i < 30; ++i) {
    const OperatorExpr a = rng.word(2, 3, 2), b = rng.word(2, 3, 2), c = rng.word(2, 3, 2);
    const AnalyticPoly p = rng.poly(10);
    EXPECT_EQ(apply_expr((a * b) * c, p), apply_expr(a, apply_expr(b, apply_expr(c, p))));
  }
}

TEST(OperatorExpr, Linearity) {
  Sampler rng(37);
  for (int i = 0; i < 50; ++i) {
    const OperatorExpr e = rng.word(4, 3, 3);
    const AnalyticPoly p = rng.poly(12), q = rng.poly(12);
    const Rational c = rng.nonzero_rational();
    EXPECT_EQ(apply_expr(e, p + c * q), apply_expr(e, p) + c * apply_expr(e, q));
  }
}
