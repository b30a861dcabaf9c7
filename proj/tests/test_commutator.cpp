#include "slantlab/commutator.hpp"
#include "slantlab/parse.hpp"
#include "slantlab/random.hpp"

#include <gtest/gtest.h>

using namespace slantlab;

namespace {

HarmonicSymbol sym(const char* text) { return parse_symbol(text); }

}  // namespace

TEST(CommutatorColumn, Antisymmetry) {
  Sampler rng(61);
  for (int i = 0; i < 60; ++i) {
    const HarmonicSymbol f = rng.symbol(4, 3), g = rng.symbol(4, 3);
    for (Degree k = 0; k <= 12; ++k) EXPECT_EQ(commutator_column(f, g, k), -commutator_column(g, f, k));
  }
}

TEST(CommutatorColumn, ScalesByTheProductOfScalars) {
  Sampler rng(67);
  for (int i = 0; i < 30; ++i) {
    const HarmonicSymbol f = rng.symbol(4, 3), g = rng.symbol(4, 3);
    const Rational c = rng.nonzero_rational();
    for (Degree k = 0; k <= 10; ++k) EXPECT_EQ(commutator_column(c * f, c * g, k), c * c * commutator_column(f, g, k));
  }
}

// f = z + zbar^2, g = z + zbar. The constant term of the z^4 column is
// 0 - 3/10; the first nonzero entry of the scan is already at z^1.
TEST(Scan, QuadraticCounterexample) {
  const HarmonicSymbol f = sym("z + zbar^2"), g = sym("z + zbar");
  EXPECT_EQ(commutator_column(f, g, 4).coeff(0), make_rational(-3, 10));
  const CommutatorReport r = scan_commutator(f, g, 6);
  ASSERT_TRUE(r.first_witness);
  EXPECT_EQ(*r.first_witness, (Witness{1, 0, make_rational(-1, 2)}));
  // By hand: B_g z = z + 1/2, B_f (z + 1/2) = z, while B_f z = z and B_g z = z + 1/2.
  EXPECT_EQ(commutator_column(f, g, 1), AnalyticPoly::constant(make_rational(-1, 2)));
}

TEST(Scan, EqualSymbolsNeverWitness) {
  const HarmonicSymbol f = sym("zbar^2 + 3*zbar + z - z^3");
  const CommutatorReport r = scan_commutator(f, f, 30);
  EXPECT_FALSE(r.first_witness);
  EXPECT_EQ(r.max_abs_entry, 0);
}

TEST(Scan, ParallelMatchesSequential) {
  Sampler rng(71);
  for (int i = 0; i < 10; ++i) {
    const HarmonicSymbol f = rng.symbol(4, 3), g = rng.symbol(4, 3);
    const CommutatorReport a = scan_commutator(f, g, 30, 1), b = scan_commutator(f, g, 30, 3);
    EXPECT_EQ(a.first_witness, b.first_witness);
    EXPECT_EQ(a.max_abs_entry, b.max_abs_entry);
  }
}

TEST(Scan, WitnessIsLexicographicallyLeast) {
  Sampler rng(73);
  for (int i = 0; i < 20; ++i) {
    const HarmonicSymbol f = rng.symbol(3, 3), g = rng.symbol(3, 3);
    const CommutatorReport r = scan_commutator(f, g, 20);
    if (!r.first_witness) continue;
    for (Degree k = 0; k < r.first_witness->k; ++k) EXPECT_TRUE(commutator_column(f, g, k).is_zero());
    const AnalyticPoly col = commutator_column(f, g, r.first_witness->k);
    EXPECT_EQ(col.terms().begin()->first, r.first_witness->s);
    EXPECT_EQ(col.terms().begin()->second, r.first_witness->value);
  }
}

TEST(ScanBound, DefaultFormula) {
  EXPECT_EQ(default_scan_bound(parse_poly("z"), parse_poly("2*z"), 1), 2u * (1 + 1 + 2 + 4));
  EXPECT_EQ(default_scan_bound({}, parse_poly("z^3"), 2), 2u * (0 + 3 + 4 + 4));
}

TEST(TheoremVerdict, Examples) {
  EXPECT_EQ(theorem_verdict(sym("zbar"), parse_poly("z"), parse_poly("z")).kind, VerdictKind::Commute);
  EXPECT_EQ(theorem_verdict(sym("zbar"), parse_poly("z"), parse_poly("2*z"), 40).kind,
            VerdictKind::NonCommuteWitness);
  EXPECT_EQ(theorem_verdict(sym("zbar^2 + zbar"), {}, parse_poly("z^3"), 60).kind, VerdictKind::NonCommuteWitness);
}

TEST(TheoremVerdict, RejectsAnalyticPartAndDegreeZero) {
  EXPECT_THROW(theorem_verdict(sym("zbar + z"), {}, {}), std::invalid_argument);
  EXPECT_THROW(theorem_verdict(sym("0"), {}, {}), std::invalid_argument);
}

TEST(TheoremVerdict, TooSmallBoundIsInconclusiveNotCommute) {
  // z and 2z differ, but the k = 0 column alone vanishes.
  const Verdict v = theorem_verdict(sym("zbar"), parse_poly("z"), parse_poly("2*z"), 0);
  ASSERT_FALSE(v.scan.first_witness);
  EXPECT_EQ(v.kind, VerdictKind::InconclusiveWithinBound);
}

TEST(TheoremVerdict, ScalingInvariance) {
  Sampler rng(79);
  for (int i = 0; i < 20; ++i) {
    const long N = rng.uniform(1, 3);
    const HarmonicSymbol pbar = HarmonicSymbol::from_conjugate_coeffs(rng.conjugate_coeffs(N));
    const AnalyticPoly phi = rng.poly(3), psi = rng.poly(3);
    const Rational c = rng.nonzero_rational();
    const Verdict a = theorem_verdict(pbar, phi, psi);
    const Verdict b = theorem_verdict(c * pbar, c * phi, c * psi, a.scan.k_max);
    EXPECT_EQ(a.kind, b.kind);
  }
}

TEST(LemmaVerdict, ProportionalSymbolsCommute) {
  const Verdict v = lemma_verdict(3, 1, 1, parse_poly("3*z"), parse_poly("z"));
  EXPECT_EQ(v.kind, VerdictKind::Commute);
  ASSERT_TRUE(v.ratio);
  EXPECT_EQ(*v.ratio, 3);
}

TEST(LemmaVerdict, NonProportionalHasWitness) {
  EXPECT_EQ(lemma_verdict(1, 1, 1, parse_poly("z"), parse_poly("z^2"), 40).kind, VerdictKind::NonCommuteWitness);
}

// With phi = psi the symbols are proportional only when a = b.
TEST(LemmaVerdict, EqualAnalyticPartsNeedEqualScalars) {
  EXPECT_EQ(lemma_verdict(1, 1, 2, parse_poly("z + 1"), parse_poly("z + 1")).kind, VerdictKind::Commute);
  EXPECT_EQ(lemma_verdict(2, 1, 2, parse_poly("z + 1"), parse_poly("z + 1")).kind, VerdictKind::NonCommuteWitness);
}

TEST(LemmaVerdict, ZeroLeadingScalarBranchIsScanned) {
  const Verdict v = lemma_verdict(0, 1, 1, parse_poly("z"), parse_poly("z"));
  EXPECT_EQ(v.kind, VerdictKind::NonCommuteWitness);
  const Verdict zero_g = lemma_verdict(1, 0, 1, parse_poly("z"), {});
  EXPECT_EQ(zero_g.kind, VerdictKind::Commute);
  EXPECT_FALSE(zero_g.ratio);
}

TEST(Sufficiency, MultiplesCommuteExactly) {
  Sampler rng(83);
  for (int i = 0; i < 40; ++i) {
    const long N = rng.uniform(1, 4);
    const HarmonicSymbol g =
        HarmonicSymbol::zbar_power(static_cast<Degree>(N), rng.nonzero_rational()) + HarmonicSymbol(rng.poly(5));
    const HarmonicSymbol f = rng.nonzero_rational() * g;
    EXPECT_FALSE(scan_commutator(f, g, 40).first_witness);
  }
}
