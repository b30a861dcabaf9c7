#include "slantlab/identities.hpp"
#include "slantlab/parse.hpp"
#include "slantlab/random.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace slantlab;

namespace {

// Largest integer of the given parity that is <= n.
long largest_with_parity(long n, bool even) {
  long v = n;
  if ((v % 2 == 0) != even) --v;
  return v;
}

}  // namespace

// M_2k is the largest even index <= min(2k, N); L_2k+1 the largest odd
// index <= min(2k+1, N). The table checks the piecewise transcription.
TEST(CaseIndex, TableAgainstParityDefinition) {
  for (long N = 1; N <= 10; ++N)
    for (long k = 0; k <= 50; ++k) {
      const CaseIndex c = case_index(N, k);
      EXPECT_EQ(c.K2k, std::min(2 * k, N));
      EXPECT_EQ(c.M2k, largest_with_parity(std::min(2 * k, N), true)) << N << "," << k;
      EXPECT_EQ(c.L2k1, largest_with_parity(std::min(2 * k + 1, N), false)) << N << "," << k;
    }
}

TEST(CoeffSide, TotalIsSumAndZerosAreSkipped) {
  CoeffSide s;
  s.add("x", 2);
  s.add("zero", 0);
  s.add("y", make_rational(-1, 3));
  EXPECT_EQ(s.terms.size(), 2u);
  EXPECT_EQ(s.total, make_rational(5, 3));
}

TEST(DefectRegistry, IdsAreUniqueAndResolvable) {
  std::set<std::string> ids;
  for (const auto& d : print_defects()) {
    EXPECT_TRUE(ids.insert(std::string(d.id)).second) << d.id;
    EXPECT_EQ(find_defect(d.id), &d);
  }
  EXPECT_EQ(find_defect("no-such-defect"), nullptr);
}

TEST(SingleZbar, EqualSymbolsGiveEqualSides) {
  Sampler rng(101);
  for (int i = 0; i < 10; ++i) {
    const AnalyticPoly phi = rng.poly(6);
    for (long s = 0; s <= 10; ++s)
      for (long k = 0; k <= 10; ++k) {
        EXPECT_TRUE(eval_identity_single_even(1, phi, phi, s, k).holds());
        EXPECT_TRUE(eval_identity_single_odd(1, phi, phi, s, k).holds());
      }
  }
}

// Subtracting the (t, 0) instance from the (t+1, 2) instance leaves only the
// far term: 2/((2t+2)(2t+4)) (a b_(4t+2) - a_(4t+2)).
TEST(SingleZbar, EvenSubtractionStep) {
  Sampler rng(103);
  for (long t = 0; t <= 10; ++t) {
    const Rational a = rng.nonzero_rational();
    const AnalyticPoly phi = rng.poly(4 * t + 4), psi = rng.poly(4 * t + 4);
    auto D = [&](long s, long k) -> Rational {
      const IdentityEval e = eval_identity_single_even(a, phi, psi, s, k);
      return e.lhs.total - e.rhs.total;
    };
    const Rational expect =
        make_rational(2, (2 * t + 2) * (2 * t + 4)) * (a * psi.coeff(4 * t + 2) - phi.coeff(4 * t + 2));
    EXPECT_EQ(D(t + 1, 2) - D(t, 0), expect) << t;
  }
}

TEST(ZbarPower, NOneReducesToSingleZbar) {
  Sampler rng(107);
  for (int i = 0; i < 10; ++i) {
    const Rational a = rng.nonzero_rational();
    const AnalyticPoly phi = rng.poly(6), psi = rng.poly(6);
    for (long s = 0; s <= 8; ++s)
      for (long k = 0; k <= 8; ++k)
        for (Reading r : {Reading::Printed, Reading::Corrected}) {
          const IdentityEval even = eval_identity_power(a, 1, phi, psi, s, k, Parity::EvenInput, r);
          const IdentityEval odd = eval_identity_power(a, 1, phi, psi, s, k, Parity::OddInput, r);
          const IdentityEval se = eval_identity_single_even(a, phi, psi, s, k);
          const IdentityEval so = eval_identity_single_odd(a, phi, psi, s, k);
          EXPECT_EQ(even.lhs.total, se.lhs.total);
          EXPECT_EQ(even.rhs.total, se.rhs.total);
          EXPECT_EQ(odd.lhs.total, so.lhs.total);
          EXPECT_EQ(odd.rhs.total, so.rhs.total);
          EXPECT_TRUE(even.defects.empty());
          EXPECT_TRUE(odd.defects.empty() || odd.defects == std::vector<std::string>{"projection-domain"});
        }
  }
}

TEST(ZbarPower, PrintedShiftFactorIsFlaggedForNAtLeastTwo) {
  const IdentityEval e = eval_identity_power(1, 2, parse_poly("z"), parse_poly("z^2"), 3, 2, Parity::EvenInput);
  EXPECT_NE(std::find(e.defects.begin(), e.defects.end(), "power-shift-factor"), e.defects.end());
}

// The printed row-1 displays break even the phi = psi symmetry; every such
// failure must be flagged.
TEST(Pbar, EqualAnalyticPartsGiveEqualSidesInEveryBranch) {
  Sampler rng(109);
  std::size_t printed_failures = 0;
  for (long N = 1; N <= 3; ++N) {
    const auto c = rng.conjugate_coeffs(N);
    const AnalyticPoly phi = rng.poly(6);
    for (long s = 0; s <= 12; ++s)
      for (long k = 0; k <= 12; ++k)
        for (Parity p : {Parity::EvenInput, Parity::OddInput}) {
          EXPECT_TRUE(eval_identity_pbar(c, phi, phi, s, k, p, Reading::Corrected).holds())
              << N << " " << s << " " << k;
          const IdentityEval printed = eval_identity_pbar(c, phi, phi, s, k, p, Reading::Printed);
          if (!printed.holds()) {
            ++printed_failures;
            EXPECT_FALSE(printed.defects.empty()) << N << " " << s << " " << k;
          }
        }
  }
  EXPECT_GT(printed_failures, 0u);
}

TEST(Pbar, OutsideSupportBothSidesVanish) {
  const std::vector<Rational> c{0, 1, 2};
  // 2s - k < -N selects the zero branch on both sides.
  const IdentityEval e = eval_identity_pbar(c, parse_poly("1 + z"), parse_poly("z^2"), 0, 5, Parity::EvenInput);
  EXPECT_EQ(e.lhs.total, 0);
  EXPECT_EQ(e.rhs.total, 0);
}

TEST(Pbar, BranchZeroMatchesEngine) {
  Sampler rng(113);
  for (long N = 1; N <= 3; ++N) {
    const auto c = rng.conjugate_coeffs(N);
    const AnalyticPoly phi = rng.poly(5), psi = rng.poly(5);
    for (long s = 0; s <= 6; ++s) {
      const long k = 2 * s;
      const EngineSides truth = engine_sides_pbar(c, phi, psi, k, Parity::EvenInput);
      const IdentityEval e = eval_identity_pbar(c, phi, psi, s, k, Parity::EvenInput, Reading::Corrected);
      EXPECT_EQ(e.lhs.total, truth.lhs.coeff(s));
      EXPECT_EQ(e.rhs.total, truth.rhs.coeff(s));
    }
  }
}

// The corrected reading reproduces the engine everywhere; the printed
// reading's mismatches all carry a registered defect.
TEST(CrossCheck, CorrectedIsExactAndPrintedIsAttributed) {
  Sampler rng(127);
  for (int i = 0; i < 6; ++i) {
    std::vector<IdentityInstance> instances;
    instances.push_back({IdentityFamily::SingleZbar, rng.nonzero_rational(), 1, {}, rng.poly(6), rng.poly(6)});
    for (long N = 1; N <= 4; ++N)
      instances.push_back({IdentityFamily::ZbarPower, rng.nonzero_rational(), N, {}, rng.poly(6), rng.poly(6)});
    for (long N = 1; N <= 3; ++N)
      instances.push_back({IdentityFamily::Pbar, 1, N, rng.conjugate_coeffs(N), rng.poly(6), rng.poly(6)});
    for (const auto& inst : instances) {
      const CrossCheckReport corrected = cross_check(inst, 12, 12, Reading::Corrected);
      EXPECT_TRUE(corrected.mismatches.empty()) << to_string(inst.family) << " N=" << inst.N;
      const CrossCheckReport printed = cross_check(inst, 12, 12, Reading::Printed);
      EXPECT_EQ(printed.unattributed(), 0u);
      for (const auto& d : printed.mismatches)
        for (const auto& id : d.defects) EXPECT_NE(find_defect(id), nullptr) << id;
    }
  }
}

TEST(CrossCheck, LemmaShapeHasNoDiscrepancies) {
  const IdentityInstance inst{IdentityFamily::SingleZbar, make_rational(-2, 3), 1, {}, parse_poly("1 - z + 2*z^3"),
                              parse_poly("z^2 + 3*z^5")};
  const CrossCheckReport r = cross_check(inst, 12, 12, Reading::Printed);
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_EQ(r.comparisons, 13u * 13u * 2u * 2u);
}

TEST(CrossCheck, PbarTyposSurfaceAsLoggedMismatches) {
  const IdentityInstance inst{IdentityFamily::Pbar, 1, 2, {0, 1, -2}, parse_poly("z + z^2"), parse_poly("3 - z^3")};
  const CrossCheckReport r = cross_check(inst, 12, 12, Reading::Printed);
  EXPECT_FALSE(r.mismatches.empty());
  for (const auto& d : r.mismatches) {
    EXPECT_NE(d.printed_value, d.engine_value);
    EXPECT_FALSE(d.defects.empty());
  }
}

TEST(CrossCheck, ParallelMatchesSequential) {
  const IdentityInstance inst{IdentityFamily::Pbar, 1, 3, {1, 2, 0, -1}, parse_poly("z + z^4"), parse_poly("2 - z")};
  const CrossCheckReport a = cross_check(inst, 12, 12, Reading::Printed, 1);
  const CrossCheckReport b = cross_check(inst, 12, 12, Reading::Printed, 3);
  ASSERT_EQ(a.mismatches.size(), b.mismatches.size());
  for (std::size_t i = 0; i < a.mismatches.size(); ++i) {
    EXPECT_EQ(a.mismatches[i].s, b.mismatches[i].s);
    EXPECT_EQ(a.mismatches[i].k, b.mismatches[i].k);
    EXPECT_EQ(a.mismatches[i].engine_value, b.mismatches[i].engine_value);
  }
}
