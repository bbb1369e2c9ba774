#include <gtest/gtest.h>

#include <algorithm>

#include "pauli/steppairs.hpp"
#include "pauli/verify.hpp"
#include "support.hpp"

using namespace pauli;
using pauli::testing::Gen;

namespace {

const complex I{0.0, 1.0};

StepPair worked_pair() { return family_sol3({2.0, kPi / 3.0, 2.0 * kPi / 3.0, kPi / 3.0}); }

double entry_gap(const StepVector& a, const StepVector& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

bool contains(const std::vector<StepVector>& vs, const StepVector& c, double tol) {
  return std::any_of(vs.begin(), vs.end(), [&](const StepVector& v) { return entry_gap(v, c) <= tol; });
}

}  // namespace

TEST(StepVector, RejectsEmpty) { EXPECT_THROW(StepVector(std::vector<complex>{}), ContractError); }

TEST(StepVector, EvaluatesSteps) {
  const StepVector b{1.0, 2.0, I};
  EXPECT_EQ(b.evaluate(0.0), complex(1.0));
  EXPECT_EQ(b.evaluate(1.5), complex(2.0));
  EXPECT_EQ(b.evaluate(2.999), I);
  EXPECT_EQ(b.evaluate(3.0), complex(0.0));
  EXPECT_EQ(b.evaluate(-0.1), complex(0.0));
}

TEST(Autocorrelation, AllOnes) {
  const auto r = autocorrelation(StepVector{1.0, 1.0, 1.0, 1.0});
  const std::vector<complex> want{4.0, 3.0, 2.0, 1.0};
  EXPECT_EQ(r.values(), want);
}

TEST(Autocorrelation, SingleEntry) {
  const auto r = autocorrelation(StepVector{1.0, 0.0, 0.0, 0.0});
  const std::vector<complex> want{1.0, 0.0, 0.0, 0.0};
  EXPECT_EQ(r.values(), want);
}

// Oracle: defining double loop. Frozen: (65/4, 0, 0, -2).
TEST(Autocorrelation, WorkedSol3Pair) {
  const auto [b, c] = worked_pair();
  const auto oracle = pauli::testing::oracle_autocorrelation(b.entries());
  const auto r = autocorrelation(b);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_LT(std::abs(r[k] - oracle[k]), 1e-13);
  EXPECT_NEAR(r[0].real(), 65.0 / 4.0, 1e-13);
  EXPECT_LT(std::abs(r[1]), 1e-13);
  EXPECT_LT(std::abs(r[2]), 1e-13);
  EXPECT_LT(std::abs(r[3] + 2.0), 1e-13);
  const auto rc = autocorrelation(c);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_LT(std::abs(rc[k] - r[k]), 1e-13);
}

TEST(Autocorrelation, BilateralAccess) {
  const auto r = autocorrelation(StepVector{1.0, I, 2.0});
  EXPECT_EQ(r.at(-1), std::conj(r.at(1)));
  EXPECT_EQ(r.at(-2), std::conj(r.at(2)));
  EXPECT_THROW(r.at(3), ContractError);
}

TEST(TrigPoly, Examples) {
  EXPECT_NEAR(step_trig_poly(StepVector{1.0}, 0.77), 1.0, 1e-15);
  EXPECT_NEAR(step_trig_poly(StepVector{1.0, 1.0}, kPi), 0.0, 1e-15);
  EXPECT_NEAR(step_trig_poly(StepVector{1.0, 1.0}, 0.0), 4.0, 1e-15);
}

TEST(StepFourierAbs, Examples) {
  EXPECT_NEAR(step_fourier_abs(StepVector{1.0}, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(step_fourier_abs(StepVector{1.0}, kTwoPi), 0.0, 1e-15);
  // Oracle: quadrature of the explicit step function. Frozen: 4/pi.
  const StepVector b{1.0, -1.0};
  EXPECT_NEAR(pauli::testing::oracle_step_fourier_abs(b, kPi), 4.0 / kPi, 1e-13);
  EXPECT_NEAR(step_fourier_abs(b, kPi), 4.0 / kPi, 1e-14);
}

TEST(StepFourierAbs, MatchesQuadratureOracle) {
  Gen gen(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto b = gen.step_vector(gen.integer(1, 6));
    const double y = gen.uniform(-50.0, 50.0);
    EXPECT_NEAR(step_fourier_abs(b, y), pauli::testing::oracle_step_fourier_abs(b, y), 1e-11);
    EXPECT_NEAR(std::abs(step_fourier(b, y)), step_fourier_abs(b, y), 1e-12);
  }
}

TEST(LemmaCheck, IdenticalVectors) {
  const StepVector b{1.0, I, 2.0};
  const auto r = lemma_stepa_check(b, b, 1e-12);
  EXPECT_TRUE(r.overall());
  EXPECT_EQ(r.find("modulus")->max_deviation, 0.0);
  EXPECT_EQ(r.find("autocorrelation")->max_deviation, 0.0);
}

TEST(LemmaCheck, SignFlippedPair) {
  EXPECT_TRUE(lemma_stepa_check(StepVector{1.0, 1.0, 1.0, -1.0}, StepVector{1.0, -1.0, -1.0, -1.0}, 1e-12).overall());
}

TEST(LemmaCheck, FailsOnRhoOne) {
  const auto r = lemma_stepa_check(StepVector{1.0, 1.0}, StepVector{1.0, -1.0}, 1e-12);
  EXPECT_FALSE(r.overall());
  EXPECT_DOUBLE_EQ(r.find("autocorrelation")->max_deviation, 2.0);
  EXPECT_TRUE(r.find("modulus")->passed);
}

TEST(LemmaCheck, LengthMismatch) {
  EXPECT_THROW(lemma_stepa_check(StepVector{1.0}, StepVector{1.0, 2.0}, 1e-12), ContractError);
}

TEST(Families, Sol2Examples) {
  auto [b, c] = family_sol2({0.0, 0.3, 0.4, 0.0});
  EXPECT_EQ(b, (StepVector{1.0, 0.0, 0.0, 1.0}));
  EXPECT_EQ(c, b);
  auto [b2, c2] = family_sol2({1.0, 0.0, 0.0, kPi});
  EXPECT_LT(entry_gap(b2, StepVector{1.0, 1.0, 1.0, -1.0}), 1e-15);
  EXPECT_LT(entry_gap(c2, StepVector{1.0, -1.0, -1.0, -1.0}), 1e-15);
}

TEST(Families, Sol3WorkedPair) {
  const auto [b, c] = worked_pair();
  const StepVector want_b{1.0, 1.5 * std::polar(1.0, 2.0 * kPi / 3.0), 3.0 * std::polar(1.0, 4.0 * kPi / 3.0), -2.0};
  const StepVector want_c{1.0, 1.5, 3.0, -2.0};
  EXPECT_LT(entry_gap(b, want_b), 1e-14);
  EXPECT_LT(entry_gap(c, want_c), 1e-14);
  const auto r = lemma_stepa_check(b, c, 1e-12);
  EXPECT_TRUE(r.overall());
}

// The printed pair fails the criterion; kept as a regression of the fix.
TEST(Families, UncorrectedWorkedPairFails) {
  const StepVector f{1.0, 1.5 * std::polar(1.0, 4.0 * kPi / 3.0), 3.0 * std::polar(1.0, 4.0 * kPi / 3.0), -2.0};
  const StepVector g{1.0, -1.5, 3.0, -2.0};
  EXPECT_FALSE(lemma_stepa_check(f, g, 1e-6).overall());
}

TEST(Families, Sol3UnitRadiusCollapses) {
  const auto [b, c] = family_sol3({1.0, 0.5, 1.2, 0.7});
  EXPECT_LT(std::abs(b[1]), 1e-15);
  EXPECT_LT(std::abs(b[2]), 1e-15);
  EXPECT_LT(entry_gap(b, c), 1e-15);
  EXPECT_NEAR(std::abs(b[3] - std::polar(1.0, 2.1)), 0.0, 1e-15);
}

TEST(Families, Sol3RejectsDegenerate) {
  EXPECT_THROW(family_sol3({0.0, 0.5, 1.0, 0.0}), ContractError);
  EXPECT_THROW(family_sol3({2.0, 0.0, 1.0, 0.0}), ContractError);
  EXPECT_THROW(family_sol3({2.0, 1.0, 1.0, 0.0}), ContractError);
}

TEST(Classify, TrivialSelfPair) {
  const StepVector b{1.0, 2.0, 3.0, 4.0};
  const auto k = classify_pair(b, b, 1e-10);
  EXPECT_TRUE(k.trivial);
}

TEST(Classify, Sol2IsMp1) {
  const auto [b, c] = family_sol2({1.0, 0.0, 0.0, kPi});
  const auto k = classify_pair(b, c, 1e-10);
  EXPECT_TRUE(k.mp1);
  EXPECT_FALSE(k.trivial);
}

TEST(Classify, WorkedPairIsNeither) {
  const auto [b, c] = worked_pair();
  const auto k = classify_pair(b, c, 1e-10);
  EXPECT_FALSE(k.trivial);
  EXPECT_FALSE(k.mp1);
  EXPECT_FALSE(k.mp2);
  EXPECT_TRUE(k.neither());
}

TEST(Classify, NamesTheZeroEntry) {
  try {
    classify_pair(StepVector{1.0, 2.0, 0.0}, StepVector{1.0, 2.0, 0.0}, 1e-10);
    FAIL();
  } catch (const ContractError& e) {
    EXPECT_NE(std::string(e.what()).find("b_n"), std::string::npos);
  }
}

TEST(Cheva, Examples) {
  EXPECT_TRUE(collinear_unimodular(1.0, 1.0, 1.0, I));
  EXPECT_TRUE(collinear_unimodular(1.0, I, 1.0, -I));
  EXPECT_FALSE(collinear_unimodular(1.0, I, 1.0, I));
  EXPECT_TRUE(collinear_unimodular_algebraic(1.0, I, 1.0, -I));
  EXPECT_FALSE(collinear_unimodular_algebraic(1.0, I, 1.0, I));
}

TEST(Cheva, RejectsNonUnimodular) {
  EXPECT_THROW(collinear_unimodular(2.0, 1.0, 1.0, 1.0), ContractError);
  EXPECT_THROW(collinear_unimodular_algebraic(1.0, 1.0, 1.0, 0.5), ContractError);
}

TEST(Partners, ZeroMiddleIsRigid) {
  const auto sols = solve_partners(StepVector{1.0, 0.0, 0.0, 1.0});
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0], (StepVector{1.0, 0.0, 0.0, 1.0}));
}

TEST(Partners, SignFlippedPair) {
  const StepVector b{1.0, 1.0, 1.0, -1.0};
  const auto sols = solve_partners(b);
  EXPECT_TRUE(contains(sols, b, 1e-9));
  EXPECT_TRUE(contains(sols, StepVector{1.0, -1.0, -1.0, -1.0}, 1e-9));
  for (const auto& c : sols) EXPECT_TRUE(lemma_stepa_check(b, c, 1e-9).overall());
}

TEST(Partners, WorkedPairFamilies) {
  const auto [b, c] = worked_pair();
  const auto sols = solve_partners(b);
  EXPECT_TRUE(contains(sols, b, 1e-9));
  EXPECT_TRUE(contains(sols, c, 1e-9));
  for (const auto& s : sols) EXPECT_TRUE(match_family(b, s, 1e-6).has_value());
}

TEST(Partners, Preconditions) {
  EXPECT_THROW(solve_partners(StepVector{2.0, 1.0, 1.0, 1.0}), ContractError);
  EXPECT_THROW(solve_partners(StepVector{1.0, 1.0, 1.0, 0.0}), ContractError);
  EXPECT_THROW(solve_partners(StepVector{1.0, 1.0, 1.0, 1.0, 1.0}), ContractError);
}

TEST(Partners, OutputIsSortedAndDeterministic) {
  const auto [b, c] = worked_pair();
  EXPECT_EQ(solve_partners(b), solve_partners(b));
}

TEST(MatchFamily, RecoversParameters) {
  const auto [b, c] = worked_pair();
  const auto m = match_family(b, c, 1e-9);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->family, Family::sol3);
  EXPECT_EQ(to_string(m->family), "sol3");
  const auto self = match_family(b, b, 1e-9);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->family, Family::sol1);
  EXPECT_FALSE(match_family(b, StepVector{1.0, 1.5, 3.0, 2.0}, 1e-6).has_value());
}

TEST(PauliSet, Examples) {
  const auto [b, c] = worked_pair();
  const std::vector<StepVector> good{b, c};
  EXPECT_TRUE(is_pauli_set(good, 1e-10).overall());
  const StepVector d{1.0, 2.0, 3.0};
  const StepVector d2{2.0, 4.0, 6.0};
  EXPECT_FALSE(is_pauli_set(std::vector<StepVector>{d, d2}, 1e-10).overall());
  EXPECT_FALSE(is_pauli_set(std::vector<StepVector>{StepVector{1.0, 1.0}, StepVector{1.0, -1.0}}, 1e-10).overall());
  EXPECT_THROW(is_pauli_set(std::vector<StepVector>{b}, 1e-10), ContractError);
  EXPECT_THROW(is_pauli_set(std::vector<StepVector>{b, d}, 1e-10), ContractError);
}

// ---------------------------------------------------------------------------
// Properties

TEST(StepProperty, HermitianSymmetry) {
  Gen gen(31);
  for (int trial = 0; trial < 500; ++trial) {
    const auto r = autocorrelation(gen.step_vector(gen.integer(1, 8)));
    const int n = static_cast<int>(r.size());
    for (int k = 1; k < n; ++k) EXPECT_EQ(r.at(-k), std::conj(r.at(k)));
    EXPECT_EQ(r.at(0).imag(), 0.0);
  }
}

TEST(StepProperty, ParsevalRedundancy) {
  Gen gen(32);
  for (int trial = 0; trial < 500; ++trial) {
    const auto b = gen.step_vector(gen.integer(1, 8));
    std::vector<complex> c(b.entries());
    for (auto& z : c) z *= gen.unimodular();
    const auto r = lemma_stepa_check(b, StepVector(c), 1e-12);
    EXPECT_TRUE(r.find("parseval_rho0")->passed);
  }
}

TEST(StepProperty, TrigPolyNonnegative) {
  Gen gen(33);
  for (int trial = 0; trial < 300; ++trial) {
    const auto b = gen.step_vector(gen.integer(1, 8));
    const double rho0 = autocorrelation(b)[0].real();
    for (int i = 0; i < 50; ++i) EXPECT_GE(step_trig_poly(b, gen.uniform(-20.0, 20.0)), -1e-12 * rho0);
  }
}

// Both code paths agree; half the draws are genuine partners (random
// sol2/sol3 members, conjugate-reversals) so both verdicts are exercised.
TEST(StepProperty, CriterionMatchesFunctionLevel) {
  Gen gen(34);
  const Grid yg(-50.0, 50.0, 2001);
  int passes = 0;
  for (int trial = 0; trial < 500; ++trial) {
    StepVector b{1.0}, c{1.0};
    switch (trial % 4) {
      case 0: {
        const auto p = family_sol3(gen.sol3());
        b = p.left, c = p.right;
        break;
      }
      case 1: {
        const int n = gen.integer(1, 6);
        b = gen.step_vector(n);
        std::vector<complex> v(b.entries().rbegin(), b.entries().rend());
        const complex w = gen.unimodular();
        for (auto& z : v) z = w * std::conj(z);
        c = StepVector(v);
        break;
      }
      default: {
        const int n = gen.integer(1, 6);
        b = gen.step_vector(n);
        c = gen.step_vector(n);
      }
    }
    const bool criterion = lemma_stepa_check(b, c, 1e-9).overall();
    const double scale = 1.0 + autocorrelation(b)[0].real();
    const auto lvl = step_function_level_check(b, c, yg, 1e-9, 1e-9 * scale);
    EXPECT_EQ(criterion, lvl.overall()) << "trial " << trial;
    passes += criterion;
  }
  EXPECT_GT(passes, 100);
}

TEST(StepProperty, Sol2Soundness) {
  Gen gen(35);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [b, c] = family_sol2(gen.sol2());
    EXPECT_TRUE(lemma_stepa_check(b, c, 1e-10).overall());
  }
}

TEST(StepProperty, Sol3Soundness) {
  Gen gen(36);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [b, c] = family_sol3(gen.sol3());
    EXPECT_TRUE(lemma_stepa_check(b, c, 1e-10).overall());
  }
}

TEST(StepProperty, ChevaEquivalence) {
  Gen gen(37);
  for (int trial = 0; trial < 20000; ++trial) {
    const complex a = gen.unimodular(), b = gen.unimodular(), g = gen.unimodular(), d = gen.unimodular();
    EXPECT_EQ(collinear_unimodular(a, b, g, d), collinear_unimodular_algebraic(a, b, g, d));
  }
}

TEST(StepProperty, ChevaStructuredFamilies) {
  Gen gen(38);
  for (int trial = 0; trial < 2000; ++trial) {
    const complex a = gen.unimodular(), g = gen.unimodular(), d = gen.unimodular();
    EXPECT_TRUE(collinear_unimodular(a, a, g, d));
    EXPECT_TRUE(collinear_unimodular(g, d, a, a));
    const complex b = gen.unimodular();
    const complex last = 1.0 / (a * b * g);
    const complex unit = last / std::abs(last);
    EXPECT_TRUE(collinear_unimodular(a, b, g, unit));
    EXPECT_TRUE(collinear_unimodular_algebraic(a, b, g, unit));
  }
}

TEST(StepProperty, RigidityLengthThree) {
  Gen gen(39);
  for (int trial = 0; trial < 40; ++trial) {
    const StepVector b{1.0, gen.complex_in_disc(2.0), std::polar(gen.uniform(0.2, 2.0), gen.angle())};
    for (const auto& c : solve_partners(b)) {
      const auto k = classify_pair(b, c, 1e-6);
      EXPECT_TRUE(k.trivial || k.mp1 || k.mp2);
    }
  }
}
