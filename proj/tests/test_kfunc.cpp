#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "orliczsm/kfunc.hpp"
#include "support.hpp"

using namespace orliczsm;
using orliczsm::testing::Rng;
using orliczsm::testing::uniform;

namespace {

// Oracle: scan h = c f over c in [0, 1].
double scan_single_harmonic(const CoeffSeq& f, const OrliczFunction& phi, double alpha, double delta) {
  double best = luxemburg_norm(phi, f);
  for (int i = 0; i <= 100000; ++i) {
    const double c = i / 100000.0;
    best = std::min(best, k_objective(f, c * f, phi, alpha, delta));
  }
  return best;
}

}  // namespace

TEST(KfuncOracle, SingleHarmonicClosedForm) {
  const auto phi = OrliczFunction::power(2.0);
  const CoeffSeq f{{1, 1.0}};
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double delta : {0.01, 0.3, 1.0, 2.0, 10.0}) {
      const double closed = std::min(1.0, std::pow(delta, alpha));
      EXPECT_NEAR(scan_single_harmonic(f, phi, alpha, delta), closed, 1e-9);
      EXPECT_NEAR(k_functional(f, phi, alpha, delta).value, closed, 1e-9);
    }
  }
}

TEST(KFunctional, ConstantIsZero) {
  const auto est = k_functional(CoeffSeq{{0, 5.0}}, OrliczFunction::exp_minus_one(), 1.3, 0.4);
  EXPECT_EQ(est.value, 0.0);
  EXPECT_EQ(est.minimizer_degree, 0);
}

TEST(KFunctional, LargeDeltaFallsBackToZeroCandidate) {
  Rng rng(51);
  const CoeffSeq f = orliczsm::testing::random_nonconstant(rng, 8, 10);
  const auto phi = OrliczFunction::power(2.0);
  const auto est = k_functional(f, phi, 1.0, 1e6);
  EXPECT_LE(est.value, luxemburg_norm(phi, f) + 1e-12);
  EXPECT_EQ(est.minimizer_degree, -1);
}

TEST(KFunctional, CandidateDominanceAndBounds) {
  Rng rng(52);
  for (int i = 0; i < 20; ++i) {
    const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 10, 12);
    const auto phi = orliczsm::testing::random_orlicz(rng);
    const double alpha = uniform(rng, 0.3, 2.5);
    const double delta = std::exp(uniform(rng, std::log(1e-3), 0.0));
    const auto est = k_functional(f, phi, alpha, delta);
    EXPECT_GE(est.value, 0.0);
    EXPECT_LE(est.value, luxemburg_norm(phi, f) + 1e-12);
    for (int m = 0; m <= f.max_abs_frequency(); ++m) {
      EXPECT_LE(est.value, k_objective(f, fourier_sum(f, m), phi, alpha, delta) + 1e-12);
    }
  }
}

TEST(KFunctional, MonotoneInDeltaWithoutPolish) {
  Rng rng(53);
  KOptions scan_only;
  scan_only.polish = false;
  for (int i = 0; i < 10; ++i) {
    const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 10, 12);
    const auto phi = orliczsm::testing::random_orlicz(rng);
    double previous = 0.0;
    for (double delta = 1e-3; delta <= 1.0; delta *= 2.0) {
      const double v = k_functional(f, phi, 1.0, delta, scan_only).value;
      EXPECT_GE(v, previous - 1e-12);
      previous = v;
    }
  }
}

TEST(KFunctional, PolishNeverWorsensAndBandRestricts) {
  Rng rng(54);
  const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 10, 12);
  const auto phi = OrliczFunction::power_log(1.5);
  KOptions scan_only;
  scan_only.polish = false;
  const auto scan = k_functional(f, phi, 1.5, 0.2, scan_only);
  const auto polished = k_functional(f, phi, 1.5, 0.2);
  EXPECT_LE(polished.value, scan.value);
  KOptions narrow;
  narrow.band = 0;
  EXPECT_EQ(k_functional(f, phi, 1.5, 0.2, narrow).band, 0);
  EXPECT_THROW(k_functional(f, phi, 0.0, 0.2), std::invalid_argument);
  EXPECT_THROW(k_functional(f, phi, 1.0, 0.0), std::invalid_argument);
}

TEST(Lemma4, Examples) {
  const auto phi = OrliczFunction::power(2.0);
  const auto zero = lemma4_sandwich(CoeffSeq{{1, 1.0}}, phi, 1.0, 4, 0.0);
  EXPECT_EQ(zero.low, 0.0);
  EXPECT_EQ(zero.mid, 0.0);
  EXPECT_EQ(zero.high, 0.0);
  for (int n : {1, 3, 8}) {
    for (double alpha : {0.5, 1.0, 2.5}) {
      const auto s = lemma4_sandwich(CoeffSeq{{n, 1.0}}, phi, alpha, n, std::numbers::pi / n);
      EXPECT_NEAR(s.low, std::pow(2.0, alpha), 1e-10);
      EXPECT_NEAR(s.mid, std::pow(2.0, alpha), 1e-10);
    }
  }
  Rng rng(55);
  const CoeffSeq tau = orliczsm::testing::random_coeffs(rng, 10, 8);
  const auto s = lemma4_sandwich(tau, phi, 1.3, 8, 0.3);
  EXPECT_LE(s.low, s.mid + 1e-12);
  EXPECT_LE(s.mid, s.high + 1e-12);
  EXPECT_THROW(lemma4_sandwich(CoeffSeq{{9, 1.0}}, phi, 1.0, 8, 0.3), std::invalid_argument);
  EXPECT_THROW(lemma4_sandwich(tau, phi, 1.0, 8, 1.0), std::invalid_argument);
}
