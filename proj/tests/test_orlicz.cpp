#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "orliczsm/orlicz.hpp"
#include "support.hpp"

using namespace orliczsm;
using orliczsm::testing::Rng;

namespace {

// Oracle: sup of u v - M(u) on a uniform grid.
double brute_conjugate(const OrliczFunction& phi, double v, double u_max, double step) {
  double best = 0.0;
  for (double u = 0.0; u <= u_max; u += step) best = std::max(best, u * v - phi(u));
  return best;
}

double lp_norm(const std::vector<double>& m, double p) {
  double s = 0.0;
  for (double x : m) s += std::pow(x, p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

TEST(OrliczOracle, BruteForceConjugateMatchesClosedForm) {
  const auto phi = OrliczFunction::power(2.0);
  EXPECT_NEAR(brute_conjugate(phi, 2.0, 4.0, 1e-6), 1.0, 1e-10);
  EXPECT_NEAR(conjugate(phi, 2.0).value(), 1.0, 1e-12);
}

TEST(OrliczOracle, BruteForceConjugateMatchesNumericSearch) {
  for (const auto& phi : orliczsm::testing::builtin_orlicz()) {
    if (phi == OrliczFunction::power(1.0)) continue;
    for (double v : {0.3, 1.0, 2.5, 7.0}) {
      const double oracle = brute_conjugate(phi, v, 1000.0, 1e-3);
      const auto numeric = conjugate_numeric(phi, v);
      ASSERT_TRUE(numeric.is_finite()) << phi.describe() << " v=" << v;
      // Grid sup undershoots by at most O(step^2 M'').
      EXPECT_GE(numeric.value(), oracle - 1e-9) << phi.describe() << " v=" << v;
      EXPECT_LE(numeric.value(), oracle + 1e-5 * std::max(1.0, oracle)) << phi.describe() << " v=" << v;
      EXPECT_NEAR(conjugate(phi, v).value(), numeric.value(), 1e-8) << phi.describe() << " v=" << v;
    }
  }
}

TEST(OrliczOracle, LpClosedFormsViaBisection) {
  Rng rng(11);
  NormOptions bisect;
  bisect.homogeneous_closed_form = false;
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const auto phi = OrliczFunction::power(p);
    for (int i = 0; i < 50; ++i) {
      const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 64, 100);
      const double oracle = lp_norm(f.magnitudes(), p);
      EXPECT_NEAR(luxemburg_norm(phi, f, bisect), oracle, 1e-10 * std::max(1.0, oracle));
      EXPECT_NEAR(luxemburg_norm(phi, f), oracle, 1e-12 * std::max(1.0, oracle));
    }
  }
}

TEST(OrliczOracle, PowerOrliczNormHolderDual) {
  // For power(p) the dual sup is p (p-1)^{-1/q} ||c||_p, and ||c||_1 for p = 1.
  Rng rng(12);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const auto phi = OrliczFunction::power(p);
    for (int i = 0; i < 20; ++i) {
      const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 16, 20);
      const double lp = lp_norm(f.magnitudes(), p);
      const double factor = p == 1.0 ? 1.0 : p * std::pow(p - 1.0, -(p - 1.0) / p);
      EXPECT_NEAR(orlicz_norm(phi, f), factor * lp, 1e-9 * std::max(1.0, lp)) << "p=" << p;
    }
  }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(OrliczFunction::power(2.0), 2.0).value(), 1.0);
  for (const auto& phi : orliczsm::testing::builtin_orlicz()) {
    EXPECT_EQ(conjugate(phi, 0.0).value(), 0.0) << phi.describe();
  }
  EXPECT_EQ(conjugate(OrliczFunction::power(1.0), 0.5).value(), 0.0);
  EXPECT_TRUE(conjugate(OrliczFunction::power(1.0), 2.0).is_infinite());
  EXPECT_TRUE(conjugate_numeric(OrliczFunction::power(1.0), 2.0).is_infinite());
}

TEST(Conjugate, ExpMinusOneClosedForm) {
  const auto phi = OrliczFunction::exp_minus_one();
  EXPECT_EQ(conjugate(phi, 0.5).value(), 0.0);
  const double v = 3.0;
  EXPECT_NEAR(conjugate(phi, v).value(), v * std::log(v) - v + 1.0, 1e-14);
}

TEST(Conjugate, YoungInequalityGrid) {
  for (const auto& phi : orliczsm::testing::builtin_orlicz()) {
    for (double u = 0.0; u <= 5.0; u += 0.25) {
      for (double v = 0.0; v <= 5.0; v += 0.25) {
        const auto c = conjugate(phi, v);
        if (c.is_infinite()) continue;
        EXPECT_LE(u * v, phi(u) + c.value() + 1e-9) << phi.describe() << " u=" << u << " v=" << v;
      }
    }
  }
}

TEST(OrliczFunction, BuiltinsPassInvariantSuite) {
  for (const auto& phi : orliczsm::testing::builtin_orlicz()) {
    const auto check = check_orlicz_invariants(phi);
    EXPECT_TRUE(check.passed) << phi.describe() << ": "
                              << (check.failures.empty() ? "" : check.failures.front());
  }
}

TEST(OrliczFunction, InvariantSuiteRejectsNonConvex) {
  auto m = [](double t) { return std::sqrt(t); };
  auto p = [](double t) { return t > 0.0 ? 0.5 / std::sqrt(t) : 0.0; };
  EXPECT_FALSE(check_orlicz_invariants(m, p).passed);
}

TEST(OrliczFunction, InvariantSuiteRejectsBoundedGauge) {
  auto m = [](double t) { return std::min(t, 1.0); };
  auto p = [](double t) { return t < 1.0 ? 1.0 : 0.0; };
  EXPECT_FALSE(check_orlicz_invariants(m, p).passed);
}

TEST(OrliczFunction, FactoriesRejectSubLinearExponent) {
  EXPECT_THROW(OrliczFunction::power(0.5), std::invalid_argument);
  EXPECT_THROW(OrliczFunction::power_log(0.9), std::invalid_argument);
}

TEST(OrliczFunction, InverseRoundTrip) {
  for (const auto& phi : orliczsm::testing::builtin_orlicz()) {
    for (double y : {1e-6, 0.1, 1.0, 10.0, 1e4}) {
      EXPECT_NEAR(phi(phi.inverse(y)), y, 1e-9 * y) << phi.describe();
    }
  }
}

TEST(LuxemburgNorm, Examples) {
  EXPECT_EQ(luxemburg_norm(OrliczFunction::power(2.0), CoeffSeq{}), 0.0);
  EXPECT_EQ(luxemburg_norm(OrliczFunction::power(2.0), CoeffSeq{{1, 3.0}, {2, 4.0}}), 5.0);
  EXPECT_EQ(luxemburg_norm(OrliczFunction::power(1.0), CoeffSeq{{-1, 1.0}, {0, 2.0}, {3, 3.0}}), 6.0);
}

TEST(LuxemburgNorm, BisectionMeetsToleranceForNonHomogeneous) {
  const auto phi = OrliczFunction::exp_minus_one();
  const CoeffSeq f{{0, 0.7}, {4, Complex(0.2, -1.1)}};
  const double a = luxemburg_norm(phi, f);
  double modular = 0.0;
  for (double m : f.magnitudes()) modular += phi(m / a);
  EXPECT_NEAR(modular, 1.0, 1e-10);
}

TEST(LuxemburgNorm, RejectsNonFinite) {
  const CoeffSeq f{{1, std::numeric_limits<double>::infinity()}};
  EXPECT_THROW(luxemburg_norm(OrliczFunction::power(2.0), f), std::invalid_argument);
}

TEST(LuxemburgNorm, HomogeneityAndTriangle) {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto phi = orliczsm::testing::random_orlicz(rng);
    const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 12, 16);
    const CoeffSeq g = orliczsm::testing::random_coeffs(rng, 12, 16);
    const Complex c(orliczsm::testing::uniform(rng, -3, 3), orliczsm::testing::uniform(rng, -3, 3));
    const double nf = luxemburg_norm(phi, f);
    EXPECT_NEAR(luxemburg_norm(phi, c * f), std::abs(c) * nf, 1e-10 * std::max(1.0, std::abs(c) * nf));
    EXPECT_LE(luxemburg_norm(phi, f + g), nf + luxemburg_norm(phi, g) + 1e-10);
  }
}

TEST(OrliczNorm, Examples) {
  EXPECT_EQ(orlicz_norm(OrliczFunction::power(2.0), CoeffSeq{}), 0.0);
  EXPECT_NEAR(orlicz_norm(OrliczFunction::power(2.0), CoeffSeq{{1, 1.0}}), 2.0, 1e-10);
  EXPECT_NEAR(orlicz_norm(OrliczFunction::power(1.0), CoeffSeq{{1, 1.0}, {2, 2.0}}), 3.0, 1e-10);
}

TEST(OrliczNorm, SandwichAndDualFeasibility) {
  Rng rng(14);
  for (int i = 0; i < 60; ++i) {
    const auto phi = orliczsm::testing::random_orlicz(rng);
    const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 10, 12);
    const double lux = luxemburg_norm(phi, f);
    const double orl = orlicz_norm(phi, f);
    EXPECT_GE(orl, lux - 1e-9);
    EXPECT_LE(orl, 2.0 * lux + 1e-9);
    // Random lambda scaled onto the constraint set sum conj(lambda) <= 1.
    const auto mags = f.magnitudes();
    std::vector<double> lambda(mags.size());
    for (double& l : lambda) l = orliczsm::testing::uniform(rng, 0.0, 3.0);
    auto conj_sum = [&](double s) {
      ExtendedReal total;
      for (double l : lambda) total += conjugate(phi, s * l);
      return total;
    };
    double lo = 0.0;
    double hi = 1.0;
    while (conj_sum(hi) <= ExtendedReal(1.0)) hi *= 2.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (conj_sum(mid) <= ExtendedReal(1.0) ? lo : hi) = mid;
    }
    double pairing = 0.0;
    for (std::size_t k = 0; k < mags.size(); ++k) pairing += lo * lambda[k] * mags[k];
    EXPECT_LE(pairing, orl + 1e-8) << phi.describe();
  }
}

TEST(Lemma3Witness, Examples) {
  const auto w2 = lemma3_witness(OrliczFunction::power(2.0), CoeffSeq{{1, 1.0}});
  ASSERT_EQ(w2.entries.size(), 1u);
  EXPECT_NEAR(w2.entries[0].lambda, 2.0, 1e-10);
  const auto w1 = lemma3_witness(OrliczFunction::power(1.0), CoeffSeq{{1, 1.0}});
  EXPECT_NEAR(w1.entries[0].lambda, 1.0, 1e-12);
  EXPECT_THROW(lemma3_witness(OrliczFunction::power(2.0), CoeffSeq{}), std::invalid_argument);
}

TEST(Lemma3Witness, YoungEqualityPerTerm) {
  Rng rng(15);
  for (int i = 0; i < 40; ++i) {
    const auto phi = orliczsm::testing::random_orlicz(rng);
    const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 8, 10);
    const auto w = lemma3_witness(phi, f);
    EXPECT_TRUE(w.young_violations.empty()) << phi.describe();
  }
}

TEST(Lemma3Witness, OrliczNormalizationGuarantees) {
  Rng rng(16);
  for (int i = 0; i < 40; ++i) {
    const auto phi = orliczsm::testing::random_orlicz(rng);
    const CoeffSeq f = orliczsm::testing::random_coeffs(rng, 8, 10);
    const auto w = lemma3_witness(phi, f, WitnessNormalization::orlicz);
    EXPECT_LE(w.conjugate_sum, ExtendedReal(1.0 + 1e-7)) << phi.describe();
    // g = f / ||f||*, so the pairing is bounded by ||g||* = 1.
    EXPECT_LE(w.pairing, 1.0 + 1e-7) << phi.describe();
  }
}

TEST(Lemma3Witness, LuxemburgNormalizationExceedsDualBallForSteepPower) {
  const auto w = lemma3_witness(OrliczFunction::power(3.0), CoeffSeq{{1, 1.0}});
  EXPECT_NEAR(w.conjugate_sum.value(), 2.0, 1e-9);
}

TEST(ExtendedReal, InfinityAbsorbs) {
  const ExtendedReal inf = ExtendedReal::infinity();
  EXPECT_TRUE((inf + ExtendedReal(3.0)).is_infinite());
  EXPECT_TRUE(ExtendedReal(1e300) < inf);
  EXPECT_EQ(ExtendedReal(2.0) + ExtendedReal(3.0), ExtendedReal(5.0));
  EXPECT_EQ(inf.to_string(), "+inf");
  EXPECT_THROW(ExtendedReal(-1.0), std::invalid_argument);
}
