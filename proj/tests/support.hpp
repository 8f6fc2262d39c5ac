#ifndef ORLICZSM_TESTS_SUPPORT_HPP
#define ORLICZSM_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "orliczsm/orlicz.hpp"
#include "orliczsm/spectrum.hpp"

namespace orliczsm::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// 1..max_support distinct frequencies in [-band, band], N(0,1) complex values.
inline CoeffSeq random_coeffs(Rng& rng, int max_support, int band) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Coefficient> entries;
  const int size = uniform_int(rng, 1, max_support);
  std::vector<int> used;
  for (int i = 0; i < size; ++i) {
    const int k = uniform_int(rng, -band, band);
    bool dup = false;
    for (int u : used) dup = dup || u == k;
    if (dup) continue;
    used.push_back(k);
    const double re = normal(rng);
    const double im = normal(rng);
    entries.push_back({k, {re, im}});
  }
  return CoeffSeq::from_entries(std::move(entries));
}

/// Nonzero sequence with every frequency nonzero.
inline CoeffSeq random_nonconstant(Rng& rng, int max_support, int band) {
  for (;;) {
    CoeffSeq f = random_coeffs(rng, max_support, band);
    f.set(0, 0.0);
    if (!f.empty()) return f;
  }
}

/// power(p), exp_minus_one or power_log(p) with p in [1, 3].
inline OrliczFunction random_orlicz(Rng& rng) {
  switch (uniform_int(rng, 0, 2)) {
    case 0:
      return OrliczFunction::power(uniform(rng, 1.0, 3.0));
    case 1:
      return OrliczFunction::exp_minus_one();
    default:
      return OrliczFunction::power_log(uniform(rng, 1.0, 3.0));
  }
}

inline std::vector<OrliczFunction> builtin_orlicz() {
  return {OrliczFunction::power(1.0), OrliczFunction::power(1.5), OrliczFunction::power(2.0),
          OrliczFunction::power(3.0), OrliczFunction::exp_minus_one(), OrliczFunction::power_log(1.0),
          OrliczFunction::power_log(2.0)};
}

}  // namespace orliczsm::testing

#endif  // ORLICZSM_TESTS_SUPPORT_HPP
