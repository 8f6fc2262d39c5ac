#ifndef ORLICZSM_FRACDIFF_HPP
#define ORLICZSM_FRACDIFF_HPP

#include "orliczsm/orlicz.hpp"
#include "orliczsm/spectrum.hpp"

namespace orliczsm {

/// Generalized binomial coefficient alpha (alpha-1) ... (alpha-j+1) / j!.
double binom(double alpha, int j);

/// inf{k in N : k >= alpha}, realized as ceil(alpha) (0 for alpha = 0).
int ceil_order(double alpha);

/// K(alpha) = sum_j |binom(alpha, j)|, summed until the increment drops
/// below 1e-14 or one million terms have been added.
double k_constant(double alpha);

/// (1 - e^{-ikh})^alpha on the principal branch.
Complex difference_multiplier(int k, double alpha, double h);

/// Coefficients of the fractional difference Delta_h^alpha f.
CoeffSeq frac_difference(const CoeffSeq& f, double alpha, double h);

/// Coefficient-domain partial sum of the defining binomial series,
/// sum_{j<=J} (-1)^j binom(alpha, j) e^{-ikjh} f^(k). Exact for integer
/// alpha once J >= alpha.
CoeffSeq frac_difference_series(const CoeffSeq& f, double alpha, double h, int cutoff);

/// ||Delta_h^alpha f||_M without materializing the difference; only
/// |1 - e^{-ikh}|^alpha = (2 |sin(kh/2)|)^alpha enters the norm.
double difference_norm(const OrliczFunction& phi, const CoeffSeq& f, double alpha, double h);

struct ModulusOptions {
  int grid = 512;
  double refine_tol = 1e-10;
};

struct ModulusEstimate {
  double value = 0.0;
  /// Shift at which the supremum was found (0 for alpha = 0).
  double argmax = 0.0;
  /// Width of the final golden-section bracket around argmax.
  double search_tolerance = 0.0;
};

/// omega_alpha(f, delta) = sup_{|h| <= delta} ||Delta_h^alpha f||_M, and the
/// Luxemburg norm of f for alpha = 0. The supremum is taken over [0, delta]
/// (the norm is even in h) on a uniform grid refined by golden section
/// around the best grid point.
ModulusEstimate modulus_estimate(const CoeffSeq& f, const OrliczFunction& phi, double alpha,
                                 double delta, ModulusOptions opts = {});

double modulus(const CoeffSeq& f, const OrliczFunction& phi, double alpha, double delta,
               int grid = 512);

}  // namespace orliczsm

#endif  // ORLICZSM_FRACDIFF_HPP
