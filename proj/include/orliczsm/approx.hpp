#ifndef ORLICZSM_APPROX_HPP
#define ORLICZSM_APPROX_HPP

#include "orliczsm/orlicz.hpp"
#include "orliczsm/spectrum.hpp"

namespace orliczsm {

/// Best approximation E_n(f)_M by trigonometric polynomials of degree
/// n - 1, i.e. the Luxemburg norm of the tail {f^(k) : |k| >= n}.
double best_approx(const CoeffSeq& f, const OrliczFunction& phi, int n);

/// Parameters of K_n(t) = b_p (sin(pt/2) / sin(t/2))^{2 k0}.
struct KernelSpec {
  int n = 1;
  int k0 = 1;
  int p = 1;
  double b_p = 0.0;

  /// Trigonometric degree k0 (p - 1); never exceeds n / 2.
  int degree() const noexcept { return k0 * (p - 1); }
};

struct JacksonKernel {
  KernelSpec spec;
  CoeffSeq coefficients;

  /// Closed-form value b_p (sin(pt/2) / sin(t/2))^{2 k0}.
  double operator()(double t) const;
};

/// Jackson kernel of order n serving moment order r: k0 = ceil((r + 2) / 2),
/// p = floor(n / (2 k0)) + 1. Coefficients come from exact convolution of
/// the all-ones sequence of length p with itself 2 k0 times, scaled so
/// that the k = 0 coefficient is 1/(2 pi).
JacksonKernel jackson_kernel(int n, int r);

/// Trigonometric polynomial sigma_{n-1} of degree <= n - 1 built from the
/// kernel K_{n-1} (moment order alpha) for integer alpha >= 1:
///   (f - sigma)^(k) = f^(k) (-1)^alpha sum_{j=0}^alpha (-1)^j binom(alpha, j) 2 pi K^(kj).
CoeffSeq jackson_approximant(const CoeffSeq& f, int alpha, int n);

struct BoundPair {
  double lhs = 0.0;
  double bound = 0.0;
};

/// (||tau^psi||_M, ||tau||_M / eps_n) with eps_n = min_{0<|k|<=n} |psi_k|.
/// Throws when tau has support beyond n.
BoundPair psi_bernstein_ratio(const CoeffSeq& tau, const OrliczFunction& phi,
                              const PsiWeights& psi, int n);

/// (E_n(f), eps_n E_n(f^psi)) with eps_n = max_{|k|>=n} |psi_k|: n^{-r} for
/// fractional weights, and the maximum over supp(f) with |k| >= n for
/// explicit tables.
BoundPair prop1_ratio(const CoeffSeq& f, const OrliczFunction& phi, const PsiWeights& psi,
                      int n);

}  // namespace orliczsm

#endif  // ORLICZSM_APPROX_HPP
