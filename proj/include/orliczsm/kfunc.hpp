#ifndef ORLICZSM_KFUNC_HPP
#define ORLICZSM_KFUNC_HPP

#include <optional>

#include "orliczsm/orlicz.hpp"
#include "orliczsm/spectrum.hpp"

namespace orliczsm {

struct KOptions {
  /// Frequency band |k| <= N searched for h; defaults to the degree of f.
  std::optional<int> band;
  /// Per-coefficient shrinkage polish after the Fourier-sum scan.
  bool polish = true;
  int sweeps = 3;
};

/// Upper estimate of K_alpha(delta, f)_M = inf ||f - h|| + delta^alpha ||h^(alpha)||.
struct KEstimate {
  double value = 0.0;
  /// m of the best Fourier-sum candidate S_m(f); -1 for h = 0.
  int minimizer_degree = -1;
  int candidates_tried = 0;
  /// True when the polish phase lowered the scan value.
  bool refine_used = false;
  /// Band N that h was restricted to.
  int band = 0;
};

/// Scans h = 0 and h = S_m(f), m = 0..N, then optionally polishes with
/// coordinate descent over h^(k) = s_k f^(k), s_k in [0, 1]. Ties go to
/// the smallest degree.
KEstimate k_functional(const CoeffSeq& f, const OrliczFunction& phi, double alpha, double delta,
                       KOptions opts = {});

/// Objective ||f - h|| + delta^alpha ||h^(alpha)|| for a given h.
double k_objective(const CoeffSeq& f, const CoeffSeq& h, const OrliczFunction& phi, double alpha,
                   double delta);

struct Lemma4Sandwich {
  double low = 0.0;
  double mid = 0.0;
  double high = 0.0;
};

/// low  = (sin(nh/2) / (n/2))^alpha ||tau^(alpha)||,
/// mid  = ||Delta_h^alpha tau||,
/// high = h^alpha ||tau^(alpha)||.
/// Requires supp(tau) within |k| <= n and 0 <= h <= 2 pi / n.
Lemma4Sandwich lemma4_sandwich(const CoeffSeq& tau, const OrliczFunction& phi, double alpha, int n,
                               double h);

}  // namespace orliczsm

#endif  // ORLICZSM_KFUNC_HPP
