#ifndef ORLICZSM_ORLICZ_HPP
#define ORLICZSM_ORLICZ_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orliczsm/extended_real.hpp"
#include "orliczsm/spectrum.hpp"

namespace orliczsm {

enum class OrliczFamily { power, exp_minus_one, power_log };

/// Convex nondecreasing gauge M with M(0) = 0 and M(t) -> inf.
///
/// Built-in families:
///   power(p)       M(t) = t^p,            p >= 1
///   exp_minus_one  M(t) = e^t - 1
///   power_log(p)   M(t) = t^p ln(1 + t),  p >= 1
class OrliczFunction {
 public:
  static OrliczFunction power(double p);
  static OrliczFunction exp_minus_one();
  static OrliczFunction power_log(double p);

  OrliczFamily family() const noexcept { return family_; }
  /// Exponent p for power and power_log; 0 for exp_minus_one.
  double exponent() const noexcept { return p_; }

  double operator()(double t) const;
  /// Right derivative p(t), so that M(u) = int_0^u p(t) dt.
  double right_derivative(double t) const;
  /// Smallest t >= 0 with M(t) = y.
  double inverse(double y) const;
  /// Closed-form complementary function where one is known.
  std::optional<ExtendedReal> closed_form_conjugate(double v) const;
  /// p when M(ct) = c^p M(t) for all c, t >= 0.
  std::optional<double> homogeneity_degree() const noexcept;

  std::string describe() const;

  friend bool operator==(const OrliczFunction&, const OrliczFunction&) = default;

 private:
  OrliczFunction(OrliczFamily family, double p) : family_(family), p_(p) {}

  OrliczFamily family_;
  double p_;
};

/// Result of sampling the Orlicz-function axioms on a grid.
struct InvariantCheck {
  bool passed = true;
  std::vector<std::string> failures;
};

/// Checks M(0) = 0, monotonicity, midpoint convexity, growth, monotonicity
/// of the right derivative and M(u) = int_0^u p on a log-spaced grid of
/// `grid` points over [1e-6, 1e2].
InvariantCheck check_orlicz_invariants(const std::function<double(double)>& m,
                                       const std::function<double(double)>& p,
                                       int grid = 1024);
InvariantCheck check_orlicz_invariants(const OrliczFunction& phi, int grid = 1024);

/// sup{uv - M(u) : u >= 0}. Uses the closed form when available.
ExtendedReal conjugate(const OrliczFunction& phi, double v);
/// Same supremum by golden-section search with a doubling upper bracket;
/// returns +inf when the bracket exceeds 1e100 without an interior maximizer.
ExtendedReal conjugate_numeric(const OrliczFunction& phi, double v);

struct NormOptions {
  double rel_tol = 1e-12;
  /// For power(p), return (sum m_k^p)^{1/p} directly instead of bisecting.
  bool homogeneous_closed_form = true;
};

/// inf{a > 0 : sum_k M(m_k / a) <= 1} over nonnegative magnitudes m_k,
/// solved by bisection; the midpoint of the final bracket is returned.
double luxemburg_norm(const OrliczFunction& phi, std::span<const double> magnitudes,
                      NormOptions opts = {});
/// Throws std::invalid_argument if f has non-finite coefficients.
double luxemburg_norm(const OrliczFunction& phi, const CoeffSeq& f, NormOptions opts = {});

/// sup{sum lambda_k |f^(k)| : sum conj(lambda_k) <= 1}, evaluated through the
/// scalar dual form inf_{kappa > 0} (1 + sum M(kappa |f^(k)|)) / kappa.
double orlicz_norm(const OrliczFunction& phi, std::span<const double> magnitudes);
double orlicz_norm(const OrliczFunction& phi, const CoeffSeq& f);

enum class WitnessNormalization {
  /// Scale f to unit Luxemburg norm before taking lambda_k = p(|f^(k)|).
  luxemburg,
  /// Scale f to unit Orlicz norm (the normalization under which
  /// sum conj(lambda_k) <= 1 is guaranteed).
  orlicz,
};

struct WitnessEntry {
  int k = 0;
  double lambda = 0.0;
  /// lambda |g^(k)| - M(|g^(k)|) - conj(lambda); zero up to roundoff.
  double young_gap = 0.0;
};

struct Lemma3Witness {
  WitnessNormalization normalization = WitnessNormalization::luxemburg;
  /// Norm the coefficients were divided by.
  double scale = 0.0;
  std::vector<WitnessEntry> entries;
  /// sum conj(lambda_k).
  ExtendedReal conjugate_sum;
  /// sum lambda_k |g^(k)| for the normalized g.
  double pairing = 0.0;
  /// Frequencies whose Young gap exceeds the tolerance.
  std::vector<int> young_violations;
};

/// Dual sequence lambda*_k = p(|g^(k)|) for the normalized g = f / scale.
/// Throws std::invalid_argument for f = 0.
Lemma3Witness lemma3_witness(const OrliczFunction& phi, const CoeffSeq& f,
                             WitnessNormalization normalization = WitnessNormalization::luxemburg,
                             double tol = 1e-9);

}  // namespace orliczsm

#endif  // ORLICZSM_ORLICZ_HPP
