#ifndef ORLICZSM_VERIFY_HPP
#define ORLICZSM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orliczsm/orlicz.hpp"
#include "orliczsm/spectrum.hpp"

namespace orliczsm {

/// Majorant omega(delta) on [0, 1] for the classes S_M H^omega_alpha.
class MajorantOmega {
 public:
  /// delta^r.
  static MajorantOmega power(double r);
  /// delta^r (1 + ln(1/delta)); nondecreasing on [0, 1] only for r >= 1.
  static MajorantOmega power_log(double r);
  /// Piecewise-linear interpolation of values at equispaced nodes on [0, 1].
  static MajorantOmega table(std::vector<double> values);

  double operator()(double delta) const;
  /// r for the power and power_log rules.
  std::optional<double> exponent() const;
  std::string describe() const;

 private:
  enum class Rule { power, power_log, table };
  MajorantOmega(Rule rule, double r, std::vector<double> values)
      : rule_(rule), r_(r), values_(std::move(values)) {}

  Rule rule_;
  double r_;
  std::vector<double> values_;
};

struct MajorantCheck {
  bool passed = true;
  std::vector<std::string> failures;
};

/// Conditions 1)-4) on a uniform grid: continuity (increments shrink under
/// refinement), monotonicity, positivity on (0, 1] and omega(0+) = 0.
MajorantCheck validate_majorant(const MajorantOmega& omega, int grid = 1024);

struct Sample {
  std::string input;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// Outcome of one verification sweep. `summary` carries named derived
/// quantities (e.g. the lower equivalence constant) beyond the single
/// empirical constant.
struct Report {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  double tolerance = 0.0;
  std::vector<Sample> samples;
  double empirical_constant = 0.0;
  bool passed = false;
  std::vector<std::pair<std::string, double>> summary;
  std::vector<std::string> notes;

  std::optional<double> summary_value(const std::string& key) const;
};

/// Thresholds operationalizing O(.) claims as bounded-ratio tests.
struct BoundednessRule {
  /// (B_alpha): max q_n <= median_factor * median q_n.
  double median_factor = 10.0;
  /// (B_alpha): the increment of q over the last doubling must be at most
  /// this fraction of the increment three doublings earlier.
  double increment_decay = 0.8;
  /// Sweeps: the running sup at the start of the last quartile is within
  /// this relative slack of the global sup.
  double stabilization = 0.05;
};

/// True when every ratio is finite and the running sup over the first three
/// quarters of the sequence is within `slack` of the global sup.
bool running_sup_stabilizes(std::span<const double> ratios, double slack);
/// Same test for the running inf (reciprocal ratios).
bool running_inf_stabilizes(std::span<const double> ratios, double slack);

/// q_n = sum_{v<=n} v^{alpha-1} omega(1/v) / (n^alpha omega(1/n)), n <= n_max.
Report b_alpha_check(const MajorantOmega& omega, double alpha, int n_max,
                     const BoundednessRule& rule = {});

struct ClassifyOptions {
  int modulus_grid = 512;
  /// delta = 1/n with n on a geometric grid of this many points per octave.
  int points_per_octave = 2;
  BoundednessRule rule;
};

/// Both directions of the characterization of S_M H^omega_alpha:
/// sup_n E_n(f) / omega(1/n) and sup_delta omega_alpha(f, delta) / omega(delta).
/// Throws std::invalid_argument when omega fails conditions 1)-4).
Report classify(const CoeffSeq& f, const OrliczFunction& phi, const MajorantOmega& omega,
                double alpha, int n_max, const ClassifyOptions& opts = {});

/// Classification from a best-approximation sequence E_1..E_{n_max} alone;
/// the modulus direction is replaced by the inverse-theorem majorant
/// n^{-alpha} sum_{v<=n} v^{alpha-1} E_v.
Report classify_sequence(std::span<const double> best_approximations, const MajorantOmega& omega,
                         double alpha, const ClassifyOptions& opts = {});

/// f^(k) = |k|^{-beta-1/2} for 1 <= |k| <= band.
CoeffSeq power_decay_model(double beta, int band);

struct RatesOptions {
  int j_min = 3;
  int j_max = 12;
  int modulus_grid = 128;
  double slope_tolerance = 0.15;
  /// Maximum max/min spread of omega / (t^alpha |ln t|) when beta = alpha.
  double log_ratio_spread = 3.0;
};

/// Rate experiment on the |k|^{-beta-1/2} model: measures omega_alpha(f, 2^-j)
/// and compares the fitted log-log slope with min(beta, alpha).
Report corollary2_rates(double beta, double alpha, const OrliczFunction& phi, int band,
                        const RatesOptions& opts = {});

enum class FamilyKind { random_sparse, random_band, lacunary, polynomial_decay };

std::string to_string(FamilyKind kind);
std::optional<FamilyKind> family_from_string(const std::string& name);

/// Generator family for theorem sweeps.
///   random_sparse     1..16 frequencies uniform in [-band, band], N(0,1) complex values
///   random_band       every |k| <= band, N(0,1) complex values
///   lacunary          k = +-2^j <= band, N(0,1) values damped by 2^{-j gamma}, gamma ~ U[0.25, 1.5]
///   polynomial_decay  |k|^{-gamma-1/2} e^{i theta_k}, gamma ~ U[0.25, 2.5], 1 <= |k| <= band
struct FamilySpec {
  FamilyKind kind = FamilyKind::random_sparse;
  std::uint64_t seed = 0;
  int count = 3;
  int band = 256;
};

std::vector<CoeffSeq> generate_family(const FamilySpec& spec);

/// All four families with a shared seed, count and band.
std::vector<FamilySpec> all_families(std::uint64_t seed, int count, int band);

struct SweepOptions {
  int modulus_grid = 128;
  BoundednessRule rule;
  /// K-functional polish; costly for wide bands.
  bool polish = false;
  int delta_points = 16;
  double delta_min = 1e-3;
  double delta_max = 1.0;
};

/// sup E_n(f) / omega_alpha(f, 1/n) over the families and n = 1..n_max.
Report direct_report(std::span<const FamilySpec> families, const OrliczFunction& phi, double alpha,
                     int n_max, const SweepOptions& opts = {});

/// sup omega_alpha(f, 1/n) / (n^{-alpha} sum_{v<=n} v^{alpha-1} E_v(f)).
Report inverse_report(std::span<const FamilySpec> families, const OrliczFunction& phi,
                      double alpha, int n_max, const SweepOptions& opts = {});

/// K_alpha(delta, f) / omega_alpha(f, delta) over a log-spaced delta grid.
Report equivalence_report(std::span<const FamilySpec> families, const OrliczFunction& phi,
                          double alpha, const SweepOptions& opts = {});

}  // namespace orliczsm

#endif  // ORLICZSM_VERIFY_HPP
