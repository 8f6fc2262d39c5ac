#include "orliczsm/fracdiff.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "orliczsm/search.hpp"

namespace orliczsm {

double binom(double alpha, int j) {
  if (j < 0) throw std::invalid_argument(fmt::format("binom needs j >= 0, got {}", j));
  double b = 1.0;
  for (int i = 1; i <= j; ++i) b *= (alpha - (i - 1)) / i;
  return b;
}

int ceil_order(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument(fmt::format("order must be >= 0, got {}", alpha));
  return static_cast<int>(std::ceil(alpha));
}

double k_constant(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument(fmt::format("K(alpha) needs alpha > 0, got {}", alpha));
  double b = 1.0;
  double sum = 1.0;
  for (int j = 1; j <= 1'000'000; ++j) {
    b *= (alpha - (j - 1)) / j;
    const double inc = std::abs(b);
    sum += inc;
    // For integer alpha the terms vanish exactly past j = alpha.
    if (inc < 1e-14 && (inc == 0.0 || j > alpha)) break;
  }
  return sum;
}

Complex difference_multiplier(int k, double alpha, double h) {
  const Complex base = 1.0 - std::polar(1.0, -static_cast<double>(k) * h);
  if (base == Complex{}) return alpha == 0.0 ? Complex{1.0} : Complex{};
  return std::exp(alpha * std::log(base));
}

CoeffSeq frac_difference(const CoeffSeq& f, double alpha, double h) {
  if (!(alpha > 0.0)) throw std::invalid_argument(fmt::format("difference order must be > 0, got {}", alpha));
  std::vector<Coefficient> out;
  out.reserve(f.size());
  for (const auto& e : f.entries()) {
    if (e.k == 0) continue;
    out.push_back({e.k, e.value * difference_multiplier(e.k, alpha, h)});
  }
  return CoeffSeq::from_entries(std::move(out));
}

CoeffSeq frac_difference_series(const CoeffSeq& f, double alpha, double h, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("series cutoff must be >= 0");
  std::vector<double> weights(static_cast<std::size_t>(cutoff) + 1);
  double b = 1.0;
  for (int j = 0; j <= cutoff; ++j) {
    if (j > 0) b *= (alpha - (j - 1)) / j;
    weights[j] = (j % 2 == 0) ? b : -b;
  }
  std::vector<Coefficient> out;
  out.reserve(f.size());
  for (const auto& e : f.entries()) {
    const double theta = -static_cast<double>(e.k) * h;
    Complex acc{};
    for (int j = 0; j <= cutoff; ++j) {
      if (weights[j] == 0.0) continue;
      acc += weights[j] * std::polar(1.0, theta * j);
    }
    out.push_back({e.k, acc * e.value});
  }
  return CoeffSeq::from_entries(std::move(out));
}

double difference_norm(const OrliczFunction& phi, const CoeffSeq& f, double alpha, double h) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("difference order must be >= 0");
  if (!f.all_finite()) throw std::invalid_argument("coefficient sequence has non-finite entries");
  if (alpha == 0.0) return luxemburg_norm(phi, f);
  std::vector<double> m;
  m.reserve(f.size());
  const bool square = alpha == 2.0;
  for (const auto& e : f.entries()) {
    if (e.k == 0) continue;
    const double s = 2.0 * std::abs(std::sin(0.5 * e.k * h));
    const double factor = alpha == 1.0 ? s : (square ? s * s : std::pow(s, alpha));
    m.push_back(std::abs(e.value) * factor);
  }
  return luxemburg_norm(phi, m);
}

ModulusEstimate modulus_estimate(const CoeffSeq& f, const OrliczFunction& phi, double alpha,
                                 double delta, ModulusOptions opts) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("modulus order must be >= 0");
  if (!(delta > 0.0)) throw std::invalid_argument(fmt::format("modulus needs delta > 0, got {}", delta));
  if (opts.grid < 2) throw std::invalid_argument("modulus grid needs at least 2 points");
  if (alpha == 0.0) return {luxemburg_norm(phi, f), 0.0, 0.0};

  auto g = [&](double h) { return difference_norm(phi, f, alpha, h); };
  const int n = opts.grid;
  const double spacing = delta / (n - 1);
  int best = 0;
  double best_value = g(0.0);
  for (int i = 1; i < n; ++i) {
    const double v = g(spacing * i);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  ModulusEstimate est{best_value, spacing * best, spacing};
  if (best_value == 0.0) return est;
  const double lo = spacing * std::max(0, best - 1);
  const double hi = std::min(delta, spacing * (best + 1));
  const auto r = golden_section_max(g, lo, hi, opts.refine_tol * std::max(1.0, delta));
  est.search_tolerance = r.bracket_width;
  if (r.value > est.value) {
    est.value = r.value;
    est.argmax = r.x;
  }
  return est;
}

double modulus(const CoeffSeq& f, const OrliczFunction& phi, double alpha, double delta,
               int grid) {
  return modulus_estimate(f, phi, alpha, delta, {.grid = grid}).value;
}

}  // namespace orliczsm
