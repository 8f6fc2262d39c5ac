#include "orliczsm/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "orliczsm/search.hpp"

namespace orliczsm {

namespace {

void require_exponent(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument(fmt::format("Orlicz exponent must be >= 1, got {}", p));
  }
}

// Composite Simpson rule on [0, u].
template <class F>
double simpson(F&& f, double u, int intervals) {
  const double h = u / intervals;
  double sum = f(0.0) + f(u);
  for (int i = 1; i < intervals; ++i) sum += f(i * h) * ((i % 2) ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace

OrliczFunction OrliczFunction::power(double p) {
  require_exponent(p);
  return {OrliczFamily::power, p};
}

OrliczFunction OrliczFunction::exp_minus_one() { return {OrliczFamily::exp_minus_one, 0.0}; }

OrliczFunction OrliczFunction::power_log(double p) {
  require_exponent(p);
  return {OrliczFamily::power_log, p};
}

double OrliczFunction::operator()(double t) const {
  if (t <= 0.0) return 0.0;
  switch (family_) {
    case OrliczFamily::power:
      return p_ == 1.0 ? t : (p_ == 2.0 ? t * t : std::pow(t, p_));
    case OrliczFamily::exp_minus_one:
      return std::expm1(t);
    case OrliczFamily::power_log:
      return std::pow(t, p_) * std::log1p(t);
  }
  return 0.0;
}

double OrliczFunction::right_derivative(double t) const {
  t = std::max(t, 0.0);
  switch (family_) {
    case OrliczFamily::power:
      return p_ == 1.0 ? 1.0 : p_ * std::pow(t, p_ - 1.0);
    case OrliczFamily::exp_minus_one:
      return std::exp(t);
    case OrliczFamily::power_log: {
      const double lead = p_ == 1.0 ? std::log1p(t) : p_ * std::pow(t, p_ - 1.0) * std::log1p(t);
      return lead + std::pow(t, p_) / (1.0 + t);
    }
  }
  return 0.0;
}

double OrliczFunction::inverse(double y) const {
  if (y <= 0.0) return 0.0;
  switch (family_) {
    case OrliczFamily::power:
      return std::pow(y, 1.0 / p_);
    case OrliczFamily::exp_minus_one:
      return std::log1p(y);
    case OrliczFamily::power_log:
      break;
  }
  double lo = 0.0;
  double hi = 1.0;
  while ((*this)(hi) < y) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ((*this)(mid) < y ? lo : hi) = mid;
  }
  return hi;
}

std::optional<ExtendedReal> OrliczFunction::closed_form_conjugate(double v) const {
  if (v <= 0.0) return ExtendedReal{0.0};
  switch (family_) {
    case OrliczFamily::power: {
      if (p_ == 1.0) return v <= 1.0 ? ExtendedReal{0.0} : ExtendedReal::infinity();
      const double q = p_ / (p_ - 1.0);
      return ExtendedReal{(p_ - 1.0) * std::pow(v / p_, q)};
    }
    case OrliczFamily::exp_minus_one:
      return v <= 1.0 ? ExtendedReal{0.0} : ExtendedReal{v * std::log(v) - v + 1.0};
    case OrliczFamily::power_log:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> OrliczFunction::homogeneity_degree() const noexcept {
  if (family_ == OrliczFamily::power) return p_;
  return std::nullopt;
}

std::string OrliczFunction::describe() const {
  switch (family_) {
    case OrliczFamily::power:
      return fmt::format("power(p={})", p_);
    case OrliczFamily::exp_minus_one:
      return "exp_minus_one";
    case OrliczFamily::power_log:
      return fmt::format("power_log(p={})", p_);
  }
  return "unknown";
}

InvariantCheck check_orlicz_invariants(const std::function<double(double)>& m,
                                       const std::function<double(double)>& p, int grid) {
  InvariantCheck out;
  auto fail = [&](std::string msg) {
    out.passed = false;
    out.failures.push_back(std::move(msg));
  };
  if (grid < 8) throw std::invalid_argument("invariant grid needs at least 8 points");

  if (m(0.0) != 0.0) fail(fmt::format("M(0) = {} != 0", m(0.0)));

  std::vector<double> t(grid);
  std::vector<double> mt(grid);
  std::vector<double> pt(grid);
  const double lo = std::log(1e-6);
  const double hi = std::log(1e2);
  for (int i = 0; i < grid; ++i) {
    t[i] = std::exp(lo + (hi - lo) * i / (grid - 1));
    mt[i] = m(t[i]);
    pt[i] = p(t[i]);
    if (!(mt[i] >= 0.0)) fail(fmt::format("M({}) = {} is negative", t[i], mt[i]));
  }
  auto slack = [](double a, double b) {
    return 1e-13 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  for (int i = 0; i + 1 < grid; ++i) {
    if (mt[i + 1] < mt[i] - slack(mt[i], mt[i + 1])) {
      fail(fmt::format("M decreases between {} and {}", t[i], t[i + 1]));
      break;
    }
  }
  for (int i = 0; i + 1 < grid; ++i) {
    if (pt[i + 1] < pt[i] - slack(pt[i], pt[i + 1])) {
      fail(fmt::format("right derivative decreases between {} and {}", t[i], t[i + 1]));
      break;
    }
  }
  bool convex = true;
  for (int stride : {1, 7, 64}) {
    for (int i = 0; convex && i + stride < grid; ++i) {
      const double s = t[i];
      const double u = t[i + stride];
      const double mid = m(0.5 * (s + u));
      const double chord = 0.5 * (mt[i] + mt[i + stride]);
      if (mid > chord + slack(mid, chord)) {
        fail(fmt::format("midpoint convexity fails on [{}, {}]", s, u));
        convex = false;
      }
    }
  }
  const double far = m(1e12);
  if (!(far > 1e9)) fail(fmt::format("M(1e12) = {} does not exhibit growth", far));

  for (int i = 63; i < grid; i += 64) {
    const double integral = simpson(p, t[i], 4096);
    const double rel = std::abs(integral - mt[i]) / std::max(1e-300, std::abs(mt[i]));
    if (rel > 1e-5) {
      fail(fmt::format("M({}) = {} but integral of p gives {}", t[i], mt[i], integral));
      break;
    }
  }
  return out;
}

InvariantCheck check_orlicz_invariants(const OrliczFunction& phi, int grid) {
  return check_orlicz_invariants([&](double t) { return phi(t); },
                                 [&](double t) { return phi.right_derivative(t); }, grid);
}

ExtendedReal conjugate_numeric(const OrliczFunction& phi, double v) {
  if (!(v >= 0.0)) throw std::invalid_argument(fmt::format("conjugate needs v >= 0, got {}", v));
  if (v == 0.0) return ExtendedReal{0.0};
  auto objective = [&](double u) { return u * v - phi(u); };
  for (double upper = 1.0; upper <= 1e100; upper *= 2.0) {
    const auto r = golden_section_max(objective, 0.0, upper, 1e-13 * upper);
    if (r.x < upper * (1.0 - 1e-7)) return ExtendedReal{std::max(0.0, r.value)};
  }
  return ExtendedReal::infinity();
}

ExtendedReal conjugate(const OrliczFunction& phi, double v) {
  if (!(v >= 0.0)) throw std::invalid_argument(fmt::format("conjugate needs v >= 0, got {}", v));
  if (auto closed = phi.closed_form_conjugate(v)) return *closed;
  return conjugate_numeric(phi, v);
}

double luxemburg_norm(const OrliczFunction& phi, std::span<const double> magnitudes,
                      NormOptions opts) {
  double largest = 0.0;
  double total = 0.0;
  std::size_t count = 0;
  for (double m : magnitudes) {
    if (!std::isfinite(m) || m < 0.0) {
      throw std::invalid_argument(fmt::format("Luxemburg norm needs finite magnitudes, got {}", m));
    }
    if (m > 0.0) ++count;
    largest = std::max(largest, m);
    total += m;
  }
  if (largest == 0.0) return 0.0;

  // Work with magnitudes scaled by the largest one; the norm is homogeneous.
  std::vector<double> scaled;
  scaled.reserve(count);
  for (double m : magnitudes) {
    if (m > 0.0) scaled.push_back(m / largest);
  }

  const auto degree = phi.homogeneity_degree();
  double homogeneous_sum = 0.0;
  if (degree) {
    for (double m : scaled) homogeneous_sum += phi(m);
    if (opts.homogeneous_closed_form) return largest * std::pow(homogeneous_sum, 1.0 / *degree);
  }
  auto modular = [&](double a) {
    if (degree) return homogeneous_sum * std::pow(a, -*degree);
    double s = 0.0;
    for (double m : scaled) s += phi(m / a);
    return s;
  };

  // modular(a_lo) >= 1 >= modular(a_hi); the modular is nonincreasing in a.
  double a_lo = 1.0 / phi.inverse(1.0);
  double a_hi = (total / largest) / phi.inverse(1.0 / static_cast<double>(count));
  while (modular(a_lo) < 1.0) a_lo *= 0.5;
  while (modular(a_hi) > 1.0) a_hi *= 2.0;
  while (a_hi - a_lo > opts.rel_tol * a_hi) {
    const double mid = 0.5 * (a_lo + a_hi);
    if (mid <= a_lo || mid >= a_hi) break;
    (modular(mid) <= 1.0 ? a_hi : a_lo) = mid;
  }
  return largest * 0.5 * (a_lo + a_hi);
}

double luxemburg_norm(const OrliczFunction& phi, const CoeffSeq& f, NormOptions opts) {
  if (!f.all_finite()) throw std::invalid_argument("coefficient sequence has non-finite entries");
  const auto m = f.magnitudes();
  return luxemburg_norm(phi, m, opts);
}

double orlicz_norm(const OrliczFunction& phi, std::span<const double> magnitudes) {
  const double lux = luxemburg_norm(phi, magnitudes);
  if (lux == 0.0) return 0.0;
  std::vector<double> g;
  for (double m : magnitudes) {
    if (m > 0.0) g.push_back(m / lux);
  }
  const auto degree = phi.homogeneity_degree();
  double g_power_sum = 0.0;
  if (degree) {
    for (double x : g) g_power_sum += phi(x);
  }
  // Amemiya form in u = ln(kappa); unimodal because kappa * F'(kappa) is
  // nondecreasing.
  auto amemiya = [&](double u) {
    const double kappa = std::exp(u);
    double s = 0.0;
    if (degree) {
      s = g_power_sum * std::pow(kappa, *degree);
    } else {
      for (double x : g) s += phi(kappa * x);
    }
    return (1.0 + s) / kappa;
  };
  constexpr double u_min = -8.0;
  constexpr double u_max = 40.0;
  constexpr double step = 0.25;
  double best_u = 0.0;
  double best = amemiya(0.0);
  for (double u = u_min; u <= u_max; u += step) {
    const double v = amemiya(u);
    if (v < best) {
      best = v;
      best_u = u;
    }
  }
  const auto r = golden_section_min(amemiya, best_u - step, best_u + step, 1e-10);
  return lux * std::min(best, r.value);
}

double orlicz_norm(const OrliczFunction& phi, const CoeffSeq& f) {
  if (!f.all_finite()) throw std::invalid_argument("coefficient sequence has non-finite entries");
  if (f.empty()) return 0.0;
  const auto m = f.magnitudes();
  return orlicz_norm(phi, m);
}

Lemma3Witness lemma3_witness(const OrliczFunction& phi, const CoeffSeq& f,
                             WitnessNormalization normalization, double tol) {
  if (f.empty()) throw std::invalid_argument("lemma3_witness requires a nonzero sequence");
  Lemma3Witness w;
  w.normalization = normalization;
  w.scale = normalization == WitnessNormalization::luxemburg ? luxemburg_norm(phi, f)
                                                             : orlicz_norm(phi, f);
  for (const auto& e : f.entries()) {
    const double g = std::abs(e.value) / w.scale;
    const double lambda = phi.right_derivative(g);
    const ExtendedReal dual = conjugate(phi, lambda);
    const double gap = lambda * g - phi(g) - dual.value();
    w.entries.push_back({e.k, lambda, gap});
    w.conjugate_sum += dual;
    w.pairing += lambda * g;
    if (!(std::abs(gap) <= tol * std::max(1.0, lambda * g))) w.young_violations.push_back(e.k);
  }
  return w;
}

}  // namespace orliczsm
