#include "orliczsm/kfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "orliczsm/fracdiff.hpp"
#include "orliczsm/search.hpp"

namespace orliczsm {

namespace {

struct ShrinkageProblem {
  const OrliczFunction& phi;
  double penalty;  // delta^alpha
  std::vector<int> freq;
  std::vector<double> magnitude;
  std::vector<double> weight;  // |k|^alpha, 0 at k = 0
  mutable std::vector<double> residual;
  mutable std::vector<double> derivative;

  double operator()(const std::vector<double>& s) const {
    residual.resize(s.size());
    derivative.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      residual[i] = (1.0 - s[i]) * magnitude[i];
      derivative[i] = s[i] * weight[i] * magnitude[i];
    }
    return luxemburg_norm(phi, residual) + penalty * luxemburg_norm(phi, derivative);
  }
};

}  // namespace

double k_objective(const CoeffSeq& f, const CoeffSeq& h, const OrliczFunction& phi, double alpha,
                   double delta) {
  const CoeffSeq deriv = psi_derivative(h, PsiWeights::fractional(alpha));
  return luxemburg_norm(phi, f - h) + std::pow(delta, alpha) * luxemburg_norm(phi, deriv);
}

KEstimate k_functional(const CoeffSeq& f, const OrliczFunction& phi, double alpha, double delta,
                       KOptions opts) {
  if (!(alpha > 0.0)) throw std::invalid_argument(fmt::format("K-functional needs alpha > 0, got {}", alpha));
  if (!(delta > 0.0)) throw std::invalid_argument(fmt::format("K-functional needs delta > 0, got {}", delta));
  if (!f.all_finite()) throw std::invalid_argument("coefficient sequence has non-finite entries");
  const int band = opts.band.value_or(f.max_abs_frequency());
  if (band < 0) throw std::invalid_argument("K-functional band must be >= 0");

  KEstimate est;
  est.band = band;
  if (f.empty()) return est;

  ShrinkageProblem problem{phi, std::pow(delta, alpha), {}, {}, {}, {}, {}};
  for (const auto& e : f.entries()) {
    problem.freq.push_back(e.k);
    problem.magnitude.push_back(std::abs(e.value));
    problem.weight.push_back(e.k == 0 ? 0.0 : std::pow(std::abs(static_cast<double>(e.k)), alpha));
  }
  const std::size_t size = problem.freq.size();

  std::vector<double> s(size, 0.0);
  double best = problem(s);
  std::vector<double> best_s = s;
  est.candidates_tried = 1;
  est.minimizer_degree = -1;

  // Distinct degrees m at which S_m(f) changes, plus m = 0.
  std::vector<int> degrees{0};
  for (int k : problem.freq) {
    if (std::abs(k) <= band) degrees.push_back(std::abs(k));
  }
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (int m : degrees) {
    for (std::size_t i = 0; i < size; ++i) s[i] = std::abs(problem.freq[i]) <= m ? 1.0 : 0.0;
    const double v = problem(s);
    ++est.candidates_tried;
    if (v < best) {
      best = v;
      best_s = s;
      est.minimizer_degree = m;
    }
  }
  est.value = best;

  if (opts.polish) {
    s = best_s;
    double current = best;
    for (int sweep = 0; sweep < opts.sweeps; ++sweep) {
      for (std::size_t i = 0; i < size; ++i) {
        if (std::abs(problem.freq[i]) > band) continue;
        const double keep = s[i];
        auto along = [&](double x) {
          s[i] = x;
          return problem(s);
        };
        double arg = keep;
        double val = current;
        for (double x : {0.0, 1.0}) {
          const double v = along(x);
          if (v < val) {
            val = v;
            arg = x;
          }
        }
        if (problem.freq[i] != 0) {
          const auto r = golden_section_min(along, 0.0, 1.0, 1e-7);
          if (r.value < val) {
            val = r.value;
            arg = r.x;
          }
        }
        s[i] = arg;
        current = val;
      }
    }
    if (current < est.value) {
      est.refine_used = true;
      est.value = current;
    }
  }
  return est;
}

Lemma4Sandwich lemma4_sandwich(const CoeffSeq& tau, const OrliczFunction& phi, double alpha, int n,
                               double h) {
  if (!(alpha > 0.0)) throw std::invalid_argument("Lemma 4 sandwich needs alpha > 0");
  if (n < 1) throw std::invalid_argument("Lemma 4 sandwich needs n >= 1");
  if (tau.max_abs_frequency() > n) {
    throw std::invalid_argument(
        fmt::format("polynomial has degree {} beyond n = {}", tau.max_abs_frequency(), n));
  }
  const double h_max = 2.0 * std::numbers::pi / n;
  if (!(h >= 0.0) || h > h_max * (1.0 + 1e-15)) {
    throw std::invalid_argument(fmt::format("shift h = {} outside [0, 2pi/n]", h));
  }
  Lemma4Sandwich out;
  if (h == 0.0) return out;
  const double deriv = luxemburg_norm(phi, psi_derivative(tau, PsiWeights::fractional(alpha)));
  const double sine = std::max(0.0, std::sin(0.5 * n * h));
  out.low = std::pow(sine / (0.5 * n), alpha) * deriv;
  out.mid = difference_norm(phi, tau, alpha, h);
  out.high = std::pow(h, alpha) * deriv;
  return out;
}

}  // namespace orliczsm
