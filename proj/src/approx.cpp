#include "orliczsm/approx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "orliczsm/fracdiff.hpp"

namespace orliczsm {

double best_approx(const CoeffSeq& f, const OrliczFunction& phi, int n) {
  if (n < 1) throw std::invalid_argument(fmt::format("E_n needs n >= 1, got {}", n));
  std::vector<double> tail;
  for (const auto& e : f.entries()) {
    if (std::abs(e.k) >= n) tail.push_back(std::abs(e.value));
  }
  return luxemburg_norm(phi, tail);
}

double JacksonKernel::operator()(double t) const {
  const double s = std::sin(0.5 * t);
  double ratio;
  if (std::abs(s) < 1e-8) {
    ratio = spec.p;
  } else {
    ratio = std::sin(0.5 * spec.p * t) / s;
  }
  return spec.b_p * std::pow(ratio, 2 * spec.k0);
}

JacksonKernel jackson_kernel(int n, int r) {
  if (n < 1) throw std::invalid_argument(fmt::format("kernel order n must be >= 1, got {}", n));
  if (r < 0) throw std::invalid_argument(fmt::format("moment order r must be >= 0, got {}", r));
  JacksonKernel kernel;
  auto& spec = kernel.spec;
  spec.n = n;
  spec.k0 = (r + 3) / 2;  // ceil((r + 2) / 2)
  spec.p = n / (2 * spec.k0) + 1;
  // Integer coefficients stay exact in double while bounded by p^{2k0-1}.
  if ((2 * spec.k0 - 1) * std::log2(static_cast<double>(spec.p)) >= 52.0) {
    throw std::invalid_argument(
        fmt::format("kernel (n={}, r={}) exceeds exact integer range", n, r));
  }

  std::vector<double> seq{1.0};
  for (int pass = 0; pass < 2 * spec.k0; ++pass) {
    std::vector<double> next(seq.size() + spec.p - 1, 0.0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (int j = 0; j < spec.p; ++j) next[i + j] += seq[i];
    }
    seq = std::move(next);
  }
  const int center = spec.degree();
  spec.b_p = 1.0 / (2.0 * std::numbers::pi * seq[center]);
  std::vector<Coefficient> entries;
  entries.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    entries.push_back({static_cast<int>(i) - center, spec.b_p * seq[i]});
  }
  kernel.coefficients = CoeffSeq::from_entries(std::move(entries));
  return kernel;
}

CoeffSeq jackson_approximant(const CoeffSeq& f, int alpha, int n) {
  if (alpha < 1) throw std::invalid_argument(fmt::format("alpha must be a positive integer, got {}", alpha));
  if (n < 2) throw std::invalid_argument(fmt::format("sigma_(n-1) needs n >= 2, got {}", n));
  const JacksonKernel kernel = jackson_kernel(n - 1, alpha);
  const double two_pi = 2.0 * std::numbers::pi;
  const double sign = (alpha % 2 == 0) ? 1.0 : -1.0;
  std::vector<Coefficient> out;
  for (const auto& e : f.entries()) {
    double sum = 0.0;
    for (int j = 0; j <= alpha; ++j) {
      const double kernel_coeff = kernel.coefficients[e.k * j].real();
      sum += ((j % 2 == 0) ? 1.0 : -1.0) * binom(alpha, j) * two_pi * kernel_coeff;
    }
    const double residual_factor = sign * sum;
    out.push_back({e.k, e.value * (1.0 - residual_factor)});
  }
  return CoeffSeq::from_entries(std::move(out));
}

BoundPair psi_bernstein_ratio(const CoeffSeq& tau, const OrliczFunction& phi,
                              const PsiWeights& psi, int n) {
  if (n < 1) throw std::invalid_argument("Bernstein ratio needs n >= 1");
  if (tau.max_abs_frequency() > n) {
    throw std::invalid_argument(
        fmt::format("polynomial has degree {} beyond n = {}", tau.max_abs_frequency(), n));
  }
  double eps;
  if (psi.is_fractional()) {
    eps = std::pow(static_cast<double>(n), -psi.order());
  } else {
    eps = std::abs(psi(1));
    for (int k = 1; k <= n; ++k) eps = std::min({eps, std::abs(psi(k)), std::abs(psi(-k))});
  }
  return {luxemburg_norm(phi, psi_derivative(tau, psi)), luxemburg_norm(phi, tau) / eps};
}

BoundPair prop1_ratio(const CoeffSeq& f, const OrliczFunction& phi, const PsiWeights& psi,
                      int n) {
  if (n < 1) throw std::invalid_argument("Proposition bound needs n >= 1");
  double eps = 0.0;
  if (psi.is_fractional()) {
    eps = std::pow(static_cast<double>(n), -psi.order());
  } else {
    for (const auto& e : f.entries()) {
      if (std::abs(e.k) >= n) eps = std::max(eps, std::abs(psi(e.k)));
    }
  }
  const CoeffSeq derivative = psi_derivative(f, psi);
  return {best_approx(f, phi, n), eps * best_approx(derivative, phi, n)};
}

}  // namespace orliczsm
