#include "orliczsm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace orliczsm {

CoeffSeq::CoeffSeq(std::initializer_list<std::pair<int, Complex>> entries) {
  std::vector<Coefficient> v;
  v.reserve(entries.size());
  for (const auto& [k, c] : entries) v.push_back({k, c});
  *this = from_entries(std::move(v));
}

CoeffSeq CoeffSeq::from_entries(std::vector<Coefficient> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Coefficient& a, const Coefficient& b) { return a.k < b.k; });
  CoeffSeq out;
  out.entries_.reserve(entries.size());
  for (const auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().k == e.k) {
      out.entries_.back().value += e.value;
    } else {
      out.entries_.push_back(e);
    }
  }
  std::erase_if(out.entries_, [](const Coefficient& e) { return e.value == Complex{}; });
  return out;
}

Complex CoeffSeq::operator[](int k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const Coefficient& e, int key) { return e.k < key; });
  return (it != entries_.end() && it->k == k) ? it->value : Complex{};
}

void CoeffSeq::set(int k, Complex value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const Coefficient& e, int key) { return e.k < key; });
  const bool present = it != entries_.end() && it->k == k;
  if (value == Complex{}) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    entries_.insert(it, {k, value});
  }
}

int CoeffSeq::max_abs_frequency() const noexcept {
  if (entries_.empty()) return 0;
  return std::max(std::abs(entries_.front().k), std::abs(entries_.back().k));
}

std::vector<double> CoeffSeq::magnitudes() const {
  std::vector<double> m;
  m.reserve(entries_.size());
  for (const auto& e : entries_) m.push_back(std::abs(e.value));
  return m;
}

bool CoeffSeq::all_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Coefficient& e) {
    return std::isfinite(e.value.real()) && std::isfinite(e.value.imag());
  });
}

template <class Op>
CoeffSeq& CoeffSeq::merge(const CoeffSeq& other, Op op) {
  std::vector<Coefficient> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->k < b->k)) {
      out.push_back(*a++);
    } else if (a == entries_.end() || b->k < a->k) {
      out.push_back({b->k, op(Complex{}, b->value)});
      ++b;
    } else {
      const Complex v = op(a->value, b->value);
      if (v != Complex{}) out.push_back({a->k, v});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
  return *this;
}

CoeffSeq& CoeffSeq::operator+=(const CoeffSeq& other) {
  return merge(other, [](Complex x, Complex y) { return x + y; });
}

CoeffSeq& CoeffSeq::operator-=(const CoeffSeq& other) {
  return merge(other, [](Complex x, Complex y) { return x - y; });
}

CoeffSeq& CoeffSeq::operator*=(Complex scale) {
  for (auto& e : entries_) e.value *= scale;
  std::erase_if(entries_, [](const Coefficient& e) { return e.value == Complex{}; });
  return *this;
}

PsiWeights PsiWeights::fractional(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument(fmt::format("fractional order must be > 0, got {}", r));
  }
  PsiWeights w;
  w.fractional_ = true;
  w.order_ = r;
  return w;
}

PsiWeights PsiWeights::explicit_table(std::map<int, Complex> table) {
  PsiWeights w;
  w.fractional_ = false;
  w.table_ = std::move(table);
  return w;
}

Complex PsiWeights::operator()(int k) const {
  if (k == 0) throw std::invalid_argument("psi weight queried at k = 0");
  if (fractional_) return std::pow(static_cast<double>(std::abs(k)), -order_);
  auto it = table_.find(k);
  if (it == table_.end()) {
    throw std::invalid_argument(fmt::format("psi weight undefined at k = {}", k));
  }
  if (it->second == Complex{}) {
    throw std::invalid_argument(fmt::format("psi weight is zero at k = {}", k));
  }
  return it->second;
}

CoeffSeq psi_derivative(const CoeffSeq& f, const PsiWeights& psi) {
  std::vector<Coefficient> out;
  out.reserve(f.size());
  for (const auto& e : f.entries()) {
    if (e.k == 0) continue;
    out.push_back({e.k, e.value / psi(e.k)});
  }
  return CoeffSeq::from_entries(std::move(out));
}

CoeffSeq fourier_sum(const CoeffSeq& f, int n) {
  std::vector<Coefficient> out;
  for (const auto& e : f.entries()) {
    if (std::abs(e.k) <= n) out.push_back(e);
  }
  return CoeffSeq::from_entries(std::move(out));
}

CoeffSeq tail_from(const CoeffSeq& f, int n) {
  std::vector<Coefficient> out;
  for (const auto& e : f.entries()) {
    if (std::abs(e.k) >= n) out.push_back(e);
  }
  return CoeffSeq::from_entries(std::move(out));
}

Complex evaluate(const CoeffSeq& f, double x) {
  Complex sum{};
  for (const auto& e : f.entries()) sum += e.value * std::polar(1.0, e.k * x);
  return sum;
}

CoeffSeq analyze_samples(std::span<const Complex> samples) {
  const auto n = static_cast<long>(samples.size());
  if (n == 0) throw std::invalid_argument("analyze_samples requires at least one sample");
  double scale = 0.0;
  for (const auto& s : samples) scale = std::max(scale, std::abs(s));
  const double cutoff = 1e-13 * scale;
  const long band = (n - 1) / 2;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::vector<Coefficient> out;
  for (long k = -band; k <= band; ++k) {
    Complex acc{};
    for (long j = 0; j < n; ++j) {
      // k*j reduced mod n keeps the angle small.
      const long phase = ((k * j) % n + n) % n;
      acc += samples[j] * std::polar(1.0, -step * static_cast<double>(phase));
    }
    acc /= static_cast<double>(n);
    if (std::abs(acc) > cutoff) out.push_back({static_cast<int>(k), acc});
  }
  return CoeffSeq::from_entries(std::move(out));
}

}  // namespace orliczsm
