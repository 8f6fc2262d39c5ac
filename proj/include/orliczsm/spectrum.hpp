#ifndef ORLICZSM_SPECTRUM_HPP
#define ORLICZSM_SPECTRUM_HPP

#include <complex>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace orliczsm {

using Complex = std::complex<double>;

struct Coefficient {
  int k = 0;
  Complex value;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

/// Finitely supported sequence of Fourier coefficients f^(k), k in Z.
///
/// This is the only representation of a function in the library: every
/// norm and operator acts diagonally on coefficients. Entries are kept in
/// ascending k with no stored zeros, so equality is structural.
class CoeffSeq {
 public:
  CoeffSeq() = default;
  CoeffSeq(std::initializer_list<std::pair<int, Complex>> entries);

  /// Builds from arbitrary entries; duplicate frequencies are summed and
  /// exact zeros dropped.
  static CoeffSeq from_entries(std::vector<Coefficient> entries);

  /// Coefficient at k (zero outside the support).
  Complex operator[](int k) const;
  void set(int k, Complex value);

  std::span<const Coefficient> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// max |k| over the support, 0 for the zero sequence.
  int max_abs_frequency() const noexcept;

  /// |f^(k)| for every stored entry, in storage order.
  std::vector<double> magnitudes() const;

  bool all_finite() const noexcept;

  CoeffSeq& operator+=(const CoeffSeq& other);
  CoeffSeq& operator-=(const CoeffSeq& other);
  CoeffSeq& operator*=(Complex scale);

  friend CoeffSeq operator+(CoeffSeq a, const CoeffSeq& b) { return a += b; }
  friend CoeffSeq operator-(CoeffSeq a, const CoeffSeq& b) { return a -= b; }
  friend CoeffSeq operator*(CoeffSeq a, Complex s) { return a *= s; }
  friend CoeffSeq operator*(Complex s, CoeffSeq a) { return a *= s; }

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

 private:
  template <class Op>
  CoeffSeq& merge(const CoeffSeq& other, Op op);

  std::vector<Coefficient> entries_;
};

/// Multiplier sequence psi defining the psi-derivative f^psi, with
/// f^(k) = psi_k * (f^psi)^(k) for k != 0.
class PsiWeights {
 public:
  /// psi_k = |k|^{-r}; the psi-derivative is the fractional derivative f^(r).
  static PsiWeights fractional(double r);
  /// Weights given on a finite set of frequencies. Querying a frequency
  /// outside the table throws.
  static PsiWeights explicit_table(std::map<int, Complex> table);

  bool is_fractional() const noexcept { return fractional_; }
  double order() const noexcept { return order_; }
  const std::map<int, Complex>& table() const noexcept { return table_; }

  /// psi_k for k != 0. Throws std::invalid_argument for k = 0, for a
  /// frequency missing from an explicit table, or for a zero weight.
  Complex operator()(int k) const;

 private:
  PsiWeights() = default;

  bool fractional_ = true;
  double order_ = 0.0;
  std::map<int, Complex> table_;
};

/// g^(k) = f^(k) / psi_k for k != 0 and g^(0) = 0.
CoeffSeq psi_derivative(const CoeffSeq& f, const PsiWeights& psi);

/// Restriction to |k| <= n (the Fourier sum S_n).
CoeffSeq fourier_sum(const CoeffSeq& f, int n);

/// Entries with |k| >= n, i.e. f - S_{n-1}(f).
CoeffSeq tail_from(const CoeffSeq& f, int n);

/// sum_k c_k e^{ikx}.
Complex evaluate(const CoeffSeq& f, double x);

/// Discrete Fourier analysis of N equispaced samples on [0, 2pi):
/// c_k = (1/N) sum_j s_j e^{-ik 2pi j/N} for |k| <= floor((N-1)/2).
/// Coefficients below 1e-13 * max|s| are roundoff and dropped.
CoeffSeq analyze_samples(std::span<const Complex> samples);

}  // namespace orliczsm

#endif  // ORLICZSM_SPECTRUM_HPP
