#ifndef ORLICZSM_EXTENDED_REAL_HPP
#define ORLICZSM_EXTENDED_REAL_HPP

#include <compare>
#include <string>

namespace orliczsm {

/// Nonnegative real number or +infinity.
///
/// The complementary function of an Orlicz function may be infinite (for
/// M(t) = t it is +inf on (1, inf)), so every consumer of a conjugate value
/// has to handle the marker explicitly.
class ExtendedReal {
 public:
  ExtendedReal() = default;
  /// Throws std::invalid_argument for negative or NaN input; +inf maps to
  /// the infinity marker.
  explicit ExtendedReal(double value);

  static ExtendedReal infinity() noexcept;

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Finite value, or +inf as a double.
  double value() const noexcept;

  ExtendedReal& operator+=(const ExtendedReal& other) noexcept;
  friend ExtendedReal operator+(ExtendedReal a, const ExtendedReal& b) noexcept {
    a += b;
    return a;
  }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept;
  friend std::partial_ordering operator<=>(const ExtendedReal& a,
                                           const ExtendedReal& b) noexcept;

  std::string to_string() const;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace orliczsm

#endif  // ORLICZSM_EXTENDED_REAL_HPP
