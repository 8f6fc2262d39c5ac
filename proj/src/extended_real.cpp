#include "orliczsm/extended_real.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace orliczsm {

ExtendedReal::ExtendedReal(double value) {
  if (std::isnan(value) || value < 0.0) {
    throw std::invalid_argument(
        fmt::format("ExtendedReal requires a nonnegative value, got {}", value));
  }
  if (std::isinf(value)) {
    infinite_ = true;
  } else {
    value_ = value;
  }
}

ExtendedReal ExtendedReal::infinity() noexcept {
  ExtendedReal r;
  r.infinite_ = true;
  return r;
}

double ExtendedReal::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

ExtendedReal& ExtendedReal::operator+=(const ExtendedReal& other) noexcept {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0.0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::partial_ordering operator<=>(const ExtendedReal& a,
                                  const ExtendedReal& b) noexcept {
  if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
  if (a.infinite_) return std::partial_ordering::greater;
  if (b.infinite_) return std::partial_ordering::less;
  return a.value_ <=> b.value_;
}

std::string ExtendedReal::to_string() const {
  return infinite_ ? std::string("+inf") : fmt::format("{:.17g}", value_);
}

}  // namespace orliczsm
