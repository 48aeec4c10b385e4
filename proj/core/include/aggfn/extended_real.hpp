#pragma once

#include <cassert>
#include <cmath>
#include <compare>
#include <limits>

namespace aggfn {

/// Real line extended with +/-infinity, NaN excluded. Additive generators of
/// strict Archimedean operations take the value +inf at an endpoint; the
/// capped sum min(f(x) + f(y), f(a)) is computed in this type so the strict
/// case never clamps.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double v) : v_(v) { assert(!std::isnan(v)); }

  static constexpr ExtendedReal infinity() {
    return ExtendedReal(std::numeric_limits<double>::infinity());
  }

  constexpr double value() const { return v_; }
  constexpr bool is_finite() const { return std::isfinite(v_); }

  friend constexpr ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    // inf + (-inf) has no meaning here; generator values live in [0, +inf].
    assert(!(std::isinf(a.v_) && std::isinf(b.v_) &&
             (a.v_ > 0) != (b.v_ > 0)));
    return ExtendedReal(a.v_ + b.v_);
  }

  friend constexpr ExtendedReal min(ExtendedReal a, ExtendedReal b) {
    return a.v_ <= b.v_ ? a : b;
  }
  friend constexpr ExtendedReal max(ExtendedReal a, ExtendedReal b) {
    return a.v_ >= b.v_ ? a : b;
  }

  friend constexpr auto operator<=>(ExtendedReal a, ExtendedReal b) {
    return a.v_ <=> b.v_;
  }
  friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) {
    return a.v_ == b.v_;
  }

 private:
  double v_ = 0.0;
};

}  // namespace aggfn
