#pragma once

#include <limits>
#include <string>

namespace aggfn {

/// Real interval with open/closed endpoint flags. Infinite endpoints are
/// always open.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval all() { return {}; }
  static Interval positive() {
    Interval d;
    d.lo = 0.0;
    return d;
  }
  static Interval closed(double a, double b) { return {a, b, true, true}; }
  static Interval open(double a, double b) { return {a, b, false, false}; }

  bool contains(double x) const {
    if (!(x >= lo) || !(x <= hi)) return false;  // NaN fails both
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }

  /// Membership in the closure [lo, hi]; endpoint flags ignored.
  bool contains_closure(double x) const { return x >= lo && x <= hi; }

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

  std::string to_string() const;
};

Interval intersect(const Interval& a, const Interval& b);

}  // namespace aggfn
