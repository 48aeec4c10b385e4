#pragma once

#include <functional>

namespace aggfn {

inline constexpr double kEpsInv = 1e-9;    // generator round-trip slack (relative)
inline constexpr double kEpsQuad = 1e-10;  // quadrature absolute tolerance
inline constexpr int kQuadMaxDepth = 50;

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance.
/// Throws quadrature_failure when the depth limit is hit before the local
/// error estimate falls under the budget.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol = kEpsQuad,
                        int max_depth = kQuadMaxDepth);

/// Bisection for h(t) = 0 on [lo, hi]; h(lo) and h(hi) must have opposite
/// signs. Halts when the bracket width drops under `width_tol` or after
/// `max_iter` halvings.
double bisect(const std::function<double(double)>& h, double lo, double hi,
              double width_tol, int max_iter = 200);

}  // namespace aggfn
