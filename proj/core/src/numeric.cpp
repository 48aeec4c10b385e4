#include "aggfn/numeric.hpp"

#include <cmath>

#include "aggfn/errors.hpp"

namespace aggfn {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole,
                   double abs_tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = simpson(fa, flm, fm, m - a);
  double right = simpson(fm, frm, fb, b - m);
  double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * abs_tol)
    return left + right + delta / 15.0;
  if (depth <= 0)
    raise(errc::quadrature_failure,
          "adaptive refinement exhausted before reaching tolerance");
  return simpson_rec(f, a, m, fa, flm, fm, left, abs_tol / 2.0, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, abs_tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  double fa = f(a);
  double fb = f(b);
  double fm = f(0.5 * (a + b));
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
    raise(errc::quadrature_failure, "integrand not finite on the interval");
  double whole = simpson(fa, fm, fb, b - a);
  return simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double bisect(const std::function<double(double)>& h, double lo, double hi,
              double width_tol, int max_iter) {
  double hlo = h(lo);
  double hhi = h(hi);
  if (hlo == 0.0) return lo;
  if (hhi == 0.0) return hi;
  if ((hlo > 0) == (hhi > 0))
    raise(errc::no_bracket, "no sign change over the bracket");
  for (int it = 0; it < max_iter && hi - lo > width_tol; ++it) {
    double mid = 0.5 * (lo + hi);
    double hm = h(mid);
    if (hm == 0.0) return mid;
    if ((hm > 0) == (hlo > 0)) {
      lo = mid;
      hlo = hm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace aggfn
