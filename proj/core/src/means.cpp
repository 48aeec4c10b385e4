#include "aggfn/means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aggfn/errors.hpp"
#include "aggfn/numeric.hpp"

namespace aggfn {

namespace {

constexpr double kAlphaGeometricSwitch = 1e-7;

void require_nonempty(std::span<const double> x) {
  if (x.empty()) raise(errc::dimension_mismatch, "empty input vector");
}

void clamp_internal(double& m, std::span<const double> x) {
  // The exact value is internal; rounding in f / f^-1 may push it a hair
  // outside [min x, max x].
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  m = std::clamp(m, *lo, *hi);
}

}  // namespace

double quasi_arithmetic_mean(std::span<const double> x, const Generator& f) {
  require_nonempty(x);
  double acc = 0.0;
  for (double xi : x) acc += f.evaluate(xi);
  double m = f.invert(acc / static_cast<double>(x.size()));
  clamp_internal(m, x);
  return m;
}

double quasi_linear_mean(std::span<const double> x, const WeightVector& w,
                         const Generator& f) {
  require_nonempty(x);
  if (w.normalization() != WeightNorm::sum_one)
    raise(errc::weight_error, "quasi-linear mean needs sum-one weights");
  if (w.size() != static_cast<int>(x.size()))
    raise(errc::dimension_mismatch, "weights and input differ in length");
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) acc += w[static_cast<int>(i)] * f.evaluate(x[i]);
  double m = f.invert(acc);
  clamp_internal(m, x);
  return m;
}

double quasi_linear_function(std::span<const double> x,
                             std::span<const double> p, double q,
                             const Generator& f) {
  require_nonempty(x);
  if (p.size() != x.size())
    raise(errc::dimension_mismatch, "coefficients and input differ in length");
  for (double pi : p)
    if (!(pi > 0.0) || !std::isfinite(pi))
      raise(errc::weight_error, "quasi-linear function needs p_i > 0");
  double acc = q;
  for (size_t i = 0; i < x.size(); ++i) acc += p[i] * f.evaluate(x[i]);
  return f.invert(acc);  // range_error when the combination leaves f's range
}

double arithmetic_mean(std::span<const double> x) {
  require_nonempty(x);
  double acc = 0.0;
  for (double xi : x) acc += xi;
  return acc / static_cast<double>(x.size());
}

double geometric_mean(std::span<const double> x) {
  require_nonempty(x);
  double acc = 0.0;
  for (double xi : x) {
    if (!(xi > 0.0)) raise(errc::domain_error, "geometric mean needs positive inputs");
    acc += std::log(xi);
  }
  return std::exp(acc / static_cast<double>(x.size()));
}

double harmonic_mean(std::span<const double> x) {
  require_nonempty(x);
  double acc = 0.0;
  for (double xi : x) {
    if (!(xi > 0.0)) raise(errc::domain_error, "harmonic mean needs positive inputs");
    acc += 1.0 / xi;
  }
  return static_cast<double>(x.size()) / acc;
}

double root_mean_power(std::span<const double> x, double alpha) {
  require_nonempty(x);
  for (double xi : x)
    if (!(xi > 0.0) || !std::isfinite(xi))
      raise(errc::domain_error, "root-mean-power needs positive inputs");
  if (std::isinf(alpha))
    return alpha > 0 ? *std::max_element(x.begin(), x.end())
                     : *std::min_element(x.begin(), x.end());
  if (std::fabs(alpha) < kAlphaGeometricSwitch) return geometric_mean(x);

  // Shifted log-sum-exp over alpha * ln(x_i); immune to pow overflow.
  double shift = -std::numeric_limits<double>::infinity();
  for (double xi : x) shift = std::max(shift, alpha * std::log(xi));
  double acc = 0.0;
  for (double xi : x) acc += std::exp(alpha * std::log(xi) - shift);
  double m = std::exp((shift + std::log(acc / static_cast<double>(x.size()))) / alpha);
  clamp_internal(m, x);
  return m;
}

double exponential_mean(std::span<const double> x, double alpha) {
  require_nonempty(x);
  if (alpha == 0.0 || !std::isfinite(alpha))
    raise(errc::spec_error, "exponential mean needs finite alpha != 0");
  double shift = -std::numeric_limits<double>::infinity();
  for (double xi : x) shift = std::max(shift, alpha * xi);
  double acc = 0.0;
  for (double xi : x) acc += std::exp(alpha * xi - shift);
  double m = (shift + std::log(acc / static_cast<double>(x.size()))) / alpha;
  clamp_internal(m, x);
  return m;
}

double chisini_solve(const std::function<double(std::span<const double>)>& g,
                     std::span<const double> x, double lo, double hi) {
  require_nonempty(x);
  if (!(lo < hi)) raise(errc::no_bracket, "bracket must satisfy lo < hi");
  const size_t n = x.size();
  std::vector<double> diag(n);
  auto on_diagonal = [&](double t) {
    std::fill(diag.begin(), diag.end(), t);
    return g(std::span<const double>(diag));
  };

  // Probe the diagonal for strict monotonicity before trusting bisection.
  constexpr int kProbes = 9;
  double prev = on_diagonal(lo);
  int direction = 0;
  for (int i = 1; i < kProbes; ++i) {
    double t = lo + (hi - lo) * i / (kProbes - 1);
    double cur = on_diagonal(t);
    int step = cur > prev ? 1 : (cur < prev ? -1 : 0);
    if (step != 0) {
      if (direction == 0) direction = step;
      else if (direction != step)
        raise(errc::not_monotone, "diagonal changes direction on the bracket");
    }
    prev = cur;
  }
  if (direction == 0)
    raise(errc::not_monotone, "diagonal is constant on the bracket");

  double target = g(x);
  double at_lo = on_diagonal(lo);
  double at_hi = on_diagonal(hi);
  if (target < std::min(at_lo, at_hi) || target > std::max(at_lo, at_hi))
    raise(errc::no_bracket, "g(x) is not enclosed by the diagonal endpoints");

  double width_tol = 1e-12 * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
  return bisect([&](double t) { return on_diagonal(t) - target; }, lo, hi,
                width_tol, 200);
}

double lagrangian_mean(double x, double y, const Generator& f) {
  if (x == y) {
    if (!f.domain().contains(x))
      raise(errc::domain_error, "input outside the generator domain");
    return x;
  }
  double lo = std::min(x, y);
  double hi = std::max(x, y);
  if (!f.domain().contains(lo) || !f.domain().contains(hi))
    raise(errc::domain_error, "interval [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) +
                                  "] outside the generator domain");
  double integral = adaptive_simpson([&](double t) { return f.evaluate(t); },
                                     lo, hi, kEpsQuad, kQuadMaxDepth);
  double m = f.invert(integral / (hi - lo));
  m = std::clamp(m, lo, hi);
  return m;
}

double logarithmic_mean(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    raise(errc::domain_error, "logarithmic mean needs positive inputs");
  if (x == y) return x;
  return (x - y) / (std::log(x) - std::log(y));
}

double cauchy_mean(double x, double y, const Generator& f, const Generator& g) {
  if (x == y) {
    if (!f.domain().contains(x) || !g.domain().contains(x))
      raise(errc::domain_error, "input outside a generator domain");
    return x;
  }
  double lo = std::min(x, y);
  double hi = std::max(x, y);
  if (!f.domain().contains(lo) || !f.domain().contains(hi) ||
      !g.domain().contains(lo) || !g.domain().contains(hi))
    raise(errc::domain_error, "interval outside a generator domain");
  double denom = g.evaluate(hi) - g.evaluate(lo);
  if (denom == 0.0 || !std::isfinite(denom))
    raise(errc::degenerate_g, "g does not separate the inputs");
  double integral = adaptive_simpson(
      [&](double t) { return f.evaluate(t) * g.derivative(t); }, lo, hi,
      kEpsQuad, kQuadMaxDepth);
  double m = f.invert(integral / denom);
  m = std::clamp(m, lo, hi);
  return m;
}

MeanSpec MeanSpec::simple(Kind k) {
  MeanSpec s;
  s.kind = k;
  return s;
}

MeanSpec MeanSpec::root_power_of(double alpha) {
  MeanSpec s;
  s.kind = Kind::root_power;
  s.alpha = alpha;
  return s;
}

MeanSpec MeanSpec::exponential_of(double alpha) {
  MeanSpec s;
  s.kind = Kind::exponential;
  s.alpha = alpha;
  return s;
}

MeanSpec MeanSpec::quasi_arithmetic_of(Generator f) {
  MeanSpec s;
  s.kind = Kind::quasi_arithmetic;
  s.generator = std::move(f);
  return s;
}

MeanSpec MeanSpec::quasi_linear_of(Generator f, WeightVector w) {
  MeanSpec s;
  s.kind = Kind::quasi_linear;
  s.generator = std::move(f);
  s.weights = std::move(w);
  return s;
}

MeanSpec MeanSpec::quasi_linear_function_of(Generator f, std::vector<double> p,
                                            double q) {
  MeanSpec s;
  s.kind = Kind::quasi_linear_function;
  s.generator = std::move(f);
  s.p = std::move(p);
  s.q = q;
  return s;
}

double MeanSpec::evaluate(std::span<const double> x) const {
  switch (kind) {
    case Kind::arithmetic: return arithmetic_mean(x);
    case Kind::quadratic: return root_mean_power(x, 2.0);
    case Kind::geometric: return geometric_mean(x);
    case Kind::harmonic: return harmonic_mean(x);
    case Kind::root_power: return root_mean_power(x, alpha);
    case Kind::exponential: return exponential_mean(x, alpha);
    case Kind::quasi_arithmetic: return quasi_arithmetic_mean(x, *generator);
    case Kind::quasi_linear: return quasi_linear_mean(x, *weights, *generator);
    case Kind::quasi_linear_function:
      return quasi_linear_function(x, p, q, *generator);
  }
  raise(errc::spec_error, "unhandled mean kind");
}

}  // namespace aggfn
