#pragma once

#include <functional>
#include <optional>
#include <span>

#include "aggfn/generator.hpp"
#include "aggfn/weights.hpp"

namespace aggfn {

/// f^-1( (1/n) sum f(x_i) ). Internal and idempotent for any generator.
double quasi_arithmetic_mean(std::span<const double> x, const Generator& f);

/// f^-1( sum w_i f(x_i) ) with sum-one weights.
double quasi_linear_mean(std::span<const double> x, const WeightVector& w,
                         const Generator& f);

/// f^-1( sum p_i f(x_i) + q ), p_i > 0. Not idempotent in general; throws
/// range_error when the affine combination leaves f's range.
double quasi_linear_function(std::span<const double> x,
                             std::span<const double> p, double q,
                             const Generator& f);

/// ((1/n) sum x_i^alpha)^(1/alpha) on positive inputs. alpha = 0 is the
/// geometric mean, alpha = -inf / +inf the min / max. |alpha| < 1e-7 routes
/// to the log-space geometric mean.
double root_mean_power(std::span<const double> x, double alpha);

/// Shifted log-sum-exp form of (1/alpha) ln( (1/n) sum e^(alpha x_i) ).
double exponential_mean(std::span<const double> x, double alpha);

double geometric_mean(std::span<const double> x);
double arithmetic_mean(std::span<const double> x);
double harmonic_mean(std::span<const double> x);

/// Solves g(M,...,M) = g(x) for M by bisection on [lo, hi]. The diagonal
/// t -> g(t,...,t) must be strictly monotone on the bracket and the target
/// enclosed; otherwise not_monotone / no_bracket.
double chisini_solve(const std::function<double(std::span<const double>)>& g,
                     std::span<const double> x, double lo, double hi);

/// f^-1( 1/(y-x) * integral of f over [x, y] ); x = y returns x. Inputs are
/// unordered; the orientation sign cancels.
double lagrangian_mean(double x, double y, const Generator& f);

/// (x - y) / (log x - log y) on positives; the diagonal returns x.
double logarithmic_mean(double x, double y);

/// f^-1( (integral of f * g' over [x,y]) / (g(y) - g(x)) ). Reduces to the
/// quasi-arithmetic two-place mean when g = f and to the Lagrangian mean
/// when g is the identity.
double cauchy_mean(double x, double y, const Generator& f, const Generator& g);

/// Serializable description of one mean from the catalog.
struct MeanSpec {
  enum class Kind {
    arithmetic,
    quadratic,
    geometric,
    harmonic,
    root_power,             // alpha
    exponential,            // alpha
    quasi_arithmetic,       // generator
    quasi_linear,           // generator + sum-one weights
    quasi_linear_function,  // generator + positive p + offset q
  };

  Kind kind;
  double alpha = 0.0;
  std::optional<Generator> generator;
  std::optional<WeightVector> weights;
  std::vector<double> p;
  double q = 0.0;

  static MeanSpec simple(Kind k);
  static MeanSpec root_power_of(double alpha);
  static MeanSpec exponential_of(double alpha);
  static MeanSpec quasi_arithmetic_of(Generator f);
  static MeanSpec quasi_linear_of(Generator f, WeightVector w);
  static MeanSpec quasi_linear_function_of(Generator f, std::vector<double> p,
                                           double q);

  double evaluate(std::span<const double> x) const;
};

}  // namespace aggfn
