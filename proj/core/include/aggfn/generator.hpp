#pragma once

#include <memory>
#include <string>

#include "aggfn/interval.hpp"

namespace aggfn {

/// Strictly monotone scalar function drawn from a closed catalog of analytic
/// families, with closed-form inverse and derivative. Generators drive
/// quasi-arithmetic/quasi-linear means, Aczelian and Archimedean operations,
/// and the normalized two-place forms.
///
/// Evaluation comes in two flavours:
///  - evaluate/invert: strict, throw domain_error/range_error outside the
///    open part of the domain/range;
///  - value_closure/inverse_closure: permit the closure endpoints and return
///    the IEEE limit there (e.g. log -> -inf at 0, exp(-inf) -> 0). The
///    Archimedean machinery relies on these limits.
class Generator {
 public:
  enum class Family {
    identity,
    power,           // x^alpha on (0, inf), alpha != 0
    log,             // ln x on (0, inf)
    exp,             // e^(alpha x) on R, alpha != 0
    reciprocal,      // 1/x on (0, inf)
    affine,          // r x + s on R, r != 0
    neg_complement,  // 1 - x on R
    composed,        // outer(inner(x))
  };

  static Generator identity();
  static Generator power(double alpha);
  static Generator log();
  static Generator exp(double alpha);
  static Generator reciprocal();
  static Generator affine(double r, double s);
  static Generator neg_complement();
  static Generator compose(const Generator& outer, const Generator& inner);

  /// Same function restricted to `d` (must be inside the current domain).
  Generator with_domain(const Interval& d) const;

  double evaluate(double x) const;
  double operator()(double x) const { return evaluate(x); }
  double invert(double y) const;
  double derivative(double x) const;

  double value_closure(double x) const;
  double inverse_closure(double y) const;

  bool increasing() const;
  const Interval& domain() const;
  Interval range() const;
  Family family() const;
  std::string describe() const;

  /// First/second family parameter (alpha, or r/s for affine); meaningful
  /// only for parameterized families.
  double param_a() const;
  double param_b() const;
  Generator outer() const;  // composed only
  Generator inner() const;  // composed only

  struct Node;

 private:
  explicit Generator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace aggfn
