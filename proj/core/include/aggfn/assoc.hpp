#pragma once

#include <functional>
#include <span>
#include <vector>

#include "aggfn/generator.hpp"
#include "aggfn/report.hpp"
#include "aggfn/sampler.hpp"

namespace aggfn {

/// f^-1[ f(x) + f(y) ]: the continuous strictly increasing associative
/// operations. Throws range_error when the generator sum leaves f's range.
double aczelian(double x, double y, const Generator& f);
double aczelian_n(std::span<const double> xs, const Generator& f);

enum class Orientation { conjunctive, disjunctive };

/// Archimedean operation on [a, b]: additive generator mapped into [0, +inf],
/// conjunctive f strictly decreasing with f(b) = 0 (b identity, a zero),
/// disjunctive f strictly increasing with f(a) = 0. The generator value at
/// the zero element may be +inf (strict case) or finite (nilpotent case).
class ArchimedeanSpec {
 public:
  ArchimedeanSpec(Orientation o, double a, double b, Generator f);

  double a() const { return a_; }
  double b() const { return b_; }
  Orientation orientation() const { return orient_; }
  const Generator& generator() const { return gen_; }
  bool nilpotent() const { return nilpotent_; }

  double apply(double x, double y) const;
  double apply_n(std::span<const double> xs) const;

 private:
  Orientation orient_;
  double a_, b_;
  Generator gen_;
  bool nilpotent_;
};

/// The four normalized two-place forms over g : [a,b] -> [0,1] strictly
/// increasing with g(a) = 0, g(b) = 1.
enum class NormalizedForm {
  luka,            // g^-1[max(g(x) + g(y) - 1, 0)]
  strict_product,  // g^-1[g(x) g(y)]
  dual_luka,       // g^-1[min(g(x) + g(y), 1)]
  dual_product,    // g^-1[1 - (1 - g(x))(1 - g(y))]
};

double normalized_form(double x, double y, const Generator& g, double a,
                       double b, NormalizedForm form);
double normalized_form_n(std::span<const double> xs, const Generator& g,
                         double a, double b, NormalizedForm form);

/// One ordinal-sum component: an Archimedean operation acting on [lo, hi]
/// through the affine rescaling to [0, 1].
struct OrdinalSumComponent {
  double lo;
  double hi;
  ArchimedeanSpec op;  // interval must be [0, 1], orientation must match the sum
};

/// Component operation where both arguments share a component subinterval,
/// min (conjunctive) or max (disjunctive) filler otherwise. A point on a
/// shared endpoint belongs to the lower-indexed component.
class OrdinalSumSpec {
 public:
  OrdinalSumSpec(Orientation o, double a, double b,
                 std::vector<OrdinalSumComponent> components);

  double a() const { return a_; }
  double b() const { return b_; }
  Orientation orientation() const { return orient_; }
  const std::vector<OrdinalSumComponent>& components() const {
    return components_;
  }

  double apply(double x, double y) const;

 private:
  Orientation orient_;
  double a_, b_;
  std::vector<OrdinalSumComponent> components_;
};

/// Parameters of the continuous nondecreasing idempotent associative family
/// (alpha and x) v (beta and y) v (x and y).
struct IdempotentAssocSpec {
  double alpha;
  double beta;
};

double alpha_beta(double x, double y, const IdempotentAssocSpec& spec);
double alpha_beta_n(std::span<const double> xs, const IdempotentAssocSpec& spec);

/// median(min x, max x, alpha): the symmetric members of the family.
double median_assoc_n(std::span<const double> xs, double alpha);

enum class TieRule { take_min, take_max };

/// Idempotent associative operation with identity e from a decreasing g with
/// g(e) = e: min below the graph of g, max above, tie resolved by flag.
double czogala_drewniak(double x, double y, const Generator& g,
                        TieRule tie = TieRule::take_min);

using BinaryOp = std::function<double(double, double)>;

/// Sampled verification of the t-norm / t-conorm / uninorm axioms on [0,1].
/// The uninorm check searches for an identity on a 1001-point grid and
/// refines the best candidate; the report carries the located identity or a
/// counterexample.
PropertyReport is_tnorm(const BinaryOp& op, const Sampler& sampler);
PropertyReport is_tconorm(const BinaryOp& op, const Sampler& sampler);
PropertyReport is_uninorm(const BinaryOp& op, const Sampler& sampler);

}  // namespace aggfn
