#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aggfn/measure.hpp"
#include "aggfn/weights.hpp"

namespace aggfn {

/// Sorting permutation of x (stable, ties by ascending index) together with
/// the upper-set bitmasks A_(i) = {(i), ..., (n)}; upper[n] is the empty set.
struct SortView {
  std::vector<int> perm;            // perm[i] = original index of (i+1)-th smallest
  std::vector<std::uint32_t> upper; // size n+1, upper[0] = full set

  static SortView of(std::span<const double> x);
};

/// sum x_(i) [mu(A_(i)) - mu(A_(i+1))]. Accepts any real x; idempotent,
/// internal, independent of the tie-breaking choice among equal components.
double choquet(std::span<const double> x, const FuzzyMeasure& mu);

/// max over i of min(x_(i), mu(A_(i))) on [0,1]^n.
double sugeno(std::span<const double> x, const FuzzyMeasure& mu);

/// Reordering-free form: max over T of min(mu(T), min_{i in T} x_i). The
/// empty T contributes mu(empty) = 0. Equals sugeno() exactly; kept as an
/// independent oracle.
double sugeno_disjunctive(std::span<const double> x, const FuzzyMeasure& mu);

/// median[x_1, ..., x_n, mu(A_(2)), ..., mu(A_(n))]. Equals sugeno() exactly;
/// second independent oracle.
double sugeno_weighted_median(std::span<const double> x, const FuzzyMeasure& mu);

double wam(std::span<const double> x, const WeightVector& w);  // sum-one
double owa(std::span<const double> x, const WeightVector& w);  // sum-one
double order_statistic(std::span<const double> x, int k);      // 1-based

/// Cardinality-based measure mu(S) = sum of the last |S| weights; the
/// Choquet integral of the result reproduces owa(x, w) for every x.
FuzzyMeasure owa_to_measure(const WeightVector& w);

/// Inverse of owa_to_measure; requires a cardinality-based measure and
/// reports a witness pair otherwise.
WeightVector measure_to_owa(const FuzzyMeasure& mu);

double pmax(std::span<const double> x, const WeightVector& w);   // max-one
double pmin(std::span<const double> x, const WeightVector& w);   // min-zero
double opmax(std::span<const double> x, const WeightVector& w);  // max-one
double opmin(std::span<const double> x, const WeightVector& w);  // min-zero

/// min-zero weights whose ordered weighted minimum coincides with the
/// ordered weighted maximum for `w`, derived through the shared
/// cardinality-based measure.
WeightVector opmax_to_opmin_weights(const WeightVector& w);

/// Disjunctive normal form over the winning sets of gamma. Coincides with
/// both the Choquet and the Sugeno integral of gamma on [0,1]^n.
double lattice_polynomial(std::span<const double> x, const BinaryMeasure& gamma);

/// w_i proportional to (1-theta)^(n-i) theta^(i-1); theta = 0 gives
/// (1,0,...,0), theta = 1 gives (0,...,0,1), theta = 1/2 uniform.
WeightVector geometric_weights(int n, double theta);

}  // namespace aggfn
