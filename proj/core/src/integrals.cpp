#include "aggfn/integrals.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "aggfn/errors.hpp"

namespace aggfn {

namespace {

void require_measure_dims(std::span<const double> x, const FuzzyMeasure& mu) {
  if (static_cast<int>(x.size()) != mu.n())
    raise(errc::dimension_mismatch,
          "input length " + std::to_string(x.size()) + " vs ground set " +
              std::to_string(mu.n()));
}

void require_unit_box(std::span<const double> x) {
  for (double xi : x)
    if (!(xi >= 0.0) || !(xi <= 1.0))
      raise(errc::range_violation, "input outside [0,1]^n");
}

void require_finite(std::span<const double> x) {
  for (double xi : x)
    if (!std::isfinite(xi))
      raise(errc::domain_error, "input components must be finite");
}

void require_weight_dims(std::span<const double> x, const WeightVector& w,
                         WeightNorm norm, const char* what) {
  if (w.normalization() != norm) raise(errc::weight_error, what);
  if (w.size() != static_cast<int>(x.size()))
    raise(errc::dimension_mismatch, "weights and input differ in length");
}

}  // namespace

SortView SortView::of(std::span<const double> x) {
  require_finite(x);
  SortView view;
  int n = static_cast<int>(x.size());
  view.perm.resize(n);
  std::iota(view.perm.begin(), view.perm.end(), 0);
  std::stable_sort(view.perm.begin(), view.perm.end(),
                   [&](int a, int b) { return x[a] < x[b]; });
  view.upper.resize(n + 1);
  view.upper[n] = 0;
  for (int i = n - 1; i >= 0; --i)
    view.upper[i] = view.upper[i + 1] | (1u << view.perm[i]);
  return view;
}

double choquet(std::span<const double> x, const FuzzyMeasure& mu) {
  require_measure_dims(x, mu);
  SortView view = SortView::of(x);
  int n = mu.n();
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    acc += x[view.perm[i]] * (mu[view.upper[i]] - mu[view.upper[i + 1]]);
  return acc;
}

double sugeno(std::span<const double> x, const FuzzyMeasure& mu) {
  require_measure_dims(x, mu);
  require_unit_box(x);
  SortView view = SortView::of(x);
  int n = mu.n();
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    acc = std::max(acc, std::min(x[view.perm[i]], mu[view.upper[i]]));
  return acc;
}

double sugeno_disjunctive(std::span<const double> x, const FuzzyMeasure& mu) {
  require_measure_dims(x, mu);
  require_unit_box(x);
  std::uint32_t full = mu.full_mask();
  double acc = 0.0;  // empty T contributes mu(empty) = 0
  for (std::uint32_t t = 1; t <= full; ++t) {
    double meet = 1.0;
    for (int i = 0; i < mu.n(); ++i)
      if (t & (1u << i)) meet = std::min(meet, x[i]);
    acc = std::max(acc, std::min(mu[t], meet));
  }
  return acc;
}

double sugeno_weighted_median(std::span<const double> x, const FuzzyMeasure& mu) {
  require_measure_dims(x, mu);
  require_unit_box(x);
  SortView view = SortView::of(x);
  int n = mu.n();
  std::vector<double> pool(x.begin(), x.end());
  for (int i = 1; i < n; ++i) pool.push_back(mu[view.upper[i]]);
  // 2n-1 values; the median is the n-th smallest.
  std::nth_element(pool.begin(), pool.begin() + (n - 1), pool.end());
  return pool[n - 1];
}

double wam(std::span<const double> x, const WeightVector& w) {
  require_weight_dims(x, w, WeightNorm::sum_one, "wam needs sum-one weights");
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) acc += w[static_cast<int>(i)] * x[i];
  return acc;
}

double owa(std::span<const double> x, const WeightVector& w) {
  require_weight_dims(x, w, WeightNorm::sum_one, "owa needs sum-one weights");
  require_finite(x);
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  double acc = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) acc += w[static_cast<int>(i)] * sorted[i];
  return acc;
}

double order_statistic(std::span<const double> x, int k) {
  if (x.empty()) raise(errc::dimension_mismatch, "empty input vector");
  if (k < 1 || k > static_cast<int>(x.size()))
    raise(errc::index_error, "order statistic index " + std::to_string(k) +
                                 " outside 1.." + std::to_string(x.size()));
  require_finite(x);
  std::vector<double> sorted(x.begin(), x.end());
  std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end());
  return sorted[k - 1];
}

FuzzyMeasure owa_to_measure(const WeightVector& w) {
  if (w.normalization() != WeightNorm::sum_one)
    raise(errc::weight_error, "owa measure needs sum-one weights");
  int n = w.size();
  // Tail sums by cardinality: mu(|S| = s) = w_{n-s+1} + ... + w_n.
  std::vector<double> tail(n + 1, 0.0);
  for (int s = 1; s <= n; ++s) tail[s] = tail[s - 1] + w[n - s];
  tail[n] = 1.0;
  std::vector<double> v(size_t{1} << n);
  for (std::uint32_t mask = 0; mask < v.size(); ++mask)
    v[mask] = tail[std::popcount(mask)];
  return FuzzyMeasure::validate(std::move(v));
}

WeightVector measure_to_owa(const FuzzyMeasure& mu) {
  int n = mu.n();
  std::uint32_t full = mu.full_mask();
  // Representative value per cardinality, with an exactness sweep.
  std::vector<double> by_card(n + 1, 0.0);
  std::vector<std::uint32_t> rep(n + 1, 0);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    int s = std::popcount(mask);
    if (rep[s] == 0 && mask != 0) {
      rep[s] = mask;
      by_card[s] = mu[mask];
    } else if (mask != 0 && std::fabs(mu[mask] - by_card[s]) > kEpsNorm) {
      throw AggError(errc::not_cardinality_based,
                     "mu" + subset_to_string(rep[s]) + " = " +
                         std::to_string(by_card[s]) + " but mu" +
                         subset_to_string(mask) + " = " + std::to_string(mu[mask]),
                     rep[s], mask);
    }
  }
  std::vector<double> w(n);
  for (int s = 0; s < n; ++s) w[n - s - 1] = by_card[s + 1] - by_card[s];
  for (double& wi : w) wi = std::max(wi, 0.0);  // clear -0 and rounding dust
  return WeightVector::sum_one(std::move(w));
}

double pmax(std::span<const double> x, const WeightVector& w) {
  require_weight_dims(x, w, WeightNorm::max_one, "pmax needs max-one weights");
  require_unit_box(x);
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i)
    acc = std::max(acc, std::min(w[static_cast<int>(i)], x[i]));
  return acc;
}

double pmin(std::span<const double> x, const WeightVector& w) {
  require_weight_dims(x, w, WeightNorm::min_zero, "pmin needs min-zero weights");
  require_unit_box(x);
  double acc = 1.0;
  for (size_t i = 0; i < x.size(); ++i)
    acc = std::min(acc, std::max(w[static_cast<int>(i)], x[i]));
  return acc;
}

double opmax(std::span<const double> x, const WeightVector& w) {
  require_weight_dims(x, w, WeightNorm::max_one, "opmax needs max-one weights");
  require_unit_box(x);
  SortView view = SortView::of(x);
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i)
    acc = std::max(acc, std::min(w[static_cast<int>(i)], x[view.perm[i]]));
  return acc;
}

// w_i pairs with the i-th smallest component; in the weighted-median view a
// nonincreasing opmin vector contributes w_1, ..., w_{n-1} (w_n is the
// min-zero slot). This lattice formula is the authoritative definition.
double opmin(std::span<const double> x, const WeightVector& w) {
  require_weight_dims(x, w, WeightNorm::min_zero, "opmin needs min-zero weights");
  require_unit_box(x);
  SortView view = SortView::of(x);
  double acc = 1.0;
  for (size_t i = 0; i < x.size(); ++i)
    acc = std::min(acc, std::max(w[static_cast<int>(i)], x[view.perm[i]]));
  return acc;
}

WeightVector opmax_to_opmin_weights(const WeightVector& w) {
  if (w.normalization() != WeightNorm::max_one)
    raise(errc::weight_error, "expected max-one weights");
  int n = w.size();
  // Shared cardinality-based measure: mu(|S| = s) is the max of the last s
  // weights; the opmin weights are mu at cardinality n-1, ..., 0.
  std::vector<double> tail_max(n + 1, 0.0);
  for (int s = 1; s <= n; ++s) tail_max[s] = std::max(tail_max[s - 1], w[n - s]);
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = tail_max[n - 1 - i];
  return WeightVector::min_zero(std::move(v));
}

double lattice_polynomial(std::span<const double> x, const BinaryMeasure& gamma) {
  if (static_cast<int>(x.size()) != gamma.n())
    raise(errc::dimension_mismatch, "input length vs ground set");
  std::uint32_t full = (1u << gamma.n()) - 1u;
  bool any = false;
  double acc = 0.0;
  for (std::uint32_t t = 1; t <= full; ++t) {
    if (!gamma.wins(t)) continue;
    double meet = x[std::countr_zero(t)];
    for (int i = 0; i < gamma.n(); ++i)
      if (t & (1u << i)) meet = std::min(meet, x[i]);
    acc = any ? std::max(acc, meet) : meet;
    any = true;
  }
  return acc;
}

WeightVector geometric_weights(int n, double theta) {
  if (n < 1) raise(errc::dimension_mismatch, "need n >= 1");
  if (!(theta >= 0.0) || !(theta <= 1.0))
    raise(errc::weight_error, "theta must lie in [0, 1]");
  std::vector<double> w(n);
  double total = 0.0;
  for (int i = 1; i <= n; ++i) {
    // pow(0, 0) = 1 keeps the endpoint cases (1,0,...,0) and (0,...,0,1).
    w[i - 1] = std::pow(1.0 - theta, n - i) * std::pow(theta, i - 1);
    total += w[i - 1];
  }
  for (double& wi : w) wi /= total;
  return WeightVector::sum_one(std::move(w));
}

}  // namespace aggfn
