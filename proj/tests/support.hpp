#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "aggfn/aggfn.hpp"

namespace testsupport {

using namespace aggfn;

inline bool close(double a, double b, double tol = 1e-9) {
  return std::fabs(a - b) <= tol;
}

// The worked fixture: n = 3, mu({2}) = 0.3, mu({1,2}) = 0.5, remaining
// values filled in monotone.
inline FuzzyMeasure worked_measure() {
  //                      {}   {1}  {2}  {1,2} {3}  {1,3} {2,3} N
  std::vector<double> v = {0.0, 0.2, 0.3, 0.5, 0.1, 0.55, 0.6, 1.0};
  return FuzzyMeasure::validate(std::move(v));
}

// Random valid measure: uniform raw values, monotone closure, pinned
// boundaries.
inline FuzzyMeasure random_measure(Rng& rng, int n) {
  std::uint32_t full = (1u << n) - 1u;
  std::vector<double> v(size_t{1} << n);
  for (std::uint32_t mask = 1; mask < full; ++mask) v[mask] = rng.unit();
  v[0] = 0.0;
  v[full] = 1.0;
  for (std::uint32_t mask = 1; mask < full; ++mask)
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) v[mask] = std::max(v[mask], v[mask & ~(1u << i)]);
  return FuzzyMeasure::validate(std::move(v));
}

inline FuzzyMeasure random_cardinality_measure(Rng& rng, int n) {
  std::vector<double> levels(n + 1);
  levels[0] = 0.0;
  levels[n] = 1.0;
  for (int s = 1; s < n; ++s) levels[s] = rng.unit();
  std::sort(levels.begin(), levels.end());
  levels[0] = 0.0;
  levels[n] = 1.0;
  std::vector<double> v(size_t{1} << n);
  for (std::uint32_t mask = 0; mask < v.size(); ++mask)
    v[mask] = levels[std::popcount(mask)];
  return FuzzyMeasure::validate(std::move(v));
}

inline WeightVector random_sum_one(Rng& rng, int n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& wi : w) {
    wi = 0.05 + rng.unit();
    total += wi;
  }
  for (double& wi : w) wi /= total;
  return WeightVector::sum_one(std::move(w));
}

inline WeightVector random_max_one(Rng& rng, int n) {
  std::vector<double> w(n);
  double top = 0.0;
  for (double& wi : w) {
    wi = rng.unit();
    top = std::max(top, wi);
  }
  for (double& wi : w) wi /= top;
  return WeightVector::max_one(std::move(w));
}

inline WeightVector random_min_zero(Rng& rng, int n) {
  std::vector<double> w(n);
  for (double& wi : w) wi = rng.unit();
  w[rng.uniform_int(0, n - 1)] = 0.0;
  return WeightVector::min_zero(std::move(w));
}

// Ricci's counterexample: idempotent, yet exceeds the largest component
// whenever x_n dominates.
inline double ricci(std::span<const double> x) {
  double last = x.back();
  double acc = last;
  for (size_t i = 0; i + 1 < x.size(); ++i) acc += last - x[i];
  return acc;
}

inline Aggregator make_aggregator(const char* kind, AggFn fn,
                                  std::optional<int> arity = std::nullopt) {
  Aggregator a;
  a.kind = kind;
  a.arity = arity;
  a.fn = std::move(fn);
  return a;
}

inline Aggregator arithmetic_family() {
  return make_aggregator("arithmetic", [](std::span<const double> x) {
    return arithmetic_mean(x);
  });
}

}  // namespace testsupport
