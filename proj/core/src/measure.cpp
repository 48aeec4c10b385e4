#include "aggfn/measure.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "aggfn/errors.hpp"

namespace aggfn {

namespace {

int ground_set_size(size_t len) {
  if (len == 0 || (len & (len - 1)) != 0)
    raise(errc::spec_error, "measure array length must be a power of two");
  int n = std::countr_zero(len);
  if (n < 1) raise(errc::spec_error, "measure needs at least one element");
  if (n > 20) raise(errc::ground_set_too_large, "ground sets above n = 20 are unsupported");
  return n;
}

}  // namespace

std::string subset_to_string(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i) {
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

FuzzyMeasure FuzzyMeasure::validate(std::vector<double> values) {
  int n = ground_set_size(values.size());
  std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    double v = values[mask];
    if (!std::isfinite(v) || v < -kEpsNorm || v > 1.0 + kEpsNorm)
      throw AggError(errc::range_violation,
                     "mu" + subset_to_string(mask) + " = " + std::to_string(v) +
                         " outside [0,1]",
                     mask, mask);
  }
  // Monotonicity along all chains T \ {i} vs T; reported before the boundary
  // conditions so a witness pair is available when both fail.
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int i = 0; i < n; ++i) {
      std::uint32_t bit = 1u << i;
      if (!(mask & bit)) continue;
      std::uint32_t sub = mask & ~bit;
      if (values[sub] > values[mask] + kEpsNorm)
        throw AggError(errc::monotonicity_violation,
                       "mu" + subset_to_string(sub) + " = " +
                           std::to_string(values[sub]) + " > mu" +
                           subset_to_string(mask) + " = " +
                           std::to_string(values[mask]),
                       sub, mask);
    }
  }
  if (std::fabs(values[0]) > kEpsNorm)
    throw AggError(errc::boundary_violation,
                   "mu(empty) = " + std::to_string(values[0]) + ", expected 0",
                   0, 0);
  if (std::fabs(values[full] - 1.0) > kEpsNorm)
    throw AggError(errc::boundary_violation,
                   "mu(N) = " + std::to_string(values[full]) + ", expected 1",
                   full, full);
  return FuzzyMeasure(n, std::move(values));
}

FuzzyMeasure FuzzyMeasure::additive(const WeightVector& w) {
  if (w.normalization() != WeightNorm::sum_one)
    raise(errc::weight_error, "additive measure needs sum-one weights");
  int n = w.size();
  std::vector<double> v(size_t{1} << n, 0.0);
  for (std::uint32_t mask = 1; mask < v.size(); ++mask) {
    double total = 0.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) total += w[i];
    v[mask] = total;
  }
  v[v.size() - 1] = 1.0;  // pin the boundary against rounding
  return FuzzyMeasure(n, std::move(v));
}

FuzzyMeasure FuzzyMeasure::possibility(const WeightVector& w) {
  if (w.normalization() != WeightNorm::max_one)
    raise(errc::weight_error, "possibility measure needs max-one weights");
  int n = w.size();
  std::vector<double> v(size_t{1} << n, 0.0);
  for (std::uint32_t mask = 1; mask < v.size(); ++mask) {
    double top = 0.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) top = std::max(top, w[i]);
    v[mask] = top;
  }
  return FuzzyMeasure(n, std::move(v));
}

FuzzyMeasure FuzzyMeasure::necessity(const WeightVector& w) {
  if (w.normalization() != WeightNorm::min_zero)
    raise(errc::weight_error, "necessity measure needs min-zero weights");
  int n = w.size();
  std::uint32_t full = (1u << n) - 1u;
  std::vector<double> v(size_t{1} << n, 0.0);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    double bottom = 1.0;  // empty meet over N \ S
    for (int i = 0; i < n; ++i)
      if (!(mask & (1u << i))) bottom = std::min(bottom, w[i]);
    v[mask] = bottom;
  }
  return FuzzyMeasure(n, std::move(v));
}

MeasureFlags classify_measure(const FuzzyMeasure& mu, int pair_cap) {
  int n = mu.n();
  if (n > pair_cap)
    raise(errc::ground_set_too_large,
          "pair enumeration for n = " + std::to_string(n) + " exceeds cap " +
              std::to_string(pair_cap));
  std::uint32_t full = mu.full_mask();
  MeasureFlags flags;
  flags.additive = true;
  flags.possibility = true;
  flags.necessity = true;
  flags.cardinality_based = true;
  flags.binary = true;

  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    double v = mu[mask];
    if (std::fabs(v) > kEpsNorm && std::fabs(v - 1.0) > kEpsNorm)
      flags.binary = false;
    double singleton_sum = 0.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) singleton_sum += mu[1u << i];
    if (std::fabs(v - singleton_sum) > kEpsNorm) flags.additive = false;
  }

  for (std::uint32_t s = 0; s <= full; ++s) {
    for (std::uint32_t t = 0; t <= full; ++t) {
      if (std::fabs(mu[s | t] - std::max(mu[s], mu[t])) > kEpsNorm)
        flags.possibility = false;
      if (std::fabs(mu[s & t] - std::min(mu[s], mu[t])) > kEpsNorm)
        flags.necessity = false;
      if (std::popcount(s) == std::popcount(t) &&
          std::fabs(mu[s] - mu[t]) > kEpsNorm)
        flags.cardinality_based = false;
    }
    if (!flags.possibility && !flags.necessity && !flags.cardinality_based)
      break;
  }
  return flags;
}

BinaryMeasure BinaryMeasure::from_winning(int n,
                                          const std::vector<std::uint32_t>& winning) {
  if (n < 1 || n > 20) raise(errc::spec_error, "binary measure needs 1 <= n <= 20");
  std::uint32_t full = (1u << n) - 1u;
  std::vector<char> win(size_t{1} << n, 0);
  for (std::uint32_t s : winning) {
    if (s > full) raise(errc::spec_error, "winning set outside the ground set");
    win[s] = 1;
  }
  if (win[0]) raise(errc::boundary_violation, "empty set cannot win");
  if (!win[full]) raise(errc::boundary_violation, "the full set must win");
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!win[mask]) continue;
    for (int i = 0; i < n; ++i) {
      std::uint32_t sup = mask | (1u << i);
      if (!win[sup])
        throw AggError(errc::monotonicity_violation,
                       "winning family not upward closed at " +
                           subset_to_string(mask) + " vs " + subset_to_string(sup),
                       mask, sup);
    }
  }
  return BinaryMeasure(n, std::move(win));
}

BinaryMeasure BinaryMeasure::from_minimal(int n,
                                          const std::vector<std::uint32_t>& minimal) {
  if (n < 1 || n > 20) raise(errc::spec_error, "binary measure needs 1 <= n <= 20");
  if (minimal.empty()) raise(errc::spec_error, "need at least one winning set");
  std::uint32_t full = (1u << n) - 1u;
  std::vector<char> win(size_t{1} << n, 0);
  for (std::uint32_t s : minimal) {
    if (s == 0) raise(errc::boundary_violation, "empty set cannot win");
    if (s > full) raise(errc::spec_error, "winning set outside the ground set");
  }
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (std::uint32_t s : minimal) {
      if ((mask & s) == s) {
        win[mask] = 1;
        break;
      }
    }
  }
  return BinaryMeasure(n, std::move(win));
}

FuzzyMeasure BinaryMeasure::to_measure() const {
  std::vector<double> v(win_.size());
  for (size_t i = 0; i < win_.size(); ++i) v[i] = win_[i] ? 1.0 : 0.0;
  return FuzzyMeasure::validate(std::move(v));
}

std::vector<std::uint32_t> BinaryMeasure::winning_sets() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < win_.size(); ++mask)
    if (win_[mask]) out.push_back(mask);
  return out;
}

std::vector<BinaryMeasure> BinaryMeasure::enumerate_all(int n) {
  if (n < 1 || n > 4)
    raise(errc::ground_set_too_large, "brute-force enumeration only for n <= 4");
  std::uint32_t full = (1u << n) - 1u;
  size_t count = size_t{1} << (size_t{1} << n);
  std::vector<BinaryMeasure> out;
  for (size_t bits = 0; bits < count; ++bits) {
    std::vector<char> win(size_t{1} << n, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask)
      win[mask] = (bits >> mask) & 1;
    if (win[0] || !win[full]) continue;
    bool closed = true;
    for (std::uint32_t mask = 0; mask <= full && closed; ++mask) {
      if (!win[mask]) continue;
      for (int i = 0; i < n; ++i)
        if (!win[mask | (1u << i)]) {
          closed = false;
          break;
        }
    }
    if (closed) out.push_back(BinaryMeasure(n, std::move(win)));
  }
  return out;
}

}  // namespace aggfn
