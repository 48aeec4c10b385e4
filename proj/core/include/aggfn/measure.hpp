#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aggfn/weights.hpp"

namespace aggfn {

/// Monotone set function on 2^N with mu(empty) = 0 and mu(N) = 1, stored as
/// an array of 2^n values indexed by subset bitmask (element i <-> bit i-1).
/// Validated once at construction; downstream operations assume validity.
class FuzzyMeasure {
 public:
  /// Validates boundary conditions, the [0,1] range, and monotonicity along
  /// all chains T vs T \ {i}. Throws AggError with a witness pair; never
  /// repairs values.
  static FuzzyMeasure validate(std::vector<double> values);

  static FuzzyMeasure additive(const WeightVector& w);     // sum-one
  static FuzzyMeasure possibility(const WeightVector& w);  // max-one
  static FuzzyMeasure necessity(const WeightVector& w);    // min-zero

  int n() const { return n_; }
  std::uint32_t full_mask() const { return (1u << n_) - 1u; }
  double operator[](std::uint32_t mask) const { return values_[mask]; }
  std::span<const double> values() const { return values_; }

 private:
  FuzzyMeasure(int n, std::vector<double> v) : n_(n), values_(std::move(v)) {}
  int n_;
  std::vector<double> values_;
};

struct MeasureFlags {
  bool additive = false;
  bool possibility = false;
  bool necessity = false;
  bool cardinality_based = false;
  bool binary = false;
};

/// Decides each flag exactly by exhaustive enumeration (subset pairs for the
/// union/intersection laws). Throws ground_set_too_large above `pair_cap`.
MeasureFlags classify_measure(const FuzzyMeasure& mu, int pair_cap = 12);

/// {0,1}-valued measure given by its upward-closed family of winning sets.
class BinaryMeasure {
 public:
  /// Exact indicator; validates upward closure and the boundary conditions.
  static BinaryMeasure from_winning(int n, const std::vector<std::uint32_t>& winning);
  /// Upward closure generated from the given sets (the DNF terms of a
  /// lattice polynomial).
  static BinaryMeasure from_minimal(int n, const std::vector<std::uint32_t>& minimal);

  int n() const { return n_; }
  bool wins(std::uint32_t mask) const { return win_[mask] != 0; }
  FuzzyMeasure to_measure() const;
  std::vector<std::uint32_t> winning_sets() const;

  /// All valid binary measures on n elements, brute force. Practical for
  /// n <= 4 (2^(2^n) candidates).
  static std::vector<BinaryMeasure> enumerate_all(int n);

 private:
  BinaryMeasure(int n, std::vector<char> win) : n_(n), win_(std::move(win)) {}
  int n_;
  std::vector<char> win_;
};

std::string subset_to_string(std::uint32_t mask);

}  // namespace aggfn
