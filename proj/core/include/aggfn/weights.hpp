#pragma once

#include <span>
#include <vector>

namespace aggfn {

inline constexpr double kEpsNorm = 1e-9;

enum class WeightNorm {
  sum_one,   // each w_i >= 0, sum w_i = 1
  max_one,   // each w_i in [0,1], max w_i = 1 (weighted maximum)
  min_zero,  // each w_i in [0,1], min w_i = 0 (weighted minimum)
};

/// Nonnegative weights validated once against their normalization.
class WeightVector {
 public:
  WeightVector(std::vector<double> w, WeightNorm norm);

  static WeightVector sum_one(std::vector<double> w) {
    return WeightVector(std::move(w), WeightNorm::sum_one);
  }
  static WeightVector max_one(std::vector<double> w) {
    return WeightVector(std::move(w), WeightNorm::max_one);
  }
  static WeightVector min_zero(std::vector<double> w) {
    return WeightVector(std::move(w), WeightNorm::min_zero);
  }
  static WeightVector uniform(int n);

  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[static_cast<size_t>(i)]; }
  std::span<const double> weights() const { return weights_; }
  WeightNorm normalization() const { return norm_; }

 private:
  std::vector<double> weights_;
  WeightNorm norm_;
};

}  // namespace aggfn
