#include "aggfn/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "aggfn/errors.hpp"

namespace aggfn {

WeightVector::WeightVector(std::vector<double> w, WeightNorm norm)
    : weights_(std::move(w)), norm_(norm) {
  if (weights_.empty()) raise(errc::weight_error, "empty weight vector");
  for (double wi : weights_) {
    if (!std::isfinite(wi) || wi < 0.0)
      raise(errc::weight_error, "weights must be finite and nonnegative");
  }
  switch (norm_) {
    case WeightNorm::sum_one: {
      double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
      if (std::fabs(total - 1.0) > kEpsNorm)
        raise(errc::weight_error,
              "weights sum to " + std::to_string(total) + ", expected 1");
      break;
    }
    case WeightNorm::max_one: {
      double top = *std::max_element(weights_.begin(), weights_.end());
      if (top > 1.0 + kEpsNorm || std::fabs(top - 1.0) > kEpsNorm)
        raise(errc::weight_error, "max-one weights need max w = 1 in [0,1]");
      break;
    }
    case WeightNorm::min_zero: {
      double bottom = *std::min_element(weights_.begin(), weights_.end());
      double top = *std::max_element(weights_.begin(), weights_.end());
      if (top > 1.0 + kEpsNorm || std::fabs(bottom) > kEpsNorm)
        raise(errc::weight_error, "min-zero weights need min w = 0 in [0,1]");
      break;
    }
  }
}

WeightVector WeightVector::uniform(int n) {
  return sum_one(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

}  // namespace aggfn
