#include "aggfn/sampler.hpp"

#include <cmath>

#include "aggfn/errors.hpp"

namespace aggfn {

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

int Rng::uniform_int(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(uniform_int(0, i))]);
  return p;
}

std::vector<double> Rng::vector(int n, double lo, double hi) {
  std::vector<double> x(static_cast<size_t>(n));
  for (double& xi : x) xi = uniform(lo, hi);
  return x;
}

std::vector<std::vector<double>> Sampler::inputs(int n) const {
  if (n < 1) raise(errc::dimension_mismatch, "sampler needs n >= 1");
  std::vector<std::vector<double>> out;

  if (!grid_levels.empty()) {
    double total = std::pow(static_cast<double>(grid_levels.size()), n);
    if (total <= static_cast<double>(max_grid_points)) {
      std::vector<size_t> idx(static_cast<size_t>(n), 0);
      while (true) {
        std::vector<double> point(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) point[i] = grid_levels[idx[i]];
        out.push_back(std::move(point));
        int pos = 0;
        while (pos < n && ++idx[pos] == grid_levels.size()) idx[pos++] = 0;
        if (pos == n) break;
      }
    }
  }

  Rng rng(seed);
  for (int k = 0; k < samples; ++k) out.push_back(rng.vector(n, lo, hi));
  return out;
}

}  // namespace aggfn
