#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace aggfn {

/// Deterministic uniform doubles on top of mt19937_64. The double mapping is
/// fixed here (53-bit mantissa scaling) rather than delegated to
/// std::uniform_real_distribution, whose output is implementation-defined;
/// identical seeds must give identical sample streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double unit() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds
  std::vector<int> permutation(int n);
  std::vector<double> vector(int n, double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

/// Sampling plan shared by the axiom checkers. Identical seed + config give
/// identical sample streams and verdicts.
struct Sampler {
  std::uint64_t seed = 0;
  double lo = 0.0;
  double hi = 1.0;
  int samples = 1000;

  /// When nonempty, each checker first sweeps the full grid levels^n (and
  /// pairs of grid points where the law needs two vectors) before drawing
  /// random samples. This makes small-n verdicts exhaustive on the grid.
  std::vector<double> grid_levels;
  int max_grid_points = 20000;

  Sampler with_seed(std::uint64_t s) const {
    Sampler c = *this;
    c.seed = s;
    return c;
  }

  /// Grid points first (levels^n, capped), then `samples` random vectors.
  std::vector<std::vector<double>> inputs(int n) const;
};

}  // namespace aggfn
