#include "aggfn/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aggfn/errors.hpp"

namespace aggfn {

namespace {

double eval(const Aggregator& A, std::span<const double> x) { return A.fn(x); }

void require_arity(const Aggregator& A, int n) {
  if (n < 1) raise(errc::spec_error, "checks need n >= 1");
  if (A.arity && *A.arity != n)
    raise(errc::spec_error, "aggregator '" + A.kind + "' has fixed arity " +
                                std::to_string(*A.arity) + ", requested n = " +
                                std::to_string(n));
}

struct Check {
  PropertyReport report;
  bool failed = false;

  Check(std::string property, const Sampler& s, double tol) {
    report.property = std::move(property);
    report.tolerance = tol;
    report.seed = s.seed;
  }

  void fail(std::vector<std::vector<double>> inputs, std::vector<double> values,
            double violation, std::string note = "") {
    if (failed) return;
    report.verdict = Verdict::fails;
    report.witness =
        Witness{std::move(inputs), std::move(values), violation, std::move(note)};
    failed = true;
  }

  void count() { report.samples_used += 1; }
};

std::string perm_note(const std::vector<int>& perm) {
  std::string s = "permutation (";
  for (size_t i = 0; i < perm.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(perm[i] + 1);
  }
  return s + ")";
}

std::vector<double> apply_perm(std::span<const double> x,
                               const std::vector<int>& perm) {
  std::vector<double> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = x[perm[i]];
  return y;
}

// Piecewise-linear strictly increasing bijection of R with random breakpoints
// inside [lo, hi] and log-uniform slopes; extended by the edge slopes.
struct PiecewiseLinear {
  std::vector<double> xs;      // breakpoints, ascending
  std::vector<double> ys;      // values at breakpoints
  std::vector<double> slopes;  // size xs.size() + 1

  static PiecewiseLinear random(Rng& rng, double lo, double hi) {
    PiecewiseLinear f;
    int breaks = rng.uniform_int(5, 9);
    f.xs.resize(breaks);
    for (double& x : f.xs) x = rng.uniform(lo, hi);
    std::sort(f.xs.begin(), f.xs.end());
    f.slopes.resize(breaks + 1);
    for (double& m : f.slopes) m = rng.log_uniform(1e-2, 1e2);
    f.ys.resize(breaks);
    f.ys[0] = rng.uniform(-1.0, 1.0);
    for (int i = 1; i < breaks; ++i)
      f.ys[i] = f.ys[i - 1] + f.slopes[i] * (f.xs[i] - f.xs[i - 1]);
    return f;
  }

  double operator()(double x) const {
    if (x < xs.front()) return ys.front() + slopes.front() * (x - xs.front());
    for (size_t i = 0; i + 1 < xs.size(); ++i)
      if (x <= xs[i + 1]) return ys[i] + slopes[i + 1] * (x - xs[i]);
    return ys.back() + slopes.back() * (x - xs.back());
  }

  std::vector<double> map(std::span<const double> x) const {
    std::vector<double> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = (*this)(x[i]);
    return y;
  }
};

double pick(double tol, double fallback) { return tol >= 0.0 ? tol : fallback; }

}  // namespace

PropertyReport check_symmetry(const Aggregator& A, int n, const Sampler& s,
                              double tol) {
  require_arity(A, n);
  Check c("symmetry", s, pick(tol, kEpsLaw));
  Rng rng(s.seed);
  bool sweep = n <= 8;
  for (const auto& x : s.inputs(n)) {
    double ax = eval(A, x);
    if (sweep) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        c.count();
        std::vector<double> y = apply_perm(x, perm);
        double ay = eval(A, y);
        if (std::fabs(ax - ay) > c.report.tolerance) {
          c.fail({x, y}, {ax, ay}, std::fabs(ax - ay), perm_note(perm));
          return c.report;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      for (int k = 0; k < 20; ++k) {
        c.count();
        std::vector<int> perm = rng.permutation(n);
        std::vector<double> y = apply_perm(x, perm);
        double ay = eval(A, y);
        if (std::fabs(ax - ay) > c.report.tolerance) {
          c.fail({x, y}, {ax, ay}, std::fabs(ax - ay), perm_note(perm));
          return c.report;
        }
      }
    }
  }
  return c.report;
}

PropertyReport check_monotonicity(const Aggregator& A, int n,
                                  MonotonicityGrade grade, const Sampler& s,
                                  double tol) {
  require_arity(A, n);
  const char* name = grade == MonotonicityGrade::nondecreasing ? "nondecreasing"
                     : grade == MonotonicityGrade::strict      ? "strict"
                                                               : "unanimous";
  Check c(name, s, pick(tol, kEpsLaw));
  Rng rng(s.seed);
  double width = s.hi - s.lo;
  for (auto x : s.inputs(n)) {
    c.count();
    std::vector<double> up = x;
    switch (grade) {
      case MonotonicityGrade::nondecreasing: {
        // raise a random nonempty subset of coordinates
        int raised = 0;
        for (int i = 0; i < n; ++i) {
          if (rng.unit() < 0.5) {
            up[i] = std::min(s.hi, up[i] + rng.uniform(0.0, width / 4));
            ++raised;
          }
        }
        if (raised == 0) up[rng.uniform_int(0, n - 1)] = s.hi;
        double ax = eval(A, x);
        double ay = eval(A, up);
        if (ay < ax - c.report.tolerance) {
          c.fail({x, up}, {ax, ay}, ax - ay);
          return c.report;
        }
        break;
      }
      case MonotonicityGrade::strict: {
        int i = rng.uniform_int(0, n - 1);
        double delta = rng.uniform(width / 10, width / 4);
        x[i] = std::min(x[i], s.hi - delta);
        up = x;
        up[i] = x[i] + delta;
        double ax = eval(A, x);
        double ay = eval(A, up);
        if (!(ay - ax > c.report.tolerance)) {
          c.fail({x, up}, {ax, ay}, ax - ay, "no strict increase");
          return c.report;
        }
        break;
      }
      case MonotonicityGrade::unanimous: {
        for (int i = 0; i < n; ++i) {
          double delta = rng.uniform(width / 10, width / 4);
          x[i] = std::min(x[i], s.hi - delta);
          up[i] = x[i] + delta;
        }
        double ax = eval(A, x);
        double ay = eval(A, up);
        if (!(ay - ax > c.report.tolerance)) {
          c.fail({x, up}, {ax, ay}, ax - ay, "no strict increase");
          return c.report;
        }
        break;
      }
    }
  }
  return c.report;
}

PropertyReport check_idempotency(const Aggregator& A, int n, const Sampler& s,
                                 bool weak, double tol) {
  require_arity(A, n);
  Check c(weak ? "weak-idempotent" : "idempotent", s, pick(tol, kEpsLaw));
  auto test = [&](double v) -> bool {
    c.count();
    std::vector<double> x(static_cast<size_t>(n), v);
    double av = eval(A, x);
    if (std::fabs(av - v) > c.report.tolerance) {
      c.fail({x}, {av}, std::fabs(av - v));
      return false;
    }
    return true;
  };
  if (weak) {
    if (test(s.lo)) test(s.hi);
    return c.report;
  }
  for (double level : s.grid_levels)
    if (!test(level)) return c.report;
  Rng rng(s.seed);
  for (int k = 0; k < s.samples; ++k)
    if (!test(rng.uniform(s.lo, s.hi))) return c.report;
  return c.report;
}

namespace {

enum class BoundKind { conjunctive, disjunctive, internal };

PropertyReport check_bounds(const Aggregator& A, int n, const Sampler& s,
                            const char* name, BoundKind kind, double tol) {
  require_arity(A, n);
  Check c(name, s, pick(tol, kEpsLaw));
  for (const auto& x : s.inputs(n)) {
    c.count();
    double ax = eval(A, x);
    double lo = *std::min_element(x.begin(), x.end());
    double hi = *std::max_element(x.begin(), x.end());
    // conjunctive: A <= min x; disjunctive: A >= max x; internal: both bounds
    double violation = 0.0;
    switch (kind) {
      case BoundKind::conjunctive: violation = ax - lo; break;
      case BoundKind::disjunctive: violation = hi - ax; break;
      case BoundKind::internal: violation = std::max(lo - ax, ax - hi); break;
    }
    if (violation > c.report.tolerance) {
      c.fail({x}, {ax}, violation);
      return c.report;
    }
  }
  return c.report;
}

}  // namespace

PropertyReport check_conjunctive(const Aggregator& A, int n, const Sampler& s,
                                 double tol) {
  return check_bounds(A, n, s, "conjunctive", BoundKind::conjunctive, tol);
}

PropertyReport check_disjunctive(const Aggregator& A, int n, const Sampler& s,
                                 double tol) {
  return check_bounds(A, n, s, "disjunctive", BoundKind::disjunctive, tol);
}

PropertyReport check_internal(const Aggregator& A, int n, const Sampler& s,
                              double tol) {
  return check_bounds(A, n, s, "internal", BoundKind::internal, tol);
}

PropertyReport check_meaningfulness(const Aggregator& A, int n,
                                    MeaningfulScale scale, const Sampler& s,
                                    double tol_in) {
  require_arity(A, n);
  const char* name = nullptr;
  switch (scale) {
    case MeaningfulScale::io_ratio: name = "meaningful-io-ratio"; break;
    case MeaningfulScale::in_ratio: name = "meaningful-in-ratio"; break;
    case MeaningfulScale::io_interval: name = "meaningful-io-interval"; break;
    case MeaningfulScale::in_interval: name = "meaningful-in-interval"; break;
    case MeaningfulScale::io_ordinal: name = "meaningful-io-ordinal"; break;
    case MeaningfulScale::in_ordinal: name = "meaningful-in-ordinal"; break;
  }
  Check c(name, s, pick(tol_in, kEpsLaw));
  Rng rng(s.seed);
  double tol = c.report.tolerance;
  long skipped = 0;

  switch (scale) {
    case MeaningfulScale::io_ratio: {
      for (const auto& x : s.inputs(n)) {
        c.count();
        double r = rng.log_uniform(0.05, 20.0);
        std::vector<double> rx(x.size());
        for (size_t i = 0; i < x.size(); ++i) rx[i] = r * x[i];
        double lhs = eval(A, rx);
        double rhs = r * eval(A, x);
        if (std::fabs(lhs - rhs) > tol * (1.0 + std::fabs(rhs))) {
          c.fail({x, rx}, {eval(A, x), lhs}, std::fabs(lhs - rhs),
                 "r = " + format_double(r));
          return c.report;
        }
      }
      break;
    }
    case MeaningfulScale::io_interval: {
      for (const auto& x : s.inputs(n)) {
        c.count();
        double r = rng.log_uniform(0.05, 20.0);
        double shift = rng.uniform(-2.0 * (s.hi - s.lo), 2.0 * (s.hi - s.lo));
        std::vector<double> tx(x.size());
        for (size_t i = 0; i < x.size(); ++i) tx[i] = r * x[i] + shift;
        double lhs = eval(A, tx);
        double rhs = r * eval(A, x) + shift;
        if (std::fabs(lhs - rhs) > tol * (1.0 + std::fabs(rhs))) {
          c.fail({x, tx}, {eval(A, x), lhs}, std::fabs(lhs - rhs),
                 "r = " + format_double(r) + ", s = " + format_double(shift));
          return c.report;
        }
      }
      break;
    }
    case MeaningfulScale::io_ordinal: {
      for (const auto& x : s.inputs(n)) {
        c.count();
        PiecewiseLinear phi = PiecewiseLinear::random(rng, s.lo, s.hi);
        std::vector<double> px = phi.map(x);
        double lhs = eval(A, px);
        double rhs = phi(eval(A, x));
        if (std::fabs(lhs - rhs) > tol * (1.0 + std::fabs(rhs))) {
          c.fail({x, px}, {eval(A, x), lhs, rhs}, std::fabs(lhs - rhs),
                 "piecewise-linear phi");
          return c.report;
        }
      }
      break;
    }
    case MeaningfulScale::in_ratio: {
      // Consequence test: for fixed r the ratio A(rx)/A(x) is a constant
      // R_r > 0; samples with A(x) ~ 0 are skipped and counted.
      auto pool = s.inputs(n);
      constexpr int kGroups = 8;
      size_t per_group = std::max<size_t>(3, pool.size() / kGroups);
      size_t at = 0;
      for (int g = 0; g < kGroups && at < pool.size(); ++g) {
        double r = rng.log_uniform(0.05, 20.0);
        bool have_ref = false;
        double ref_ratio = 0.0;
        std::vector<double> ref_x;
        for (size_t k = 0; k < per_group && at < pool.size(); ++k, ++at) {
          const auto& x = pool[at];
          c.count();
          double ax = eval(A, x);
          if (std::fabs(ax) < 1e-12) {
            ++skipped;
            continue;
          }
          std::vector<double> rx(x.size());
          for (size_t i = 0; i < x.size(); ++i) rx[i] = r * x[i];
          double ratio = eval(A, rx) / ax;
          if (!have_ref) {
            if (ratio <= 0.0) {
              c.fail({x, rx}, {ax, eval(A, rx)}, -ratio, "R_r not positive");
              return c.report;
            }
            have_ref = true;
            ref_ratio = ratio;
            ref_x = x;
            continue;
          }
          if (std::fabs(ratio - ref_ratio) > tol * (1.0 + std::fabs(ref_ratio))) {
            c.fail({ref_x, x}, {ref_ratio, ratio}, std::fabs(ratio - ref_ratio),
                   "r = " + format_double(r));
            return c.report;
          }
        }
      }
      break;
    }
    case MeaningfulScale::in_interval: {
      // A(rx + s) must be an affine image R A(x) + S with R > 0: fit on the
      // most-spread pair of the first three samples, verify on the rest.
      auto pool = s.inputs(n);
      constexpr int kGroups = 8;
      size_t per_group = std::max<size_t>(4, pool.size() / kGroups);
      size_t at = 0;
      for (int g = 0; g < kGroups && at < pool.size(); ++g) {
        double r = rng.log_uniform(0.05, 20.0);
        double shift = rng.uniform(-2.0 * (s.hi - s.lo), 2.0 * (s.hi - s.lo));
        std::vector<std::vector<double>> xs;
        std::vector<double> as, bs;
        for (size_t k = 0; k < per_group && at < pool.size(); ++k, ++at) {
          const auto& x = pool[at];
          c.count();
          std::vector<double> tx(x.size());
          for (size_t i = 0; i < x.size(); ++i) tx[i] = r * x[i] + shift;
          xs.push_back(x);
          as.push_back(eval(A, x));
          bs.push_back(eval(A, tx));
        }
        if (as.size() < 2) continue;
        double spread = 0.0;
        size_t i0 = 0, i1 = 0;
        size_t fit_count = std::min<size_t>(3, as.size());
        for (size_t i = 0; i < fit_count; ++i)
          for (size_t j = i + 1; j < fit_count; ++j)
            if (std::fabs(as[i] - as[j]) > spread) {
              spread = std::fabs(as[i] - as[j]);
              i0 = i;
              i1 = j;
            }
        if (spread <= tol) {
          // constant-output family: R degenerates; accept if outputs stay
          // constant, flag the branch in the report.
          for (size_t i = 1; i < bs.size(); ++i)
            if (std::fabs(bs[i] - bs[0]) > tol * (1.0 + std::fabs(bs[0]))) {
              c.fail({xs[0], xs[i]}, {bs[0], bs[i]}, std::fabs(bs[i] - bs[0]),
                     "constant inputs, varying outputs");
              return c.report;
            }
          c.report.note = "constant-output branch taken";
          continue;
        }
        double R = (bs[i1] - bs[i0]) / (as[i1] - as[i0]);
        double S = bs[i0] - R * as[i0];
        if (!(R > 0.0)) {
          c.fail({xs[i0], xs[i1]}, {as[i0], as[i1], bs[i0], bs[i1]},
                 -R, "fitted R not positive");
          return c.report;
        }
        for (size_t i = 0; i < bs.size(); ++i) {
          double want = R * as[i] + S;
          if (std::fabs(bs[i] - want) > tol * (1.0 + std::fabs(want)) +
                                            tol * std::fabs(R)) {
            c.fail({xs[i]}, {as[i], bs[i], want}, std::fabs(bs[i] - want),
                   "affine fit broken, r = " + format_double(r));
            return c.report;
          }
        }
      }
      break;
    }
    case MeaningfulScale::in_ordinal: {
      auto cmp = [tol](double a, double b) -> int {
        if (std::fabs(a - b) <= tol) return 0;
        return a < b ? -1 : 1;
      };
      auto pool = s.inputs(n);
      for (size_t at = 0; at + 1 < pool.size(); at += 2) {
        c.count();
        const auto& x = pool[at];
        const auto& y = pool[at + 1];
        PiecewiseLinear phi = PiecewiseLinear::random(rng, s.lo, s.hi);
        int before = cmp(eval(A, x), eval(A, y));
        int after = cmp(eval(A, phi.map(x)), eval(A, phi.map(y)));
        if (before != after) {
          c.fail({x, y}, {eval(A, x), eval(A, y), eval(A, phi.map(x)),
                          eval(A, phi.map(y))},
                 std::fabs(before - after), "order not preserved under phi");
          return c.report;
        }
      }
      break;
    }
  }
  if (skipped > 0)
    c.report.note = "skipped " + std::to_string(skipped) + " near-zero samples";
  return c.report;
}

PropertyReport check_associativity(const Aggregator& A, const Sampler& s,
                                   double tol) {
  if (A.arity && *A.arity != 2)
    raise(errc::spec_error, "associativity is a 2-ary law");
  Check c("associative", s, pick(tol, kEpsLaw));
  auto op = [&](double a, double b) {
    const double xy[2] = {a, b};
    return eval(A, xy);
  };
  Rng rng(s.seed);
  std::vector<std::vector<double>> triples;
  for (double a : s.grid_levels)
    for (double b : s.grid_levels)
      for (double z : s.grid_levels) triples.push_back({a, b, z});
  for (int k = 0; k < s.samples; ++k)
    triples.push_back(
        {rng.uniform(s.lo, s.hi), rng.uniform(s.lo, s.hi), rng.uniform(s.lo, s.hi)});
  for (const auto& t : triples) {
    c.count();
    double left = op(op(t[0], t[1]), t[2]);
    double right = op(t[0], op(t[1], t[2]));
    if (std::fabs(left - right) > c.report.tolerance) {
      c.fail({t}, {left, right}, std::fabs(left - right));
      return c.report;
    }
  }
  return c.report;
}

namespace {

PropertyReport check_sequence_law(const char* name, const AggFn& family,
                                  int n_max, const Sampler& s, bool duplicate,
                                  double tol) {
  if (n_max < 2) raise(errc::spec_error, "sequence laws need n_max >= 2");
  Check c(name, s, pick(tol, kEpsLaw));
  Rng rng(s.seed);
  int combos = 0;
  for (int n = 2; n <= n_max; ++n) combos += n - 1;
  int per_combo = std::max(1, s.samples / combos);
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int rep = 0; rep < per_combo; ++rep) {
        c.count();
        std::vector<double> x = rng.vector(n, s.lo, s.hi);
        double whole = family(x);
        std::span<const double> head(x.data(), static_cast<size_t>(k));
        std::span<const double> tail(x.data() + k, static_cast<size_t>(n - k));
        double m1 = family(head);
        double m2 = family(tail);
        double combined;
        if (duplicate) {
          std::vector<double> dup(static_cast<size_t>(n));
          std::fill(dup.begin(), dup.begin() + k, m1);
          std::fill(dup.begin() + k, dup.end(), m2);
          combined = family(dup);
        } else {
          const double pair[2] = {m1, m2};
          combined = family(pair);
        }
        if (std::fabs(whole - combined) > c.report.tolerance) {
          c.fail({x}, {whole, combined}, std::fabs(whole - combined),
                 "n = " + std::to_string(n) + ", k = " + std::to_string(k));
          return c.report;
        }
      }
    }
  }
  return c.report;
}

}  // namespace

PropertyReport check_sequence_associativity(const AggFn& family, int n_max,
                                            const Sampler& s, double tol) {
  return check_sequence_law("seq-associative", family, n_max, s, false, tol);
}

PropertyReport check_decomposability(const AggFn& family, int n_max,
                                     const Sampler& s, double tol) {
  return check_sequence_law("decomposable", family, n_max, s, true, tol);
}

PropertyReport check_bisymmetry(const AggFn& family, int n_max,
                                const Sampler& s, double tol) {
  Check c("bisymmetric", s, pick(tol, kEpsLaw));
  Rng rng(s.seed);
  int hi = std::min(n_max, 4);
  if (hi < 2) raise(errc::spec_error, "bisymmetry needs n_max >= 2");
  int combos = (hi - 1) * (hi - 1);
  int per_combo = std::max(1, s.samples / combos);
  for (int p = 2; p <= hi; ++p) {
    for (int n = 2; n <= hi; ++n) {
      for (int rep = 0; rep < per_combo; ++rep) {
        c.count();
        std::vector<std::vector<double>> m(p);
        for (auto& row : m) row = rng.vector(n, s.lo, s.hi);
        std::vector<double> row_agg(p);
        for (int i = 0; i < p; ++i) row_agg[i] = family(m[i]);
        std::vector<double> col_agg(n);
        for (int j = 0; j < n; ++j) {
          std::vector<double> col(p);
          for (int i = 0; i < p; ++i) col[i] = m[i][j];
          col_agg[j] = family(col);
        }
        double by_rows = family(row_agg);
        double by_cols = family(col_agg);
        if (std::fabs(by_rows - by_cols) > c.report.tolerance) {
          std::vector<std::vector<double>> flat = m;
          c.fail(std::move(flat), {by_rows, by_cols},
                 std::fabs(by_rows - by_cols),
                 "p = " + std::to_string(p) + ", n = " + std::to_string(n));
          return c.report;
        }
      }
    }
  }
  return c.report;
}

namespace {

// Comonotonic pair: share one sorting permutation.
void comonotonic_pair(Rng& rng, int n, double lo, double hi,
                      std::vector<double>& x, std::vector<double>& y) {
  std::vector<int> sigma = rng.permutation(n);
  std::vector<double> u = rng.vector(n, lo, hi);
  std::vector<double> v = rng.vector(n, lo, hi);
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  x.resize(n);
  y.resize(n);
  for (int i = 0; i < n; ++i) {
    x[sigma[i]] = u[i];
    y[sigma[i]] = v[i];
  }
}

}  // namespace

PropertyReport check_comonotonic(const Aggregator& A, int n, ComonotonicLaw law,
                                 const Sampler& s, double tol_in) {
  require_arity(A, n);
  const char* name = law == ComonotonicLaw::additive    ? "comonotonic-additive"
                     : law == ComonotonicLaw::minitive  ? "comonotonic-minitive"
                                                        : "comonotonic-maxitive";
  double tol = pick(tol_in, law == ComonotonicLaw::additive ? 1e-12 : 0.0);
  Check c(name, s, tol);
  Rng rng(s.seed);
  std::vector<double> x, y, combined(static_cast<size_t>(n));
  for (int k = 0; k < s.samples; ++k) {
    c.count();
    comonotonic_pair(rng, n, s.lo, s.hi, x, y);
    for (int i = 0; i < n; ++i) {
      switch (law) {
        case ComonotonicLaw::additive: combined[i] = x[i] + y[i]; break;
        case ComonotonicLaw::minitive: combined[i] = std::min(x[i], y[i]); break;
        case ComonotonicLaw::maxitive: combined[i] = std::max(x[i], y[i]); break;
      }
    }
    double lhs = eval(A, combined);
    double ax = eval(A, x);
    double ay = eval(A, y);
    double rhs = law == ComonotonicLaw::additive   ? ax + ay
                 : law == ComonotonicLaw::minitive ? std::min(ax, ay)
                                                   : std::max(ax, ay);
    if (std::fabs(lhs - rhs) > tol) {
      c.fail({x, y}, {lhs, rhs}, std::fabs(lhs - rhs));
      return c.report;
    }
  }
  return c.report;
}

PropertyReport check_additivity(const Aggregator& A, int n, const Sampler& s,
                                double tol) {
  require_arity(A, n);
  Check c("additive", s, pick(tol, kEpsLaw));
  Rng rng(s.seed);
  // Grid pairs first (exhaustive on vertices when configured), then random.
  std::vector<std::vector<double>> grid;
  if (!s.grid_levels.empty()) {
    Sampler grid_only = s;
    grid_only.samples = 0;
    grid = grid_only.inputs(n);
    double pairs = static_cast<double>(grid.size()) * grid.size();
    if (pairs > static_cast<double>(s.max_grid_points)) grid.clear();
  }
  auto test = [&](const std::vector<double>& x, const std::vector<double>& y) {
    c.count();
    std::vector<double> sum(x.size());
    for (size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
    double lhs = eval(A, sum);
    double rhs = eval(A, x) + eval(A, y);
    if (std::fabs(lhs - rhs) > c.report.tolerance) {
      c.fail({x, y}, {lhs, rhs}, std::fabs(lhs - rhs));
      return false;
    }
    return true;
  };
  for (const auto& x : grid)
    for (const auto& y : grid)
      if (!test(x, y)) return c.report;
  for (int k = 0; k < s.samples; ++k)
    if (!test(rng.vector(n, s.lo, s.hi), rng.vector(n, s.lo, s.hi)))
      return c.report;
  return c.report;
}

PropertyReport check_non_compensation(const Aggregator& A, int n,
                                      const Sampler& s, double tol) {
  require_arity(A, n);
  Check c("non-compensative", s, pick(tol, 0.0));
  if (n > 20) raise(errc::ground_set_too_large, "non-compensation sweep needs n <= 20");
  std::vector<double> r_grid = s.grid_levels;
  if (r_grid.empty())
    for (int i = 0; i <= 20; ++i) r_grid.push_back(i / 20.0);
  std::uint32_t full = (1u << n) - 1u;
  std::vector<double> x(static_cast<size_t>(n));
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    std::vector<double> ones(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) ones[i] = 1.0;
    double base = eval(A, ones);
    for (double r : r_grid) {
      for (int variant = 0; variant < 2; ++variant) {
        c.count();
        for (int i = 0; i < n; ++i) {
          bool in = (mask & (1u << i)) != 0;
          x[i] = variant == 0 ? (in ? r : 0.0) : (in ? 1.0 : r);
        }
        double v = eval(A, x);
        double d = std::min(std::fabs(v - base), std::fabs(v - r));
        if (d > c.report.tolerance) {
          c.fail({x}, {v, base, r}, d,
                 std::string(variant == 0 ? "r*1_S" : "1_S + r*1_(N\\S)") +
                     " with S = " + std::to_string(mask));
          return c.report;
        }
      }
    }
  }
  return c.report;
}

namespace {

PropertyReport check_weak_lattice(const Aggregator& A, int n, const Sampler& s,
                                  bool minitive, double tol) {
  require_arity(A, n);
  Check c(minitive ? "weakly-minitive" : "weakly-maxitive", s, pick(tol, 0.0));
  Rng rng(s.seed);
  std::vector<double> levels = s.grid_levels;
  for (const auto& x : s.inputs(n)) {
    double r = levels.empty() ? rng.uniform(s.lo, s.hi)
                              : levels[c.report.samples_used % levels.size()];
    c.count();
    std::vector<double> capped(x.size());
    for (size_t i = 0; i < x.size(); ++i)
      capped[i] = minitive ? std::min(x[i], r) : std::max(x[i], r);
    double lhs = eval(A, capped);
    double ax = eval(A, x);
    double rhs = minitive ? std::min(ax, r) : std::max(ax, r);
    if (std::fabs(lhs - rhs) > c.report.tolerance) {
      c.fail({x, {r}}, {lhs, rhs}, std::fabs(lhs - rhs));
      return c.report;
    }
  }
  return c.report;
}

}  // namespace

PropertyReport check_weakly_minitive(const Aggregator& A, int n,
                                     const Sampler& s, double tol) {
  return check_weak_lattice(A, n, s, true, tol);
}

PropertyReport check_weakly_maxitive(const Aggregator& A, int n,
                                     const Sampler& s, double tol) {
  return check_weak_lattice(A, n, s, false, tol);
}

PropertyReport check_continuity_smoke(const Aggregator& A, int n,
                                      const Sampler& s, double lipschitz) {
  require_arity(A, n);
  Check c("continuity-smoke", s, lipschitz);
  c.report.note = "heuristic: sampled modulus probe, not a continuity certificate";
  Rng rng(s.seed);
  constexpr double kDelta = 1e-6;
  const double allowed = lipschitz * kDelta;
  constexpr int kScan = 16;
  int sweeps = std::max(1, s.samples / kScan);
  for (int rep = 0; rep < sweeps; ++rep) {
    std::vector<double> x = rng.vector(n, s.lo, s.hi);
    int i = rng.uniform_int(0, n - 1);
    // coarse scan along one coordinate, then bisect any suspicious pair down
    // to the probe scale
    auto value_at = [&](double t) {
      std::vector<double> y = x;
      y[i] = t;
      return eval(A, y);
    };
    double step = (s.hi - s.lo) / kScan;
    double prev_t = s.lo;
    double prev_v = value_at(prev_t);
    for (int k = 1; k <= kScan; ++k) {
      c.count();
      double t = s.lo + k * step;
      double v = value_at(t);
      double lo_t = prev_t, hi_t = t, lo_v = prev_v, hi_v = v;
      while (std::fabs(hi_v - lo_v) > allowed && hi_t - lo_t > kDelta) {
        double mid_t = 0.5 * (lo_t + hi_t);
        double mid_v = value_at(mid_t);
        if (std::fabs(mid_v - lo_v) >= std::fabs(hi_v - mid_v)) {
          hi_t = mid_t;
          hi_v = mid_v;
        } else {
          lo_t = mid_t;
          lo_v = mid_v;
        }
      }
      if (std::fabs(hi_v - lo_v) > allowed) {
        std::vector<double> a = x, b = x;
        a[i] = lo_t;
        b[i] = hi_t;
        c.fail({a, b}, {lo_v, hi_v}, std::fabs(hi_v - lo_v),
               "jump over L*delta at the probe scale");
        return c.report;
      }
      prev_t = t;
      prev_v = v;
    }
  }
  return c.report;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "symmetry",
      "nondecreasing",
      "strict",
      "unanimous",
      "idempotent",
      "weak-idempotent",
      "conjunctive",
      "disjunctive",
      "internal",
      "associative",
      "seq-associative",
      "decomposable",
      "bisymmetric",
      "comonotonic-additive",
      "comonotonic-minitive",
      "comonotonic-maxitive",
      "weakly-minitive",
      "weakly-maxitive",
      "non-compensative",
      "additive",
      "meaningful-io-ratio",
      "meaningful-io-interval",
      "meaningful-io-ordinal",
      "meaningful-in-ratio",
      "meaningful-in-interval",
      "meaningful-in-ordinal",
      "continuity-smoke",
  };
  return names;
}

PropertyReport run_named_check(const Aggregator& A, const std::string& property,
                               const CheckConfig& config) {
  const Sampler& s = config.sampler;
  int n = A.arity ? *A.arity : config.n;
  double tol = config.tolerance;

  if (property == "symmetry") return check_symmetry(A, n, s, tol);
  if (property == "nondecreasing")
    return check_monotonicity(A, n, MonotonicityGrade::nondecreasing, s, tol);
  if (property == "strict")
    return check_monotonicity(A, n, MonotonicityGrade::strict, s, tol);
  if (property == "unanimous")
    return check_monotonicity(A, n, MonotonicityGrade::unanimous, s, tol);
  if (property == "idempotent") return check_idempotency(A, n, s, false, tol);
  if (property == "weak-idempotent") return check_idempotency(A, n, s, true, tol);
  if (property == "conjunctive") return check_conjunctive(A, n, s, tol);
  if (property == "disjunctive") return check_disjunctive(A, n, s, tol);
  if (property == "internal") return check_internal(A, n, s, tol);
  if (property == "associative") return check_associativity(A, s, tol);
  if (property == "seq-associative" || property == "decomposable" ||
      property == "bisymmetric") {
    if (A.arity)
      raise(errc::spec_error,
            "sequence law '" + property + "' needs a family aggregator");
    if (property == "seq-associative")
      return check_sequence_associativity(A.fn, config.n_max, s, tol);
    if (property == "decomposable")
      return check_decomposability(A.fn, config.n_max, s, tol);
    return check_bisymmetry(A.fn, config.n_max, s, tol);
  }
  if (property == "comonotonic-additive")
    return check_comonotonic(A, n, ComonotonicLaw::additive, s, tol);
  if (property == "comonotonic-minitive")
    return check_comonotonic(A, n, ComonotonicLaw::minitive, s, tol);
  if (property == "comonotonic-maxitive")
    return check_comonotonic(A, n, ComonotonicLaw::maxitive, s, tol);
  if (property == "weakly-minitive") return check_weakly_minitive(A, n, s, tol);
  if (property == "weakly-maxitive") return check_weakly_maxitive(A, n, s, tol);
  if (property == "non-compensative") return check_non_compensation(A, n, s, tol);
  if (property == "additive") return check_additivity(A, n, s, tol);
  if (property == "meaningful-io-ratio")
    return check_meaningfulness(A, n, MeaningfulScale::io_ratio, s, tol);
  if (property == "meaningful-io-interval")
    return check_meaningfulness(A, n, MeaningfulScale::io_interval, s, tol);
  if (property == "meaningful-io-ordinal")
    return check_meaningfulness(A, n, MeaningfulScale::io_ordinal, s, tol);
  if (property == "meaningful-in-ratio")
    return check_meaningfulness(A, n, MeaningfulScale::in_ratio, s, tol);
  if (property == "meaningful-in-interval")
    return check_meaningfulness(A, n, MeaningfulScale::in_interval, s, tol);
  if (property == "meaningful-in-ordinal")
    return check_meaningfulness(A, n, MeaningfulScale::in_ordinal, s, tol);
  if (property == "continuity-smoke")
    return tol >= 0 ? check_continuity_smoke(A, n, s, tol)
                    : check_continuity_smoke(A, n, s);

  raise(errc::spec_error, "unknown property '" + property + "'");
}

}  // namespace aggfn
