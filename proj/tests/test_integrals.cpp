#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace aggfn;
using namespace testsupport;

TEST_CASE("sort view invariants") {
  std::vector<double> x = {0.4, 0.9, 0.1};
  SortView v = SortView::of(x);
  CHECK(v.perm == std::vector<int>{2, 0, 1});
  CHECK(v.upper[0] == 0b111);
  CHECK(v.upper[1] == 0b011);  // {1,2}
  CHECK(v.upper[2] == 0b010);  // {2}
  CHECK(v.upper[3] == 0);

  // ties broken by ascending original index
  std::vector<double> tied = {0.5, 0.5, 0.2};
  SortView t = SortView::of(tied);
  CHECK(t.perm == std::vector<int>{2, 0, 1});
}

TEST_CASE("Choquet integral worked example and specials") {
  auto mu = worked_measure();
  std::vector<double> x = {0.4, 0.9, 0.1};
  // the ordered expansion for x3 <= x1 <= x2, frozen by hand:
  // 0.1*(1 - 0.5) + 0.4*(0.5 - 0.3) + 0.9*0.3 = 0.40
  double expansion = 0.1 * (1.0 - 0.5) + 0.4 * (0.5 - 0.3) + 0.9 * 0.3;
  CHECK(choquet(x, mu) == expansion);
  CHECK(close(choquet(x, mu), 0.40, 1e-15));

  // additive measure: the integral is the weighted arithmetic mean
  auto w = WeightVector::sum_one({0.5, 0.3, 0.2});
  auto add = FuzzyMeasure::additive(w);
  std::vector<double> x123 = {1.0, 2.0, 3.0};
  CHECK(close(choquet(x123, add), 1.7, 1e-12));

  Rng rng(83);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> y = rng.vector(3, -5.0, 5.0);
    CHECK(std::fabs(choquet(y, add) - wam(y, w)) <= 1e-12);
  }

  // idempotency: constant vectors come back unchanged
  for (int rep = 0; rep < 100; ++rep) {
    double c = rng.uniform(-3.0, 3.0);
    std::vector<double> diag = {c, c, c};
    CHECK(std::fabs(choquet(diag, mu) - c) <= 1e-12);
  }

  std::vector<double> wrong = {1.0, 2.0};
  CHECK_THROWS_AS(choquet(wrong, mu), AggError);

  std::vector<double> poisoned = {0.1, std::nan(""), 0.3};
  CHECK_THROWS_AS(choquet(poisoned, mu), AggError);
  CHECK_THROWS_AS(owa(poisoned, WeightVector::uniform(3)), AggError);
  CHECK_THROWS_AS(order_statistic(poisoned, 2), AggError);
}

TEST_CASE("Choquet is independent of tie-breaking among equal components") {
  Rng rng(89);
  for (int rep = 0; rep < 100; ++rep) {
    auto mu = random_measure(rng, 4);
    // craft ties
    double a = rng.unit(), b = rng.unit();
    std::vector<double> x = {a, b, a, b};
    // evaluate against every permutation consistent with the ties
    std::vector<int> idx = {0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return x[i] < x[j]; });
    double reference = choquet(x, mu);
    std::sort(idx.begin(), idx.end());
    do {
      bool sorted = true;
      for (int i = 0; i + 1 < 4; ++i)
        if (x[idx[i]] > x[idx[i + 1]]) sorted = false;
      if (!sorted) continue;
      std::uint32_t upper = 0b1111;
      double total = 0.0;
      for (int i = 0; i < 4; ++i) {
        std::uint32_t next = upper & ~(1u << idx[i]);
        total += x[idx[i]] * (mu[upper] - mu[next]);
        upper = next;
      }
      CHECK(std::fabs(total - reference) <= 1e-12);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST_CASE("Sugeno integral and its two oracles") {
  auto mu = worked_measure();
  std::vector<double> x = {0.4, 0.9, 0.1};
  CHECK(sugeno(x, mu) == 0.4);
  CHECK(sugeno_disjunctive(x, mu) == 0.4);
  CHECK(sugeno_weighted_median(x, mu) == 0.4);

  // characteristic vectors recover the measure exactly
  for (std::uint32_t mask = 0; mask <= mu.full_mask(); ++mask) {
    std::vector<double> ind(3, 0.0);
    for (int i = 0; i < 3; ++i)
      if (mask & (1u << i)) ind[i] = 1.0;
    CHECK(sugeno(ind, mu) == mu[mask]);
  }

  // idempotency
  Rng rng(97);
  for (int rep = 0; rep < 100; ++rep) {
    double c = rng.unit();
    std::vector<double> diag = {c, c, c};
    CHECK(sugeno(diag, mu) == c);
  }

  std::vector<double> outside = {0.4, 1.2, 0.1};
  CHECK_THROWS_AS(sugeno(outside, mu), AggError);

  // n = 1: the weighted median pools only x1
  auto tiny = FuzzyMeasure::validate({0.0, 1.0});
  std::vector<double> one = {0.37};
  CHECK(sugeno_weighted_median(one, tiny) == 0.37);
  CHECK(sugeno(one, tiny) == 0.37);

  // single winning set: the lattice polynomial min over S
  std::vector<double> v(8, 0.0);
  v[0b101] = 1.0;
  v[0b111] = 1.0;
  auto s_mu = FuzzyMeasure::validate(std::move(v));
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> y = rng.vector(3, 0.0, 1.0);
    CHECK(sugeno(y, s_mu) == std::min(y[0], y[2]));
  }
}

TEST_CASE("Sugeno equals both oracles on grids and random cases") {
  // exhaustive lattice grid {0, 0.5, 1}^3 x random measures
  std::vector<double> levels = {0.0, 0.5, 1.0};
  Rng rng(101);
  for (int m = 0; m < 20; ++m) {
    auto mu = random_measure(rng, 3);
    for (double a : levels)
      for (double b : levels)
        for (double c : levels) {
          std::vector<double> x = {a, b, c};
          double s = sugeno(x, mu);
          CHECK(s == sugeno_disjunctive(x, mu));
          CHECK(s == sugeno_weighted_median(x, mu));
        }
  }
  // random x and measures across sizes
  for (int rep = 0; rep < 1000; ++rep) {
    int n = rng.uniform_int(1, 6);
    auto mu = random_measure(rng, n);
    std::vector<double> x = rng.vector(n, 0.0, 1.0);
    double s = sugeno(x, mu);
    CHECK(s == sugeno_disjunctive(x, mu));
    CHECK(s == sugeno_weighted_median(x, mu));
  }
}

TEST_CASE("wam / owa / order statistics") {
  auto w = WeightVector::sum_one({0.5, 0.3, 0.2});
  std::vector<double> x = {3.0, 1.0, 2.0};
  CHECK(close(owa(x, w), 1.7, 1e-12));
  CHECK(close(wam(x, w), 0.5 * 3 + 0.3 * 1 + 0.2 * 2, 1e-15));

  auto min_w = WeightVector::sum_one({1.0, 0.0, 0.0});
  std::vector<double> y = {5.0, 1.0, 9.0};
  CHECK(owa(y, min_w) == 1.0);
  CHECK(order_statistic(y, 2) == 5.0);
  CHECK(order_statistic(y, 1) == 1.0);
  CHECK(order_statistic(y, 3) == 9.0);
  CHECK_THROWS_AS(order_statistic(y, 0), AggError);
  CHECK_THROWS_AS(order_statistic(y, 4), AggError);
}

TEST_CASE("owa_to_measure and measure_to_owa") {
  auto w = WeightVector::sum_one({0.5, 0.3, 0.2});
  auto mu = owa_to_measure(w);
  CHECK(mu[0b001] == 0.2);
  CHECK(mu[0b010] == 0.2);
  CHECK(mu[0b011] == 0.5);
  CHECK(mu[0b111] == 1.0);
  CHECK(classify_measure(mu).cardinality_based);

  auto back = measure_to_owa(mu);
  CHECK(back[0] == 0.5);
  CHECK(back[1] == 0.3);
  CHECK(back[2] == 0.2);

  auto uniform = owa_to_measure(WeightVector::uniform(4));
  auto round = measure_to_owa(uniform);
  for (int i = 0; i < 4; ++i) CHECK(round[i] == 0.25);

  // owa equals the Choquet integral of its measure
  Rng rng(103);
  for (int rep = 0; rep < 500; ++rep) {
    int n = rng.uniform_int(1, 6);
    auto wr = random_sum_one(rng, n);
    auto m = owa_to_measure(wr);
    std::vector<double> x = rng.vector(n, -2.0, 2.0);
    CHECK(std::fabs(owa(x, wr) - choquet(x, m)) <= 1e-12);
  }

  // non-cardinality measures are rejected with a witness
  try {
    measure_to_owa(worked_measure());
    FAIL("expected not-cardinality-based");
  } catch (const AggError& e) {
    CHECK(e.code() == errc::not_cardinality_based);
    CHECK(e.has_witness());
  }
}

TEST_CASE("weighted and ordered weighted min/max") {
  auto w = WeightVector::max_one({1.0, 0.4, 0.7});
  std::vector<double> x = {0.2, 1.0, 0.5};
  CHECK(pmax(x, w) == 0.5);

  // projection weights
  auto proj = WeightVector::max_one({0.0, 1.0, 0.0});
  Rng rng(107);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> y = rng.vector(3, 0.0, 1.0);
    CHECK(pmax(y, proj) == y[1]);
  }

  // pmax is the Sugeno integral for the possibility measure, and dually
  for (int rep = 0; rep < 1000; ++rep) {
    int n = rng.uniform_int(2, 6);
    auto wm = random_max_one(rng, n);
    auto poss = FuzzyMeasure::possibility(wm);
    std::vector<double> y = rng.vector(n, 0.0, 1.0);
    CHECK(pmax(y, wm) == sugeno(y, poss));

    auto wn = random_min_zero(rng, n);
    auto nec = FuzzyMeasure::necessity(wn);
    CHECK(pmin(y, wn) == sugeno(y, nec));
  }
}

TEST_CASE("opmax / opmin median identities and equivalence") {
  // degenerate weights: only w1 = 1 picks the smallest component
  auto w1 = WeightVector::max_one({1.0, 0.0});
  std::vector<double> x = {0.3, 0.8};
  CHECK(opmax(x, w1) == 0.3);

  Rng rng(109);
  for (int rep = 0; rep < 1000; ++rep) {
    int n = rng.uniform_int(2, 6);
    auto raw = random_max_one(rng, n);
    std::vector<double> y = rng.vector(n, 0.0, 1.0);

    // replacing the weights by their tail maxima leaves opmax unchanged, so
    // the nonincreasing vector is the canonical representative
    std::vector<double> canon(raw.weights().begin(), raw.weights().end());
    for (int i = n - 2; i >= 0; --i) canon[i] = std::max(canon[i], canon[i + 1]);
    auto w = WeightVector::max_one(canon);
    CHECK(opmax(y, raw) == opmax(y, w));

    // median identity: opmax = median(x_1..x_n, w_2..w_n), exact
    std::vector<double> pool(y.begin(), y.end());
    for (int i = 1; i < n; ++i) pool.push_back(w[i]);
    std::nth_element(pool.begin(), pool.begin() + (n - 1), pool.end());
    CHECK(opmax(y, w) == pool[n - 1]);

    // every opmax is an opmin for the derived weights, exactly
    auto w2 = opmax_to_opmin_weights(w);
    CHECK(opmax(y, w) == opmin(y, w2));

    // opmin median identity: median(x_1..x_n, w_1..w_{n-1})
    std::vector<double> pool2(y.begin(), y.end());
    for (int i = 0; i + 1 < n; ++i) pool2.push_back(w2[i]);
    std::nth_element(pool2.begin(), pool2.begin() + (n - 1), pool2.end());
    CHECK(opmin(y, w2) == pool2[n - 1]);

    // both are symmetric Sugeno integrals w.r.t. the cardinality measure
    std::vector<double> tails(n + 1, 0.0);
    for (int s = 1; s <= n; ++s) tails[s] = std::max(tails[s - 1], w[n - s]);
    std::vector<double> mv(size_t{1} << n);
    for (std::uint32_t mask = 0; mask < mv.size(); ++mask)
      mv[mask] = tails[std::popcount(mask)];
    auto mu = FuzzyMeasure::validate(std::move(mv));
    CHECK(opmax(y, w) == sugeno(y, mu));
  }
}

TEST_CASE("lattice polynomials agree with Choquet and Sugeno") {
  auto gamma = BinaryMeasure::from_minimal(3, {0b011, 0b100});
  std::vector<double> x = {0.4, 0.9, 0.1};
  CHECK(lattice_polynomial(x, gamma) == 0.4);  // (0.4 ^ 0.9) v 0.1

  // symmetric k-out-of-n families are order statistics
  Rng rng(113);
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t mask = 1; mask <= 7; ++mask)
      if (std::popcount(mask) == k) minimal.push_back(mask);
    auto g = BinaryMeasure::from_minimal(3, minimal);
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<double> y = rng.vector(3, 0.0, 1.0);
      CHECK(lattice_polynomial(y, g) == order_statistic(y, 3 - k + 1));
    }
  }

  // triple identity over every upward-closed family on three elements
  auto all = BinaryMeasure::enumerate_all(3);
  CHECK(all.size() == 18);
  for (const auto& g : all) {
    auto mu = g.to_measure();
    for (int rep = 0; rep < 25; ++rep) {
      std::vector<double> y = rng.vector(3, 0.0, 1.0);
      double L = lattice_polynomial(y, g);
      CHECK(L == choquet(y, mu));
      CHECK(L == sugeno(y, mu));
    }
  }
}

TEST_CASE("geometric weights") {
  auto third = geometric_weights(3, 0.5);
  for (int i = 0; i < 3; ++i) CHECK(close(third[i], 1.0 / 3.0, 1e-15));

  auto first = geometric_weights(3, 0.0);
  CHECK(first[0] == 1.0);
  CHECK(first[1] == 0.0);
  CHECK(first[2] == 0.0);

  auto last = geometric_weights(3, 1.0);
  CHECK(last[2] == 1.0);

  auto pair = geometric_weights(2, 0.25);
  CHECK(close(pair[0], 0.75, 1e-15));
  CHECK(close(pair[1], 0.25, 1e-15));

  CHECK_THROWS_AS(geometric_weights(3, 1.5), AggError);
}
