#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qlimits/random.hpp"
#include "stats.hpp"

using qlimits::RandomStream;

TEST_CASE("a seed reproduces the same draws") {
  RandomStream a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double ua = a.uniform();
    CHECK(ua == b.uniform());
    CHECK(a.normal() == b.normal());
    CHECK(a.poisson(7.5) == b.poisson(7.5));
    differs |= ua != c.uniform();
  }
  CHECK(differs);
}

TEST_CASE("uniform deviates lie in [0, 1) and follow the uniform law") {
  RandomStream rng(7);
  std::vector<double> xs(100000);
  for (auto& x : xs) {
    x = rng.uniform();
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
  }
  const double d = stats::ks_distance(xs, [](double x) { return x; });
  CHECK(d < stats::ks_critical(xs.size()));
}

TEST_CASE("normal deviates follow the standard normal law") {
  RandomStream rng(11);
  std::vector<double> xs(200000);
  double sum = 0.0, sum2 = 0.0;
  for (auto& x : xs) {
    x = rng.normal();
    sum += x;
    sum2 += x * x;
  }
  const double n = static_cast<double>(xs.size());
  CHECK(std::abs(sum / n) < 3.0 / std::sqrt(n));
  CHECK(std::abs(sum2 / n - 1.0) < 3.0 * std::sqrt(2.0 / n));
  const double d = stats::ks_distance(
      xs, [](double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); });
  CHECK(d < stats::ks_critical(xs.size()));
}

TEST_CASE("poisson deviates match the pmf on both sampling paths") {
  for (double mean : {0.3, 3.0, 29.5, 30.5, 80.0, 2500.0}) {
    CAPTURE(mean);
    RandomStream rng(static_cast<std::uint64_t>(mean * 1000));
    const long n = 200000;
    std::map<long, long> counts;
    for (long i = 0; i < n; ++i) ++counts[static_cast<long>(rng.poisson(mean))];
    const long kmax = static_cast<long>(mean + 12.0 * std::sqrt(mean) + 20.0);
    const auto pmf = oracle::poisson_pmf(mean, static_cast<int>(kmax));
    // Recursion underflows for huge means, so use log space there.
    const auto law = [&](long k) {
      if (mean < 500.0) return pmf[k];
      return std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
    };
    const auto chi = stats::chi_square(counts, law, kmax, n);
    CHECK(chi.statistic < stats::chi_square_bound(chi.dof));
  }
}

TEST_CASE("poisson edge cases") {
  RandomStream rng(1);
  for (int i = 0; i < 100; ++i) CHECK(rng.poisson(0.0) == 0);
  CHECK_THROWS_AS(rng.poisson(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(rng.poisson(std::nan("")), std::invalid_argument);
}
