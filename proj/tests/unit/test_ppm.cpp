#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/lambert_w.hpp>

#include "doctest.h"
#include "oracles.hpp"
#include "qlimits/infotheory.hpp"
#include "qlimits/ppm.hpp"

using namespace qlimits;
using doctest::Approx;

TEST_CASE("PPM parameters") {
  CHECK(PpmParams(8, 0.05).pulse_energy() == Approx(0.4).epsilon(1e-15));
  CHECK_THROWS_AS(PpmParams(1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(PpmParams(4, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(PpmParams(4, NAN), std::invalid_argument);
}

TEST_CASE("click probability and information") {
  CHECK(ppm_click_probability(PpmParams(16, 0.0)) == 0.0);
  CHECK(ppm_click_probability(PpmParams(16, 10.0)) == Approx(1.0).epsilon(1e-15));
  CHECK(ppm_click_probability(PpmParams(2, 0.1)) == Approx(0.181269246922).epsilon(1e-11));
  CHECK(ppm_mutual_information(PpmParams(2, 0.1)) == Approx(0.090634623461).epsilon(1e-11));
  CHECK(ppm_mutual_information(PpmParams(64, 0.0)) == 0.0);

  SUBCASE("equals the erasure-channel mutual information") {
    for (int m : {2, 3, 4, 8, 13}) {
      for (double ns : {1e-4, 0.02, 0.5}) {
        const double click = 1.0 - std::exp(-m * ns);
        std::vector<std::vector<double>> rows(m, std::vector<double>(m + 1, 0.0));
        for (int x = 0; x < m; ++x) {
          rows[x][x] = click;
          rows[x][m] = 1.0 - click;
        }
        const std::vector<double> prior(m, 1.0 / m);
        // The channel is used once per frame of m slots.
        const double per_slot = mutual_information(MiProblem::discrete(prior, rows)) / m;
        CHECK(std::abs(ppm_mutual_information(PpmParams(m, ns)) - per_slot) < 1e-12);
      }
    }
  }

  SUBCASE("erasure bound and the low-power limit") {
    for (int m : {2, 4, 32, 1024}) {
      for (double ns = 1e-7; ns < 10; ns *= 3) {
        const PpmParams p(m, ns);
        CHECK(ppm_mutual_information(p) <= std::log2(m) / m);
        CHECK(ppm_photon_efficiency(p) < std::log2(m));
      }
    }
  }
}

TEST_CASE("PPM photon efficiency") {
  CHECK(std::abs(ppm_photon_efficiency(PpmParams(2, 1e-6)) - 1.0) < 1e-5);
  CHECK(std::abs(ppm_photon_efficiency(PpmParams(1024, 1e-9)) - 10.0) < 1e-4);
  CHECK(ppm_photon_efficiency(PpmParams(8, 0.05)) == Approx((1 - std::exp(-0.4)) * 3 / 0.4).epsilon(1e-14));
  CHECK(ppm_photon_efficiency(PpmParams(8, 0.05)) == Approx(2.472603).epsilon(1e-6));
  CHECK_THROWS_AS(ppm_photon_efficiency(PpmParams(8, 0.0)), std::invalid_argument);
}

TEST_CASE("Lambert W") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::numbers::e) == Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(lambert_w0(1.0) - 0.5671433) < 1e-6);
  CHECK(lambert_w0(1.0) == Approx(0.567143290409784).epsilon(1e-14));
  CHECK_THROWS_AS(lambert_w0(-0.1), std::domain_error);

  SUBCASE("defining equation and two independent oracles") {
    for (double x = 1e-6; x <= 1e6; x *= 1.7) {
      const double w = lambert_w0(x);
      CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, x));
      CHECK(w == Approx(oracle::lambert_w_bisect(x)).epsilon(1e-12));
      CHECK(w == Approx(boost::math::lambert_w0(x)).epsilon(1e-14));
    }
    for (double x : {1e-300, 1e-20, 1e20, 1e300}) {
      CHECK(lambert_w0(x) == Approx(boost::math::lambert_w0(x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("optimal order, closed form") {
  const double w = lambert_w0(2 * std::numbers::e / 1e-3);
  CHECK(w == Approx(6.69895).epsilon(1e-6));
  const auto approx = optimal_ppm_order_approx(1e-3);
  CHECK(approx.order == Approx(298.554).epsilon(1e-5));
  CHECK_FALSE(approx.outside_validity);
  CHECK(optimal_ppm_order_approx(1.5).outside_validity);
  CHECK(optimal_ppm_efficiency_approx(1e-3) == Approx(6.99452).epsilon(1e-5));
  CHECK_THROWS_AS(optimal_ppm_order_approx(0.0), std::invalid_argument);

  for (double ns = 1e-6; ns < 1e-1; ns *= 2) {
    CHECK(optimal_ppm_order_approx(ns / 10).order > optimal_ppm_order_approx(ns).order);
  }
}

TEST_CASE("optimal order, integer search") {
  SUBCASE("agrees with an exhaustive scan") {
    for (double ns : {0.3, 0.05, 1e-2, 1e-3, 2e-4}) {
      CAPTURE(ns);
      const auto best = optimal_ppm_order_exact(ns);
      const auto brute = oracle::brute_ppm_optimum(ns, 200000);
      CHECK(best.order == brute.order);
      CHECK(best.efficiency == Approx(brute.efficiency).epsilon(1e-14));
      const auto pow2 = optimal_ppm_order_exact(ns, 1 << 24, true);
      const auto brute2 = oracle::brute_ppm_optimum(ns, 1 << 24, true);
      CHECK(pow2.order == brute2.order);
    }
  }

  SUBCASE("frozen optima") {
    CHECK(optimal_ppm_order_exact(1e-2).order == 55);
    CHECK(optimal_ppm_order_exact(1e-3).order == 361);
    CHECK(optimal_ppm_order_exact(1e-4).order == 2654);
    CHECK(optimal_ppm_order_exact(1e-5).order == 20835);
    CHECK(optimal_ppm_order_exact(1e-3).efficiency == Approx(7.1314).epsilon(1e-4));
  }

  SUBCASE("local optimality, bounds and the closed form") {
    for (double ns = 1e-6; ns <= 1e-2; ns *= 3.1) {
      const auto best = optimal_ppm_order_exact(ns);
      const auto pie = [ns](std::int64_t m) { return ppm_photon_efficiency(PpmParams(m, ns)); };
      CHECK(best.efficiency >= pie(best.order + 1));
      if (best.order > 2) CHECK(best.efficiency > pie(best.order - 1));
      CHECK(best.efficiency >= optimal_ppm_efficiency_approx(ns));
      CHECK(best.efficiency < photon_efficiency(holevo_capacity(ns, 0.0), ns));
      const double ratio = best.order / optimal_ppm_order_approx(ns).order;
      CHECK(ratio > 0.5);
      CHECK(ratio < 2.0);
    }
  }

  SUBCASE("capped search") {
    const auto capped = optimal_ppm_order_exact(1e-5, 1000);
    CHECK(capped.order == 1000);
    CHECK(optimal_ppm_order_exact(0.3, 2).order == 2);
    CHECK_THROWS_AS(optimal_ppm_order_exact(0.0), std::invalid_argument);
    CHECK_THROWS_AS(optimal_ppm_order_exact(0.1, 1), std::invalid_argument);
  }
}

TEST_CASE("closed-form efficiency sits below Holevo with a growing gap") {
  double prev_gap = 0.0;
  for (double ns : {1e-2, 1e-4, 1e-6}) {
    const double holevo = photon_efficiency(holevo_capacity(ns, 0.0), ns);
    const double gap = holevo - optimal_ppm_efficiency_approx(ns);
    CHECK(gap > prev_gap);
    prev_gap = gap;
  }
}
