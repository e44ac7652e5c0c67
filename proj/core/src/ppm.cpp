#include "qlimits/ppm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlimits/infotheory.hpp"

namespace qlimits {

PpmParams::PpmParams(std::int64_t order, double ns) : order_(order), ns_(ns) {
  if (order < 2) {
    throw std::invalid_argument("PpmParams: order must be >= 2, got " +
                                std::to_string(order));
  }
  if (!(ns >= 0.0) || !std::isfinite(ns)) {
    throw std::invalid_argument("PpmParams: n_s must be finite and >= 0");
  }
}

double ppm_click_probability(const PpmParams& p) {
  return -std::expm1(-p.pulse_energy());
}

double ppm_mutual_information(const PpmParams& p) {
  const double m = static_cast<double>(p.order());
  return ppm_click_probability(p) * std::log2(m) / m;
}

double ppm_photon_efficiency(const PpmParams& p) {
  if (!(p.ns() > 0.0)) {
    throw std::invalid_argument("ppm_photon_efficiency: n_s must be > 0");
  }
  return ppm_click_probability(p) * std::log2(static_cast<double>(p.order())) /
         p.pulse_energy();
}

double lambert_w0(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("lambert_w0: argument must be >= 0");
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w;
  if (x < std::numbers::e) {
    w = std::log1p(x);
  } else {
    const double l1 = std::log(x);
    w = l1 - std::log(l1);
  }
  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() *
                               (1.0 + std::fabs(w))) {
      break;
    }
  }
  return w;
}

PpmOrderApprox optimal_ppm_order_approx(double ns) {
  if (!(ns > 0.0)) {
    throw std::invalid_argument("optimal_ppm_order_approx: n_s must be > 0");
  }
  const double w = lambert_w0(2.0 * std::numbers::e / ns);
  return {2.0 / (ns * w), ns >= 1.0};
}

double optimal_ppm_efficiency_approx(double ns) {
  if (!(ns > 0.0)) {
    throw std::invalid_argument(
        "optimal_ppm_efficiency_approx: n_s must be > 0");
  }
  const double w = lambert_w0(2.0 * std::numbers::e / ns);
  return (w - 2.0 + 1.0 / w) * kLog2E;
}

namespace {

double efficiency_at(std::int64_t m, double ns) {
  return ppm_photon_efficiency(PpmParams(m, ns));
}

// Strict improvement only, so the first (smallest) order wins ties.
void consider(std::int64_t m, double ns, PpmOptimum& best) {
  const double e = efficiency_at(m, ns);
  if (e > best.efficiency) best = {m, e};
}

}  // namespace

PpmOptimum optimal_ppm_order_exact(double ns, std::int64_t m_max,
                                   bool powers_of_two_only) {
  if (!(ns > 0.0)) {
    throw std::invalid_argument("optimal_ppm_order_exact: n_s must be > 0");
  }
  if (m_max < 2) {
    throw std::invalid_argument("optimal_ppm_order_exact: m_max must be >= 2");
  }
  PpmOptimum best{2, efficiency_at(2, ns)};
  if (powers_of_two_only) {
    for (std::int64_t m = 4; m <= m_max && m > 0; m *= 2) consider(m, ns, best);
    return best;
  }

  constexpr int kPerOctave = 16;
  std::vector<std::int64_t> grid{2};
  for (int i = 1;; ++i) {
    const auto m = static_cast<std::int64_t>(
        std::llround(2.0 * std::exp2(static_cast<double>(i) / kPerOctave)));
    if (m > m_max) break;
    if (m > grid.back()) grid.push_back(m);
  }
  if (grid.back() != m_max) grid.push_back(m_max);

  std::size_t arg = 0;
  double top = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double e = efficiency_at(grid[i], ns);
    if (e > top) {
      top = e;
      arg = i;
    }
  }
  const std::int64_t lo = grid[arg == 0 ? 0 : arg - 1];
  const std::int64_t hi = grid[std::min(arg + 1, grid.size() - 1)];
  best = {lo, efficiency_at(lo, ns)};
  for (std::int64_t m = lo + 1; m <= hi; ++m) consider(m, ns, best);
  return best;
}

}  // namespace qlimits
