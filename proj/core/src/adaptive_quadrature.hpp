#pragma once

// Globally adaptive 7/15-point Gauss-Kronrod integration with an absolute
// error target. Nodes and weights come from Boost.Math; the driver always
// bisects the interval with the largest error estimate, so subintervals whose
// integrand is pure roundoff are never refined.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <vector>

namespace qlimits::detail {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gauss_kronrod_15(F& f, double a, double b) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f0 = f(mid);
  double kronrod = f0 * wk[0];
  double gauss = f0 * wg[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double s = f(mid + half * x[i]) + f(mid - half * x[i]);
    kronrod += s * wk[i];
    if (i % 2 == 0) gauss += s * wg[i / 2];
  }
  return {a, b, half * kronrod, half * std::fabs(kronrod - gauss)};
}

template <class F>
QuadratureResult integrate_adaptive(F&& f, const std::vector<double>& breaks,
                                    double abs_tol, int max_segments = 4000) {
  std::priority_queue<Segment> heap;
  QuadratureResult r;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Segment s = gauss_kronrod_15(f, breaks[i], breaks[i + 1]);
    r.value += s.value;
    r.error += s.error;
    heap.push(s);
  }
  int segments = static_cast<int>(heap.size());
  while (r.error > abs_tol && segments < max_segments) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod_15(f, worst.a, mid);
    const Segment right = gauss_kronrod_15(f, mid, worst.b);
    r.value += left.value + right.value - worst.value;
    r.error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++segments;
  }
  // Recompute sums to shed the drift of the incremental updates.
  r.value = 0.0;
  r.error = 0.0;
  while (!heap.empty()) {
    r.value += heap.top().value;
    r.error += heap.top().error;
    heap.pop();
  }
  return r;
}

}  // namespace qlimits::detail
