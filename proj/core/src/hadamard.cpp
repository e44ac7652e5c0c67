#include "qlimits/hadamard.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qlimits/detection.hpp"
#include "qlimits/infotheory.hpp"
#include "qlimits/ppm.hpp"

namespace qlimits {

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

HadamardWord::HadamardWord(int order, int index, std::vector<int> signs)
    : order_(order), index_(index), signs_(std::move(signs)) {
  if (static_cast<int>(signs_.size()) != order_) {
    throw std::invalid_argument("HadamardWord: length must equal order");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("HadamardWord: entries must be +-1");
    }
  }
}

std::vector<Amplitude> HadamardWord::amplitudes(double ns) const {
  const double a = std::sqrt(ns);
  std::vector<Amplitude> out;
  out.reserve(signs_.size());
  for (int s : signs_) out.emplace_back(a * s, 0.0);
  return out;
}

HadamardWord hadamard_word(int index, int order) {
  if (order < 2 || !is_power_of_two(order)) {
    throw std::invalid_argument("hadamard_word: order " +
                                std::to_string(order) +
                                " is not a power of two >= 2");
  }
  if (index < 1 || index > order + 1) {
    throw std::invalid_argument("hadamard_word: index " +
                                std::to_string(index) + " out of range");
  }
  std::vector<int> signs(order, -1);
  if (index <= order) {
    const auto bits = static_cast<unsigned>(index - 1);
    for (int k = 0; k < order; ++k) {
      signs[k] = (std::popcount(bits & static_cast<unsigned>(k)) & 1) ? -1 : 1;
    }
  }
  return HadamardWord(order, index, std::move(signs));
}

std::vector<Amplitude> cascade_transform(std::span<const Amplitude> amplitudes) {
  const auto n = static_cast<std::int64_t>(amplitudes.size());
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("cascade_transform: length " +
                                std::to_string(n) +
                                " is not a power of two");
  }
  std::vector<Amplitude> v(amplitudes.begin(), amplitudes.end());
  constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;
  for (std::int64_t span = n / 2; span >= 1; span /= 2) {
    for (std::int64_t block = 0; block < n; block += 2 * span) {
      for (std::int64_t j = block; j < block + span; ++j) {
        const Amplitude a = v[j];
        const Amplitude b = v[j + span];
        v[j] = kHalfSqrt2 * (a + b);
        v[j + span] = kHalfSqrt2 * (a - b);
      }
    }
  }
  return v;
}

double hadamard_ppm_mutual_information(int order, double ns) {
  if (order < 2 || !is_power_of_two(order)) {
    throw std::invalid_argument(
        "hadamard_ppm_mutual_information: order must be a power of two");
  }
  return ppm_mutual_information(PpmParams(order, ns));
}

double hadamard_ppm_mutual_information_composed(int order, double ns) {
  if (order < 2 || order > 16 || !is_power_of_two(order)) {
    throw std::invalid_argument(
        "hadamard_ppm_mutual_information_composed: order must be 2..16, "
        "a power of two");
  }
  const std::size_t patterns = std::size_t{1} << order;
  std::vector<std::vector<double>> rows;
  for (int l = 1; l <= order; ++l) {
    const auto out = cascade_transform(hadamard_word(l, order).amplitudes(ns));
    std::vector<double> no_click(order);
    for (int k = 0; k < order; ++k) {
      no_click[k] = direct_detection_pmf(out[k], 0);
    }
    std::vector<double> row(patterns);
    for (std::size_t pattern = 0; pattern < patterns; ++pattern) {
      double p = 1.0;
      for (int k = 0; k < order; ++k) {
        p *= ((pattern >> k) & 1U) ? 1.0 - no_click[k] : no_click[k];
      }
      row[pattern] = p;
    }
    rows.push_back(std::move(row));
  }
  std::vector<double> priors(order, 1.0 / order);
  return mutual_information(MiProblem::discrete(priors, std::move(rows))) /
         order;
}

ExtendedSchemeParams::ExtendedSchemeParams(int order, double ns, double p1)
    : order_(order), ns_(ns), p1_(p1) {
  if (order < 2 || !is_power_of_two(order)) {
    throw std::invalid_argument(
        "ExtendedSchemeParams: order must be a power of two >= 2");
  }
  if (!(ns >= 0.0) || !std::isfinite(ns)) {
    throw std::invalid_argument("ExtendedSchemeParams: n_s must be >= 0");
  }
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw std::invalid_argument("ExtendedSchemeParams: p1 outside [0, 1]");
  }
}

std::vector<double> ExtendedSchemeParams::word_probabilities() const {
  std::vector<double> p(order_ + 1, (1.0 - p1_) / (order_ - 1));
  p.front() = 0.5 * p1_;
  p.back() = 0.5 * p1_;
  return p;
}

double extended_scheme_mutual_information(const ExtendedSchemeParams& params) {
  const int order = params.order();
  // Amplitudes below this energy are cascade roundoff, i.e. vacuum.
  const double vacuum = 1e-20 * std::max(1.0, order * params.ns());

  std::vector<std::vector<double>> events;  // 0: no click, k: click in slot k
  std::vector<GaussianMixture> quadrature;  // slot-0 homodyne on no click
  for (int l = 1; l <= order + 1; ++l) {
    const auto out =
        cascade_transform(hadamard_word(l, order).amplitudes(params.ns()));
    std::vector<double> row(order, 0.0);
    int lit = 0;
    for (int k = 1; k < order; ++k) {
      if (std::norm(out[k]) <= vacuum) continue;
      ++lit;
      row[k] = 1.0 - direct_detection_pmf(out[k], 0);
      row[0] = direct_detection_pmf(out[k], 0);
    }
    if (lit == 0) row[0] = 1.0;
    if (lit > 1 || (lit == 1 && std::norm(out[0]) > vacuum)) {
      throw std::logic_error(
          "extended_scheme_mutual_information: word lights several slots");
    }
    events.push_back(std::move(row));
    quadrature.push_back({{homodyne_mean(out[0], 0.0)}, {1.0}});
  }
  const auto problem =
      MiProblem::hybrid(params.word_probabilities(), std::move(events), 0,
                        std::move(quadrature), kQuadratureVariance);
  return mutual_information(problem) / order;
}

SuperadditiveOptimum optimize_p1(int order, double ns) {
  if (!(ns > 0.0)) {
    throw std::invalid_argument("optimize_p1: n_s must be > 0");
  }
  auto objective = [&](double p1) {
    return extended_scheme_mutual_information(
        ExtendedSchemeParams(order, ns, p1));
  };
  constexpr double kInvPhi = 0.61803398874989484820;  // 1/golden ratio
  constexpr double kTol = 1e-6;
  double a = 0.0;
  double b = 1.0;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > kTol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
  }
  double best_p1 = 0.5 * (a + b);
  double best = objective(best_p1);
  for (double edge : {0.0, 1.0}) {
    const double f = objective(edge);
    if (f > best) {
      best = f;
      best_p1 = edge;
    }
  }
  return {best_p1, best, best / ns};
}

}  // namespace qlimits
