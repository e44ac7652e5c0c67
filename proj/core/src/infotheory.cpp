#include "qlimits/infotheory.hpp"

#include "adaptive_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qlimits {

namespace {

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite and >= 0");
  }
}

// (x + d) ln(x + d) - x ln x, without cancellation for d << x.
double xlogx_increment(double x, double d) {
  if (d == 0.0) return 0.0;
  if (x == 0.0) return d * std::log(d);
  return d * std::log(x + d) + x * std::log1p(d / x);
}

}  // namespace

double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("binary_entropy: p outside [0, 1]");
  }
  const double q[2] = {p, 1.0 - p};
  return shannon_entropy(q);
}

double thermal_entropy(double v) {
  require_nonnegative(v, "thermal_entropy: v");
  if (v == 0.0) return 0.0;
  // log2(v+1) + v log2(1 + 1/v) is stable for both tiny and huge v.
  return std::log1p(v) * kLog2E + v * std::log1p(1.0 / v) * kLog2E;
}

double shannon_capacity_one_quadrature(double ns, double nn) {
  require_nonnegative(ns, "n_s");
  require_nonnegative(nn, "n_n");
  return 0.5 * std::log1p(4.0 * ns / (2.0 * nn + 1.0)) * kLog2E;
}

double shannon_capacity_two_quadrature(double ns, double nn) {
  require_nonnegative(ns, "n_s");
  require_nonnegative(nn, "n_n");
  return std::log1p(ns / (nn + 1.0)) * kLog2E;
}

double holevo_capacity(double ns, double nn) {
  require_nonnegative(ns, "n_s");
  require_nonnegative(nn, "n_n");
  if (nn == 0.0) return thermal_entropy(ns);
  // g(nn + ns) - g(nn) regrouped as two x ln x increments.
  return (xlogx_increment(nn + 1.0, ns) - xlogx_increment(nn, ns)) * kLog2E;
}

double fock_capacity(double nbar) { return thermal_entropy(nbar); }

double holevo_advantage(double ns) {
  if (!(ns > 0.0)) {
    throw std::invalid_argument("holevo_advantage: n_s must be > 0");
  }
  // g(ns) - log2(1+ns) = ns log2(1 + 1/ns)
  return ns * std::log1p(1.0 / ns) * kLog2E;
}

double photon_efficiency(double bits_per_slot, double ns) {
  if (!(ns > 0.0)) {
    throw std::invalid_argument(
        "photon_efficiency: n_s must be > 0 (use the limit functions)");
  }
  return bits_per_slot / ns;
}

ShannonPieLimits shannon_pie_limits(double nn) {
  require_nonnegative(nn, "n_n");
  return {2.0 * kLog2E / (1.0 + 2.0 * nn), kLog2E / (1.0 + nn)};
}

double holevo_noisy_pie_limit(double nn) {
  if (!(nn > 0.0)) {
    throw std::invalid_argument(
        "holevo_noisy_pie_limit: diverges for n_n = 0");
  }
  return std::log1p(1.0 / nn) * kLog2E;
}

double information_rate(double bits_per_slot, double slot_rate) {
  if (!(slot_rate > 0.0)) {
    throw std::invalid_argument("information_rate: slot rate must be > 0");
  }
  return slot_rate * bits_per_slot;
}

double holevo_power_limited_rate(const LinkBudget& budget, double tau) {
  budget.validate();
  if (!(budget.noise_psd > 0.0)) {
    throw std::invalid_argument(
        "holevo_power_limited_rate: requires noise PSD > 0");
  }
  const double quantum = budget.photon_energy();
  return tau * budget.power / quantum *
         std::log1p(quantum / budget.noise_psd) * kLog2E;
}

// ---------------------------------------------------------------------------
// MiProblem

namespace {

constexpr double kInputTol = 1e-12;
constexpr double kLawTol = 1e-9;

void check_distribution(std::span<const double> p, double tol,
                        const std::string& what) {
  if (p.empty()) throw std::invalid_argument(what + ": empty distribution");
  double total = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(what + ": negative or non-finite entry");
    }
    total += v;
  }
  if (std::fabs(total - 1.0) > tol) {
    throw std::invalid_argument(what + ": not normalized (sum = " +
                                std::to_string(total) + ")");
  }
}

void check_mixture(const GaussianMixture& m, const std::string& what) {
  if (m.means.size() != m.weights.size()) {
    throw std::invalid_argument(what + ": means/weights size mismatch");
  }
  for (double mu : m.means) {
    if (!std::isfinite(mu)) throw std::invalid_argument(what + ": bad mean");
  }
  check_distribution(m.weights, kLawTol, what);
}

}  // namespace

MiProblem MiProblem::discrete(
    std::vector<double> input_probs,
    std::vector<std::vector<double>> conditional_pmfs) {
  check_distribution(input_probs, kInputTol, "MiProblem input_probs");
  if (conditional_pmfs.size() != input_probs.size()) {
    throw std::invalid_argument("MiProblem: one conditional law per input");
  }
  const std::size_t alphabet = conditional_pmfs.front().size();
  for (const auto& row : conditional_pmfs) {
    if (row.size() != alphabet) {
      throw std::invalid_argument("MiProblem: ragged outcome alphabet");
    }
    check_distribution(row, kLawTol, "MiProblem conditional pmf");
  }
  MiProblem p;
  p.input_probs_ = std::move(input_probs);
  p.event_probs_ = std::move(conditional_pmfs);
  return p;
}

MiProblem MiProblem::gaussian(std::vector<double> input_probs,
                              std::vector<GaussianMixture> conditionals,
                              double variance) {
  std::vector<std::vector<double>> events(input_probs.size(),
                                          std::vector<double>{1.0});
  return hybrid(std::move(input_probs), std::move(events), 0,
                std::move(conditionals), variance);
}

MiProblem MiProblem::hybrid(std::vector<double> input_probs,
                            std::vector<std::vector<double>> event_probs,
                            std::size_t refined_event,
                            std::vector<GaussianMixture> refinements,
                            double variance) {
  MiProblem p = discrete(std::move(input_probs), std::move(event_probs));
  if (refined_event >= p.event_probs_.front().size()) {
    throw std::invalid_argument("MiProblem: refined event out of range");
  }
  if (refinements.size() != p.input_probs_.size()) {
    throw std::invalid_argument("MiProblem: one refinement per input");
  }
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    throw std::invalid_argument("MiProblem: variance must be > 0");
  }
  for (const auto& m : refinements) check_mixture(m, "MiProblem refinement");
  p.refined_event_ = refined_event;
  p.refinements_ = std::move(refinements);
  p.variance_ = variance;
  return p;
}

// ---------------------------------------------------------------------------
// mutual_information

namespace {

double log_sum_exp(std::span<const double> v) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : v) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double s = 0.0;
  for (double x : v) s += std::exp(x - hi);
  return hi + std::log(s);
}

// Continuous contribution of the refined event, in bits.
double refined_information(const MiProblem& problem, std::size_t event,
                           const MiOptions& options) {
  struct Branch {
    double log_scale;  // ln(p_x P(event|x))
    double log_prior;  // ln p_x
    std::vector<double> log_weights;
    std::vector<double> means;
  };
  const auto inputs = problem.input_probs();
  const auto& events = problem.event_probs();
  const auto& refinements = problem.refinements();

  std::vector<Branch> branches;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::vector<double> breaks;
  for (std::size_t x = 0; x < inputs.size(); ++x) {
    const double scale = inputs[x] * events[x][event];
    if (!(scale > 0.0)) continue;
    Branch b;
    b.log_scale = std::log(scale);
    b.log_prior = std::log(inputs[x]);
    const auto& mix = refinements[x];
    for (std::size_t j = 0; j < mix.means.size(); ++j) {
      if (!(mix.weights[j] > 0.0)) continue;
      b.log_weights.push_back(std::log(mix.weights[j]));
      b.means.push_back(mix.means[j]);
      lo = std::min(lo, mix.means[j]);
      hi = std::max(hi, mix.means[j]);
      breaks.push_back(mix.means[j]);
    }
    branches.push_back(std::move(b));
  }
  if (branches.empty()) return 0.0;
  if (branches.size() == 1) {
    // y cannot discriminate; only the event itself carries information.
    return std::exp(branches[0].log_scale) * -branches[0].log_prior * kLog2E;
  }

  const double variance = problem.variance();
  const double sigma = std::sqrt(variance);
  const double inv_two_var = 0.5 / variance;
  const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi * variance);

  std::vector<double> log_w(branches.size());
  std::vector<double> scratch;
  auto integrand = [&](double y) {
    for (std::size_t i = 0; i < branches.size(); ++i) {
      const auto& b = branches[i];
      scratch.resize(b.means.size());
      for (std::size_t j = 0; j < b.means.size(); ++j) {
        const double d = y - b.means[j];
        scratch[j] = b.log_weights[j] - d * d * inv_two_var;
      }
      log_w[i] = b.log_scale + log_norm + log_sum_exp(scratch);
    }
    const double log_total = log_sum_exp(log_w);
    // sum_x p_x P(r|x) f_x log[P(r|x) f_x / p(r, y)]
    double s = 0.0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      const double lw = log_w[i];
      if (std::isfinite(lw)) {
        s += std::exp(lw) * (lw - branches[i].log_prior - log_total);
      }
    }
    return s * kLog2E;
  };

  const double a = lo - options.range_sigmas * sigma;
  const double b = hi + options.range_sigmas * sigma;
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  // Target well below the caller's budget; the budget is what is enforced.
  const auto result = detail::integrate_adaptive(
      integrand, breaks, std::min(1e-12, 1e-3 * options.abs_tolerance));
  const double total = result.value;
  const double total_error = result.error;
  if (total_error > options.abs_tolerance) {
    throw std::runtime_error("mutual_information: quadrature error " +
                             std::to_string(total_error) +
                             " exceeds tolerance");
  }
  return total;
}

}  // namespace

double mutual_information(const MiProblem& problem, const MiOptions& options) {
  const auto inputs = problem.input_probs();
  const auto& events = problem.event_probs();
  const std::size_t n_events = events.front().size();
  const auto refined = problem.refined_event();

  double info = 0.0;
  for (std::size_t e = 0; e < n_events; ++e) {
    if (refined && *refined == e) continue;
    double marginal = 0.0;
    for (std::size_t x = 0; x < inputs.size(); ++x) {
      marginal += inputs[x] * events[x][e];
    }
    if (!(marginal > 0.0)) continue;
    for (std::size_t x = 0; x < inputs.size(); ++x) {
      const double joint = inputs[x] * events[x][e];
      if (joint > 0.0) info += joint * std::log2(events[x][e] / marginal);
    }
  }
  if (refined) info += refined_information(problem, *refined, options);

  // Roundoff can leave a result a few ulps below zero.
  return std::max(info, 0.0);
}

double binary_gaussian_mutual_information(double amplitude, double variance) {
  auto p = MiProblem::gaussian({0.5, 0.5},
                               {GaussianMixture{{amplitude}, {1.0}},
                                GaussianMixture{{-amplitude}, {1.0}}},
                               variance);
  return mutual_information(p);
}

}  // namespace qlimits
