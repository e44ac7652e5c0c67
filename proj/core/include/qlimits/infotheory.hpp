#pragma once

// Entropies, the mutual-information engine, and closed-form capacity and
// photon-information-efficiency (PIE) formulas. Everything is in bits; the
// convention 0 log 0 = 0 holds throughout.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlimits/channel.hpp"

namespace qlimits {

/// log2(e), the number of bits in one nat.
inline constexpr double kLog2E = 1.44269504088896340736;

/// -sum p log2 p over a probability vector (no normalization check).
double shannon_entropy(std::span<const double> probs);

/// h2(p) = -p log2 p - (1-p) log2 (1-p).
double binary_entropy(double p);

/// Entropy in bits of a thermal field mode with mean photon number v, also
/// known as the Gordon function: (v+1) log2(v+1) - v log2 v. Requires v >= 0.
double thermal_entropy(double v);

/// One-quadrature Shannon limit 1/2 log2(1 + 4 n_s / (2 n_n + 1)).
/// The +1 in the denominator is the homodyne shot noise.
double shannon_capacity_one_quadrature(double ns, double nn);

/// Two-quadrature Shannon limit log2(1 + n_s / (n_n + 1)).
double shannon_capacity_two_quadrature(double ns, double nn);

/// Holevo capacity of the AWGN channel, g(n_s + n_n) - g(n_n).
double holevo_capacity(double ns, double nn);

/// Capacity of Fock-state encoding over a lossless channel with direct
/// detection. Equals holevo_capacity(nbar, 0).
double fock_capacity(double nbar);

/// g(n_s) - log2(1 + n_s): the loss-only Holevo gain over two-quadrature
/// Shannon. Tends to log2 e - log2 e / (2 n_s) for large n_s.
double holevo_advantage(double ns);

/// bits_per_slot / n_s. Throws std::invalid_argument for n_s <= 0.
double photon_efficiency(double bits_per_slot, double ns);

struct ShannonPieLimits {
  double one_quadrature;  // 2 log2 e / (1 + 2 n_n)
  double two_quadrature;  // log2 e / (1 + n_n)
};

/// n_s -> 0 limits of the Shannon PIE.
ShannonPieLimits shannon_pie_limits(double nn);

/// n_s -> 0 limit of the Holevo PIE at fixed n_n > 0: log2(1 + 1/n_n).
double holevo_noisy_pie_limit(double nn);

/// R = B C in bits per second.
double information_rate(double bits_per_slot, double slot_rate);

/// Power-limited Holevo rate (tau P / h f_c) log2(1 + h f_c / N). Requires a
/// nonzero noise PSD.
double holevo_power_limited_rate(const LinkBudget& budget, double tau);

/// Record of one point on a capacity curve.
struct CapacityPoint {
  double ns;
  double nn;
  double bits_per_slot;
  std::string scheme;
};

/// Univariate Gaussian mixture sharing the variance stored in the problem.
struct GaussianMixture {
  std::vector<double> means;
  std::vector<double> weights;
};

/// Discrete-input memoryless channel description.
///
/// Three output laws are supported:
///  - discrete: a pmf over a shared finite alphabet for every input;
///  - gaussian: a real output whose conditional density is a Gaussian mixture
///    with a common variance;
///  - hybrid: a discrete event whose conditional pmf is given per input, where
///    one designated event additionally carries a real output with a
///    Gaussian-mixture density. The real output is taken to be independent of
///    the input on every other event.
///
/// Input probabilities must sum to one within 1e-12 and every conditional law
/// must be normalized within 1e-9; factories throw std::invalid_argument
/// otherwise.
class MiProblem {
 public:
  static MiProblem discrete(std::vector<double> input_probs,
                            std::vector<std::vector<double>> conditional_pmfs);

  static MiProblem gaussian(std::vector<double> input_probs,
                            std::vector<GaussianMixture> conditionals,
                            double variance);

  static MiProblem hybrid(std::vector<double> input_probs,
                          std::vector<std::vector<double>> event_probs,
                          std::size_t refined_event,
                          std::vector<GaussianMixture> refinements,
                          double variance);

  std::span<const double> input_probs() const { return input_probs_; }
  const std::vector<std::vector<double>>& event_probs() const {
    return event_probs_;
  }
  std::optional<std::size_t> refined_event() const { return refined_event_; }
  const std::vector<GaussianMixture>& refinements() const {
    return refinements_;
  }
  double variance() const { return variance_; }

 private:
  MiProblem() = default;

  std::vector<double> input_probs_;
  std::vector<std::vector<double>> event_probs_;
  std::optional<std::size_t> refined_event_;
  std::vector<GaussianMixture> refinements_;
  double variance_ = 0.0;
};

struct MiOptions {
  /// Absolute error budget in bits for the continuous part.
  double abs_tolerance = 1e-7;
  /// Integration range is [min mean - k sigma, max mean + k sigma].
  double range_sigmas = 10.0;
};

/// I(X;Y) in bits.
///
/// Discrete events are summed exactly. The continuous refinement is integrated
/// with adaptive Gauss-Kronrod quadrature, split at every component mean, in
/// the relative-entropy form sum_x p_x f_x log2(f_x / f). That form equals
/// h(Y) - h(Y|X) but stays accurate when the information is tiny compared to
/// either entropy. Throws std::runtime_error if the quadrature error estimate
/// exceeds the tolerance.
double mutual_information(const MiProblem& problem, const MiOptions& options = {});

/// Binary-input Gaussian channel with inputs {+amplitude, -amplitude}, equal
/// priors, and noise variance `variance`.
double binary_gaussian_mutual_information(double amplitude, double variance);

}  // namespace qlimits
