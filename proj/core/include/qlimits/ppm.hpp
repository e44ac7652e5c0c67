#pragma once

// Pulse position modulation with ideal direct detection, treated as an M-ary
// erasure channel: the frame is decoded from the click position, or erased
// when no photon is counted.

#include <cstdint>

namespace qlimits {

/// Frame length M >= 2 and mean received photons per slot n_s >= 0. The pulse
/// carries the whole frame energy M n_s.
class PpmParams {
 public:
  PpmParams(std::int64_t order, double ns);

  std::int64_t order() const { return order_; }
  double ns() const { return ns_; }
  double pulse_energy() const { return static_cast<double>(order_) * ns_; }

 private:
  std::int64_t order_;
  double ns_;
};

/// Probability of at least one count from the pulse, 1 - exp(-M n_s).
double ppm_click_probability(const PpmParams& p);

/// Bits per slot, p_click log2(M) / M.
double ppm_mutual_information(const PpmParams& p);

/// Bits per photon, p_click log2(M) / (M n_s). Throws for n_s = 0.
double ppm_photon_efficiency(const PpmParams& p);

/// Principal branch of the Lambert W function for x >= 0, by Halley iteration
/// from a logarithmic starting point. Throws std::domain_error for x < 0.
double lambert_w0(double x);

struct PpmOrderApprox {
  double order;
  /// Set when n_s >= 1, outside the small-signal regime the formula assumes.
  bool outside_validity;
};

/// Continuous optimal order (2 / n_s) / W(2e / n_s) from the quadratic
/// expansion of the click probability. Requires n_s > 0.
PpmOrderApprox optimal_ppm_order_approx(double ns);

struct PpmOptimum {
  std::int64_t order;
  double efficiency;  // bits per photon
};

/// Integer M in [2, m_max] maximizing ppm_photon_efficiency at fixed n_s,
/// ties resolved toward the smaller order.
///
/// Powers of two are scanned exhaustively. For arbitrary integers a
/// log-spaced pre-scan brackets the maximum, and every integer between the
/// bracketing grid points is then evaluated; this relies on the efficiency
/// being unimodal in M at fixed n_s, which holds numerically for all n_s
/// tested.
PpmOptimum optimal_ppm_order_exact(double ns,
                                   std::int64_t m_max = std::int64_t{1} << 24,
                                   bool powers_of_two_only = false);

/// (W - 2 + 1/W) log2 e with W = W(2e / n_s); slightly below the true
/// optimum over integer orders.
double optimal_ppm_efficiency_approx(double ns);

}  // namespace qlimits
