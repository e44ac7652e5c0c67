#pragma once

// Discrete-slot signal and additive-white-Gaussian-noise channel model.
//
// A pulse in each temporal slot is a complex amplitude alpha with |alpha|^2 the
// mean photon number. Propagation maps alpha -> sqrt(tau) alpha + zeta, where
// zeta is circular complex Gaussian with E|zeta|^2 = n_n excess-noise photons.

#include <complex>
#include <span>
#include <vector>

#include "qlimits/random.hpp"

namespace qlimits {

using Amplitude = std::complex<double>;

/// Planck constant in J s, to the four digits used throughout the model.
inline constexpr double kPlanck = 6.626e-34;

/// Power transmission tau and excess noise n_n (photons per slot).
///
/// Amplification (tau > 1) must add at least tau - 1 noise photons per slot;
/// construction throws std::invalid_argument otherwise.
class ChannelParams {
 public:
  ChannelParams(double tau, double excess_noise);

  static ChannelParams lossless() { return {1.0, 0.0}; }

  double tau() const { return tau_; }
  double excess_noise() const { return excess_noise_; }

 private:
  double tau_;
  double excess_noise_;
};

struct Symbol {
  Amplitude amplitude;
  double probability;
};

/// Weighted set of per-slot amplitudes. Probabilities are nonnegative and sum
/// to one within 1e-12; at least one symbol.
class Constellation {
 public:
  explicit Constellation(std::vector<Symbol> symbols);

  /// Equiprobable {+amplitude, -amplitude}.
  static Constellation bpsk(double amplitude);

  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

 private:
  std::vector<Symbol> symbols_;
};

/// Physical link description. Narrowband operation (slot_rate << carrier) is
/// assumed by the model but not checked.
struct LinkBudget {
  double power;              // W
  double slot_rate;          // Hz
  double carrier_frequency;  // Hz
  double noise_psd;          // W/Hz

  /// Throws std::invalid_argument unless power, slot_rate, carrier_frequency
  /// are > 0 and noise_psd >= 0.
  void validate() const;

  double photon_energy() const { return kPlanck * carrier_frequency; }
};

struct SlotPhotons {
  double signal;  // n_s
  double noise;   // n_n
};

double mean_photon_number(const Constellation& constellation);

/// n_s = tau * nbar.
double received_mean_photons(double nbar, const ChannelParams& params);

/// n_s = tau P / (B h f_c), n_n = N / (h f_c).
SlotPhotons photons_per_slot_from_budget(const LinkBudget& budget, double tau);

/// One channel use: sqrt(tau) alpha plus complex Gaussian noise whose real and
/// imaginary parts are independent with variance n_n / 2. With n_n = 0 no
/// deviates are drawn and the result is exact.
Amplitude propagate_sample(Amplitude alpha, const ChannelParams& params,
                           RandomStream& rng);

/// Trapezoidal estimate of the overlap integral of the unit sinc pulse with
/// its copy shifted by j slots, over [-window, window]. Truncation of the
/// sinc^2 tails contributes about 1/(pi^2 window) of error.
double sinc_orthogonality(int j, double window = 200.0, double step = 0.01);

}  // namespace qlimits
