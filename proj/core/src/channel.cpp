#include "qlimits/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qlimits {

ChannelParams::ChannelParams(double tau, double excess_noise)
    : tau_(tau), excess_noise_(excess_noise) {
  if (!std::isfinite(tau) || tau < 0.0) {
    throw std::invalid_argument("ChannelParams: tau must be finite and >= 0");
  }
  if (!std::isfinite(excess_noise) || excess_noise < 0.0) {
    throw std::invalid_argument("ChannelParams: n_n must be finite and >= 0");
  }
  if (tau > 1.0 && excess_noise < tau - 1.0) {
    throw std::invalid_argument(
        "ChannelParams: amplification requires n_n >= tau - 1 (tau = " +
        std::to_string(tau) + ", n_n = " + std::to_string(excess_noise) + ")");
  }
}

Constellation::Constellation(std::vector<Symbol> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw std::invalid_argument("Constellation: at least one symbol required");
  }
  double total = 0.0;
  for (const auto& s : symbols_) {
    if (!(s.probability >= 0.0) || !std::isfinite(s.probability)) {
      throw std::invalid_argument("Constellation: negative probability");
    }
    if (!std::isfinite(s.amplitude.real()) ||
        !std::isfinite(s.amplitude.imag())) {
      throw std::invalid_argument("Constellation: non-finite amplitude");
    }
    total += s.probability;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("Constellation: probabilities sum to " +
                                std::to_string(total));
  }
}

Constellation Constellation::bpsk(double amplitude) {
  return Constellation({{Amplitude(amplitude, 0.0), 0.5},
                        {Amplitude(-amplitude, 0.0), 0.5}});
}

void LinkBudget::validate() const {
  if (!(power > 0.0) || !(slot_rate > 0.0) || !(carrier_frequency > 0.0)) {
    throw std::invalid_argument(
        "LinkBudget: power, slot rate and carrier frequency must be > 0");
  }
  if (!(noise_psd >= 0.0)) {
    throw std::invalid_argument("LinkBudget: noise PSD must be >= 0");
  }
}

double mean_photon_number(const Constellation& constellation) {
  double n = 0.0;
  for (const auto& s : constellation.symbols()) {
    n += s.probability * std::norm(s.amplitude);
  }
  return n;
}

double received_mean_photons(double nbar, const ChannelParams& params) {
  if (!(nbar >= 0.0)) {
    throw std::invalid_argument("received_mean_photons: nbar must be >= 0");
  }
  return params.tau() * nbar;
}

SlotPhotons photons_per_slot_from_budget(const LinkBudget& budget, double tau) {
  budget.validate();
  if (!(tau >= 0.0)) {
    throw std::invalid_argument("photons_per_slot_from_budget: tau < 0");
  }
  const double quantum = budget.photon_energy();
  return {tau * budget.power / (budget.slot_rate * quantum),
          budget.noise_psd / quantum};
}

Amplitude propagate_sample(Amplitude alpha, const ChannelParams& params,
                           RandomStream& rng) {
  const Amplitude attenuated = std::sqrt(params.tau()) * alpha;
  if (params.excess_noise() == 0.0) return attenuated;
  const double sigma = std::sqrt(params.excess_noise() / 2.0);
  const double re = sigma * rng.normal();
  const double im = sigma * rng.normal();
  return attenuated + Amplitude(re, im);
}

namespace {

double sinc(double s) {
  if (s == 0.0) return 1.0;
  const double x = std::numbers::pi * s;
  return std::sin(x) / x;
}

}  // namespace

double sinc_orthogonality(int j, double window, double step) {
  if (!(window > 0.0) || !(step > 0.0)) {
    throw std::invalid_argument("sinc_orthogonality: window, step must be > 0");
  }
  const auto intervals = static_cast<long>(std::ceil(2.0 * window / step));
  const double h = 2.0 * window / static_cast<double>(intervals);
  auto integrand = [j](double s) { return sinc(s - j) * sinc(s); };
  double sum = 0.5 * (integrand(-window) + integrand(window));
  for (long i = 1; i < intervals; ++i) {
    sum += integrand(-window + h * static_cast<double>(i));
  }
  return sum * h;
}

}  // namespace qlimits
