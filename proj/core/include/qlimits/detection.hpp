#pragma once

// Shot-noise-limited outcome statistics of the three conventional receivers,
// conditional on the post-channel amplitude. Detection knows nothing about
// tau or n_n; noisy statistics come from composing with propagate_sample.

#include <cstdint>
#include <variant>

#include "qlimits/channel.hpp"
#include "qlimits/random.hpp"

namespace qlimits {

/// Ideal photon counting: unit efficiency, no dark counts.
struct DirectDetection {};

/// Single-quadrature homodyne with local-oscillator phase `phase` (radians).
struct Homodyne {
  double phase = 0.0;
};

/// Phase-diversity receiver: the pulse is split between I and Q homodynes.
struct DualHomodyne {};

using DetectionModel = std::variant<DirectDetection, Homodyne, DualHomodyne>;

struct PhotocountOutcome {
  std::uint64_t k;
};

struct QuadratureOutcome {
  double y;
  double phase;  // in [0, 2 pi)
};

struct DualQuadratureOutcome {
  double y_i;
  double y_q;
};

using DetectionOutcome =
    std::variant<PhotocountOutcome, QuadratureOutcome, DualQuadratureOutcome>;

/// Homodyne outcome variance in shot-noise units.
inline constexpr double kQuadratureVariance = 0.5;

/// Poisson pmf with mean |alpha_out|^2, evaluated in log space.
double direct_detection_pmf(Amplitude alpha_out, std::uint64_t k);

/// Mean of the homodyne outcome: sqrt(2) Re(e^{-i phase} alpha_out).
double homodyne_mean(Amplitude alpha_out, double phase);

/// Gaussian density with mean homodyne_mean(alpha_out, phase), variance 1/2.
double homodyne_pdf(Amplitude alpha_out, double phase, double y);

/// Product density centred on (Re alpha_out, Im alpha_out), each variance 1/2.
double dual_homodyne_pdf(Amplitude alpha_out, double y_i, double y_q);

/// Reduces an angle to [0, 2 pi).
double wrap_phase(double phase);

DetectionOutcome sample_detection(const DetectionModel& model,
                                  Amplitude alpha_out, RandomStream& rng);

}  // namespace qlimits
