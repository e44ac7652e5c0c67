#include "qlimits/detection.hpp"

#include <cmath>
#include <numbers>

namespace qlimits {

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695;  // 1/sqrt(pi)

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double direct_detection_pmf(Amplitude alpha_out, std::uint64_t k) {
  const double mean = std::norm(alpha_out);
  if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(-mean + kd * std::log(mean) - std::lgamma(kd + 1.0));
}

double homodyne_mean(Amplitude alpha_out, double phase) {
  return std::numbers::sqrt2 *
         (std::polar(1.0, -phase) * alpha_out).real();
}

double homodyne_pdf(Amplitude alpha_out, double phase, double y) {
  const double d = y - homodyne_mean(alpha_out, phase);
  return kInvSqrtPi * std::exp(-d * d);
}

double dual_homodyne_pdf(Amplitude alpha_out, double y_i, double y_q) {
  const double di = y_i - alpha_out.real();
  const double dq = y_q - alpha_out.imag();
  return std::numbers::inv_pi * std::exp(-di * di - dq * dq);
}

double wrap_phase(double phase) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::fmod(phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

DetectionOutcome sample_detection(const DetectionModel& model,
                                  Amplitude alpha_out, RandomStream& rng) {
  const double shot = std::sqrt(kQuadratureVariance);
  return std::visit(
      Overloaded{
          [&](const DirectDetection&) -> DetectionOutcome {
            return PhotocountOutcome{rng.poisson(std::norm(alpha_out))};
          },
          [&](const Homodyne& h) -> DetectionOutcome {
            const double y =
                homodyne_mean(alpha_out, h.phase) + shot * rng.normal();
            return QuadratureOutcome{y, wrap_phase(h.phase)};
          },
          [&](const DualHomodyne&) -> DetectionOutcome {
            const double yi = alpha_out.real() + shot * rng.normal();
            const double yq = alpha_out.imag() + shot * rng.normal();
            return DualQuadratureOutcome{yi, yq};
          }},
      model);
}

}  // namespace qlimits
