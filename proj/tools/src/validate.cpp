#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qlimits/channel.hpp"
#include "qlimits/detection.hpp"
#include "qlimits/infotheory.hpp"
#include "qlimits/random.hpp"
#include "qlimits_cli/commands.hpp"

namespace qlimits::cli {

bool ValidationCheck::passed() const {
  return std::abs(measured - expected) <= tolerance;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed(); });
}

namespace {

// Welford running moments.
class Moments {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }
  double mean() const { return mean_; }
  double variance() const { return m2_ / static_cast<double>(n_ - 1); }

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Independent per-check streams: splitmix64 of the user seed and check id.
RandomStream stream_for(std::uint64_t seed, std::uint64_t check) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (check + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return RandomStream(z ^ (z >> 31));
}

double quadrature(const DetectionOutcome& o) { return std::get<QuadratureOutcome>(o).y; }

}  // namespace

ValidationReport run_validation(std::uint64_t seed, std::int64_t samples) {
  if (samples < kMinValidationSamples) {
    throw std::invalid_argument("validation needs at least 100000 samples");
  }
  const double n = static_cast<double>(samples);
  // Standard error of a sample variance for a Gaussian with variance v.
  const auto gaussian_var_se = [n](double v) { return v * std::sqrt(2.0 / (n - 1.0)); };
  // Fixed floor used for the shot-noise variances.
  constexpr double kVarianceFloor = 0.01;

  ValidationReport report{seed, samples, {}};
  auto add = [&](std::string name, double measured, double expected, double tol) {
    report.checks.push_back({std::move(name), measured, expected, tol});
  };
  std::uint64_t check_id = 0;

  {
    auto rng = stream_for(seed, check_id++);
    const Amplitude alpha{1.0, 0.0};
    Moments m;
    for (std::int64_t i = 0; i < samples; ++i) {
      m.add(quadrature(sample_detection(Homodyne{0.0}, alpha, rng)));
    }
    add("homodyne_mean", m.mean(), std::sqrt(2.0), 3.0 * std::sqrt(0.5 / n));
    add("homodyne_variance", m.variance(), 0.5,
        std::max(kVarianceFloor, 3.0 * gaussian_var_se(0.5)));
  }
  {
    auto rng = stream_for(seed, check_id++);
    const Amplitude alpha{3.0, 4.0};
    Moments mi, mq;
    for (std::int64_t i = 0; i < samples; ++i) {
      const auto o = std::get<DualQuadratureOutcome>(sample_detection(DualHomodyne{}, alpha, rng));
      mi.add(o.y_i);
      mq.add(o.y_q);
    }
    const double mean_tol = 3.0 * std::sqrt(0.5 / n);
    const double var_tol = std::max(kVarianceFloor, 3.0 * gaussian_var_se(0.5));
    add("dual_homodyne_i_mean", mi.mean(), 3.0, mean_tol);
    add("dual_homodyne_q_mean", mq.mean(), 4.0, mean_tol);
    add("dual_homodyne_i_variance", mi.variance(), 0.5, var_tol);
    add("dual_homodyne_q_variance", mq.variance(), 0.5, var_tol);
  }
  // Small mean exercises inversion sampling, the large one rejection sampling.
  for (double photons : {4.0, 50.0}) {
    auto rng = stream_for(seed, check_id++);
    const Amplitude alpha{std::sqrt(photons), 0.0};
    Moments m;
    for (std::int64_t i = 0; i < samples; ++i) {
      m.add(static_cast<double>(
          std::get<PhotocountOutcome>(sample_detection(DirectDetection{}, alpha, rng)).k));
    }
    const std::string tag = std::to_string(static_cast<int>(photons));
    add("photocount_mean_" + tag, m.mean(), photons, 3.0 * std::sqrt(photons / n));
    // Var of the sample variance of a Poisson law: (mu + 2 mu^2) / n.
    add("photocount_variance_" + tag, m.variance(), photons,
        3.0 * std::sqrt((photons + 2.0 * photons * photons) / n));
  }
  {
    auto rng = stream_for(seed, check_id++);
    const double nn = 1.0;
    const ChannelParams params(1.0, nn);
    Moments re, im, cross;
    for (std::int64_t i = 0; i < samples; ++i) {
      const Amplitude z = propagate_sample({0.0, 0.0}, params, rng);
      re.add(z.real());
      im.add(z.imag());
      cross.add(z.real() * z.imag());
    }
    const double tol = 3.0 * gaussian_var_se(nn / 2.0);
    add("channel_noise_re_variance", re.variance(), nn / 2.0, tol);
    add("channel_noise_im_variance", im.variance(), nn / 2.0, tol);
    const double corr = (cross.mean() - re.mean() * im.mean()) /
                        std::sqrt(re.variance() * im.variance());
    add("channel_noise_correlation", corr, 0.0, 3.0 / std::sqrt(n));
  }
  {
    auto rng = stream_for(seed, check_id++);
    const ChannelParams params(0.25, 0.5);
    Moments re;
    for (std::int64_t i = 0; i < samples; ++i) {
      re.add(propagate_sample({2.0, 0.0}, params, rng).real());
    }
    add("channel_attenuated_mean", re.mean(), 1.0, 3.0 * std::sqrt(0.25 / n));
  }
  {
    // BPSK homodyne at n_s = 0.1, Monte Carlo average of the information
    // density log2 f(y|x) / f(y) against the quadrature engine.
    auto rng = stream_for(seed, check_id++);
    const double ns = 0.1;
    const Amplitude plus{std::sqrt(ns), 0.0};
    Moments density;
    for (std::int64_t i = 0; i < samples; ++i) {
      const Amplitude sent = rng.uniform() < 0.5 ? plus : -plus;
      const double y = quadrature(sample_detection(Homodyne{0.0}, sent, rng));
      const double f_sent = homodyne_pdf(sent, 0.0, y);
      const double f_avg = 0.5 * (homodyne_pdf(plus, 0.0, y) + homodyne_pdf(-plus, 0.0, y));
      density.add(std::log2(f_sent / f_avg));
    }
    add("bpsk_homodyne_mutual_information", density.mean(),
        binary_gaussian_mutual_information(std::sqrt(2.0 * ns), 0.5),
        3.0 * std::sqrt(density.variance() / n));
  }
  return report;
}

Table validation_table(const ValidationReport& report) {
  Table table{{"check", "seed", "samples", "measured", "expected", "deviation", "tolerance",
               "status"},
              {}};
  for (const auto& c : report.checks) {
    table.add_row({c.name, std::to_string(report.seed), report.samples, c.measured,
                   c.expected, c.measured - c.expected, c.tolerance,
                   std::string(c.passed() ? "PASS" : "FAIL")});
  }
  return table;
}

}  // namespace qlimits::cli
