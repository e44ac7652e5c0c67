#include "qlimits/fock.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qlimits/infotheory.hpp"

namespace qlimits {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-9;
constexpr double kNegativeEigenTol = 1e-10;

}  // namespace

FockVector::FockVector(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw std::invalid_argument("FockVector: empty");
  }
  const double n2 = amplitudes_.squaredNorm();
  if (n2 < 1.0 - kNormTol || n2 > 1.0 + 1e-12) {
    throw std::invalid_argument("FockVector: squared norm " +
                                std::to_string(n2) + " outside tolerance");
  }
}

FockVector coherent_state(Amplitude alpha, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("coherent_state: cutoff < 0");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff + 1);
  const double mean = std::norm(alpha);
  if (mean == 0.0) {
    c(0) = 1.0;
    return FockVector(std::move(c));
  }
  const double log_mag = 0.5 * std::log(mean);
  const double phase = std::arg(alpha);
  for (int n = 0; n <= cutoff; ++n) {
    const double log_c =
        -0.5 * mean + n * log_mag - 0.5 * std::lgamma(n + 1.0);
    c(n) = std::polar(std::exp(log_c), n * phase);
  }
  if (c.squaredNorm() < 1.0 - kNormTol) {
    throw std::invalid_argument(
        "coherent_state: cutoff " + std::to_string(cutoff) +
        " too small for |alpha|^2 = " + std::to_string(mean));
  }
  return FockVector(std::move(c));
}

double poisson_tail(double mean, int cutoff) {
  if (!(mean >= 0.0)) throw std::invalid_argument("poisson_tail: mean < 0");
  if (mean == 0.0) return 0.0;
  // Sum upward from cutoff + 1 while terms matter; the terms decay
  // geometrically once k exceeds the mean.
  double tail = 0.0;
  for (long k = cutoff + 1;; ++k) {
    const double kd = static_cast<double>(k);
    const double term =
        std::exp(-mean + kd * std::log(mean) - std::lgamma(kd + 1.0));
    tail += term;
    if (kd > mean && term < 1e-30 * std::max(tail, 1e-300)) break;
    if (kd > mean && term == 0.0) break;
  }
  return tail;
}

int choose_cutoff(double max_mean_photons, double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw std::invalid_argument("choose_cutoff: tail_tol outside (0, 1)");
  }
  if (!(max_mean_photons >= 0.0)) {
    throw std::invalid_argument("choose_cutoff: mean < 0");
  }
  int cutoff = 16;
  while (poisson_tail(max_mean_photons, cutoff) >= tail_tol) ++cutoff;
  return cutoff;
}

int conservative_cutoff(double mean_photons) {
  if (!(mean_photons >= 0.0)) {
    throw std::invalid_argument("conservative_cutoff: mean < 0");
  }
  return static_cast<int>(
      std::ceil(mean_photons + 10.0 * std::sqrt(mean_photons + 1.0) + 10.0));
}

DensityMatrix::DensityMatrix(const Eigen::MatrixXcd& entries) {
  if (entries.rows() == 0 || entries.rows() != entries.cols()) {
    throw std::invalid_argument("DensityMatrix: must be square, nonempty");
  }
  const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian (deviation " +
                                std::to_string(asym) + ")");
  }
  const double trace = entries.trace().real();
  if (std::fabs(trace - 1.0) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace " +
                                std::to_string(trace) + " != 1");
  }
  entries_ = 0.5 * (entries + entries.adjoint());
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights,
                                     std::span<const FockVector> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw std::invalid_argument("DensityMatrix::mixture: size mismatch");
  }
  const Eigen::Index dim = states.front().amplitudes().size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& v = states[i].amplitudes();
    if (v.size() != dim) {
      throw std::invalid_argument("DensityMatrix::mixture: cutoff mismatch");
    }
    if (weights[i] == 0.0) continue;
    rho.noalias() += weights[i] * (v * v.adjoint());
  }
  return DensityMatrix(rho);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("von_neumann_entropy: eigensolver failed");
  }
  double s = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda < -kNegativeEigenTol) {
      throw std::invalid_argument("von_neumann_entropy: eigenvalue " +
                                  std::to_string(lambda) + " < 0");
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double holevo_chi(const Constellation& ensemble, const ChannelParams& params,
                  int cutoff) {
  if (params.excess_noise() != 0.0) {
    throw std::invalid_argument(
        "holevo_chi: only loss-only channels (n_n = 0) are supported");
  }
  const double gain = std::sqrt(params.tau());
  std::vector<FockVector> states;
  std::vector<double> weights;
  states.reserve(ensemble.size());
  for (const auto& s : ensemble.symbols()) {
    states.push_back(coherent_state(gain * s.amplitude, cutoff));
    weights.push_back(s.probability);
  }
  // Pure outputs: the average-entropy term is identically zero.
  return von_neumann_entropy(DensityMatrix::mixture(weights, states));
}

double bpsk_holevo_chi(double ns) {
  if (!(ns >= 0.0)) throw std::invalid_argument("bpsk_holevo_chi: n_s < 0");
  return binary_entropy(-0.5 * std::expm1(-2.0 * ns));
}

namespace {

// L_n(t) and L_n'(t) by the three-term recurrence.
std::pair<double, double> laguerre(int n, double t) {
  double prev = 1.0;
  double cur = 1.0 - t;
  if (n == 0) return {1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - t) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  // t L_n' = n (L_n - L_{n-1})
  return {cur, n * (cur - prev) / t};
}

}  // namespace

QuadratureRule gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n < 1");
  // Golub-Welsch supplies the nodes; Newton polishing and the closed-form
  // weights t / ((n+1) L_{n+1}(t))^2 keep the tiny far-node weights accurate
  // to full relative precision, which eigenvector components cannot.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0;
  for (int i = 1; i < n; ++i) sub(i - 1) = static_cast<double>(i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_laguerre: eigensolver failed");
  }
  QuadratureRule rule;
  for (int i = 0; i < n; ++i) {
    double t = solver.eigenvalues()(i);
    for (int iter = 0; iter < 8; ++iter) {
      const auto [value, slope] = laguerre(n, t);
      const double step = value / slope;
      t -= step;
      if (std::fabs(step) <= 1e-15 * t) break;
    }
    const double next = laguerre(n + 1, t).first;
    rule.nodes.push_back(t);
    rule.weights.push_back(t / ((n + 1.0) * (n + 1.0) * next * next));
  }
  return rule;
}

double gaussian_ensemble_chi(double ns, int radial_nodes, int angular_nodes,
                             int cutoff) {
  if (!(ns >= 0.0)) {
    throw std::invalid_argument("gaussian_ensemble_chi: n_s < 0");
  }
  if (radial_nodes < 8 || angular_nodes < 8) {
    throw std::invalid_argument("gaussian_ensemble_chi: need >= 8 nodes");
  }
  if (ns == 0.0) return 0.0;

  // With |alpha|^2 = ns u, u ~ Exp(1), each coherent projector carries
  // e^{-ns u}; substituting t = (1 + ns) u leaves a polynomial against e^{-t}.
  const auto rule = gauss_laguerre(radial_nodes);
  const double scale = 1.0 + ns;
  std::vector<double> radial_weight;
  std::vector<double> radial_mean;
  double total = 0.0;
  for (int i = 0; i < radial_nodes; ++i) {
    const double t = rule.nodes[i];
    const double w = rule.weights[i] * std::exp(ns * t / scale) / scale;
    radial_weight.push_back(w);
    radial_mean.push_back(ns * t / scale);
    total += w;
  }
  double kept = 0.0;
  double max_mean = 0.0;
  for (int i = 0; i < radial_nodes; ++i) {
    radial_weight[i] /= total;
    if (radial_weight[i] < 1e-18) {
      radial_weight[i] = 0.0;
      continue;
    }
    kept += radial_weight[i];
    max_mean = std::max(max_mean, radial_mean[i]);
  }
  const int dim_cutoff = std::max(cutoff, conservative_cutoff(max_mean));

  std::vector<FockVector> states;
  std::vector<double> weights;
  for (int i = 0; i < radial_nodes; ++i) {
    if (radial_weight[i] == 0.0) continue;
    const double radius = std::sqrt(radial_mean[i]);
    for (int k = 0; k < angular_nodes; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angular_nodes;
      states.push_back(coherent_state(std::polar(radius, theta), dim_cutoff));
      weights.push_back(radial_weight[i] / kept / angular_nodes);
    }
  }
  return von_neumann_entropy(DensityMatrix::mixture(weights, states));
}

}  // namespace qlimits
