#pragma once

// Truncated photon-number-basis numerics: coherent states, density matrices,
// von Neumann entropy and the Holevo quantity of loss-only coherent-state
// ensembles.

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qlimits/channel.hpp"

namespace qlimits {

/// Coefficients over photon numbers 0..cutoff. The squared norm lies in
/// [1 - 1e-10, 1 + 1e-12]; anything else is rejected at construction.
class FockVector {
 public:
  explicit FockVector(Eigen::VectorXcd amplitudes);

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  int cutoff() const { return static_cast<int>(amplitudes_.size()) - 1; }
  double squared_norm() const { return amplitudes_.squaredNorm(); }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// |alpha> truncated at `cutoff`, c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!)
/// evaluated through log-gamma. Throws std::invalid_argument when the
/// truncation drops more than 1e-10 of the norm.
FockVector coherent_state(Amplitude alpha, int cutoff);

/// Poisson(mean) mass strictly above `cutoff`.
double poisson_tail(double mean, int cutoff);

/// Smallest cutoff >= 16 whose Poisson(max_mean_photons) tail mass is below
/// tail_tol. tail_tol must lie in (0, 1).
int choose_cutoff(double max_mean_photons, double tail_tol = 1e-12);

/// Rule-of-thumb cutoff m + 10 sqrt(m + 1) + 10 (rounded up), comfortably
/// past any tail tolerance used here.
int conservative_cutoff(double mean_photons);

/// Hermitian, unit-trace matrix over photon numbers 0..cutoff.
///
/// Construction checks Hermiticity (max |A - A^H| <= 1e-12) and the trace
/// (within 1e-9 of 1), then stores the symmetrized (A + A^H) / 2.
/// Positivity is checked by von_neumann_entropy, which needs the spectrum
/// anyway.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Eigen::MatrixXcd& entries);

  /// sum_i weights[i] |psi_i><psi_i|. All states must share a cutoff.
  static DensityMatrix mixture(std::span<const double> weights,
                               std::span<const FockVector> states);

  const Eigen::MatrixXcd& entries() const { return entries_; }
  int cutoff() const { return static_cast<int>(entries_.rows()) - 1; }

 private:
  Eigen::MatrixXcd entries_;
};

/// -sum lambda log2 lambda over the spectrum. Eigenvalues in [-1e-10, 0) are
/// clipped to zero; more negative ones throw std::invalid_argument.
double von_neumann_entropy(const DensityMatrix& rho);

/// Holevo quantity of a coherent-state ensemble after loss-only propagation.
/// Output states are pure, so chi reduces to the entropy of the average state.
/// Throws std::invalid_argument if params carries excess noise or if the
/// cutoff is too small for some attenuated amplitude.
double holevo_chi(const Constellation& ensemble, const ChannelParams& params,
                  int cutoff);

/// Closed form for equiprobable {+sqrt(n_s), -sqrt(n_s)}: the average state
/// has eigenvalues (1 +- exp(-2 n_s)) / 2, so chi = h2((1 - exp(-2 n_s)) / 2).
double bpsk_holevo_chi(double ns);

/// Holevo quantity of a polar-grid discretization of the circular Gaussian
/// coherent-state ensemble with mean photon number n_s.
///
/// Radial nodes are Gauss-Laguerre in t = (1 + n_s) |alpha|^2 / n_s, which
/// makes every Fock-diagonal element of the averaged state exact up to photon
/// number 2 radial_nodes - 1; phases are uniform. Nodes with normalized weight
/// below 1e-18 are dropped, and the cutoff is raised to conservative_cutoff of
/// the largest retained |alpha|^2 if needed. Converges to g(n_s).
double gaussian_ensemble_chi(double ns, int radial_nodes = 32,
                             int angular_nodes = 32, int cutoff = 40);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Laguerre rule for weight e^{-t} on [0, inf), by Golub-Welsch.
QuadratureRule gauss_laguerre(int n);

}  // namespace qlimits
