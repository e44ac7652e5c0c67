// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qlimits/channel.hpp"
#include "qlimits/detection.hpp"
#include "qlimits/fock.hpp"
#include "qlimits/hadamard.hpp"
#include "qlimits/infotheory.hpp"
#include "qlimits/ppm.hpp"
#include "qlimits/random.hpp"

using namespace qlimits;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * i / (n - 1));
  }
  return v;
}

Outcome gordon_anchors() {
  const double g1 = thermal_entropy(1.0);
  const double ch = holevo_capacity(1.0, 1.0);
  const double target = 3.0 * std::log2(3.0) - 4.0;
  return {std::abs(g1 - 2.0) <= 1e-12 && std::abs(ch - target) <= 1e-9,
          fmt("g(1)=%.15f  C_H(1,1)=%.12f (target %.12f)", g1, ch, target)};
}

Outcome capacity_ordering() {
  bool ok = true;
  double worst_fock = 0.0;
  for (double ns : log_grid(1e-2, 1e2, 200)) {
    const double s1 = shannon_capacity_one_quadrature(ns, 0.0);
    const double s2 = shannon_capacity_two_quadrature(ns, 0.0);
    const double h = holevo_capacity(ns, 0.0);
    ok &= h >= s1 && h >= s2;
    ok &= ns < 2.0 ? s1 > s2 : s1 < s2;
    worst_fock = std::max(worst_fock, std::abs(h - fock_capacity(ns)));
  }
  ok &= worst_fock <= 1e-12;
  return {ok, fmt("200-point grid ordering %s, max |C_H - C_Fock| = %.2e", ok ? "holds" : "violated",
                  worst_fock)};
}

Outcome shannon_pie_asymptotes() {
  const double ns = 1e-6;
  const double p1 = photon_efficiency(shannon_capacity_one_quadrature(ns, 0.0), ns);
  const double p2 = photon_efficiency(shannon_capacity_two_quadrature(ns, 0.0), ns);
  return {std::abs(p1 - 2.885390) <= 1e-3 && std::abs(p2 - 1.442695) <= 1e-3,
          fmt("PIE_S1=%.6f PIE_S2=%.6f at n_s=1e-6", p1, p2)};
}

Outcome holevo_advantage_large_signal() {
  const double gap = thermal_entropy(1e3) - std::log2(1.0 + 1e3);
  const double target = oracle::kLog2E - oracle::kLog2E / 2000.0;
  return {std::abs(gap - target) <= 1e-3, fmt("g(1e3)-log2(1001)=%.6f target %.6f", gap, target)};
}

Outcome ppm_limit() {
  bool ok = true;
  std::string d;
  for (int m : {2, 8, 1024}) {
    const double pie = ppm_photon_efficiency(PpmParams(m, 1e-8));
    ok &= std::abs(pie - std::log2(m)) <= 1e-4;
    d += fmt("M=%d: %.6f  ", m, pie);
  }
  return {ok, d};
}

Outcome lambert_approximation() {
  bool ok = true;
  std::string d;
  for (double ns : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const auto exact = optimal_ppm_order_exact(ns);
    const double approx = optimal_ppm_efficiency_approx(ns);
    const double holevo = photon_efficiency(holevo_capacity(ns, 0.0), ns);
    ok &= exact.efficiency >= approx && exact.efficiency < holevo && approx < holevo;
    d += fmt("n_s=%.0e: exact %.4f (M=%lld) approx %.4f holevo %.4f; ", ns, exact.efficiency,
             static_cast<long long>(exact.order), approx, holevo);
  }
  return {ok, d};
}

Outcome holevo_chi_oracles() {
  bool ok = true;
  double worst = 0.0;
  for (double ns : {0.01, 0.1, 0.25, 1.0, 4.0}) {
    const double fock =
        holevo_chi(Constellation::bpsk(std::sqrt(ns)), ChannelParams::lossless(), choose_cutoff(ns));
    worst = std::max(worst, std::abs(fock - bpsk_holevo_chi(ns)));
  }
  ok &= worst <= 1e-9;
  std::string d = fmt("BPSK closed form vs Fock max diff %.2e; ", worst);
  for (double ns : {0.1, 1.0}) {
    const double g = thermal_entropy(ns);
    const double c32 = gaussian_ensemble_chi(ns, 32, 32);
    const double c64 = gaussian_ensemble_chi(ns, 64, 64);
    ok &= std::abs(c64 - g) <= 5e-3 && std::abs(c32 - g) <= 5e-3 &&
          std::abs(c64 - g) <= std::abs(c32 - g) + 1e-9;
    d += fmt("Gaussian n_s=%.1f: 32 nodes %.9f, 64 nodes %.9f, g=%.9f; ", ns, c32, c64, g);
  }
  return {ok, d};
}

Outcome cascade_correctness() {
  double worst_residual = 0.0;
  for (int m = 2; m <= 256; m *= 2) {
    for (int l = 1; l <= m; ++l) {
      const auto out = cascade_transform(hadamard_word(l, m).amplitudes(1.0));
      double rest = 0.0;
      for (int i = 0; i < m; ++i) {
        if (i != l - 1) rest += std::norm(out[i]);
      }
      worst_residual = std::max(worst_residual, rest / m);
    }
  }
  RandomStream rng(2718);
  double worst_energy = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 << (1 + trial % 9);
    std::vector<Amplitude> x(m);
    double ein = 0.0, eout = 0.0;
    for (auto& v : x) {
      v = {rng.normal(), rng.normal()};
      ein += std::norm(v);
    }
    for (const auto& v : cascade_transform(x)) eout += std::norm(v);
    worst_energy = std::max(worst_energy, std::abs(eout - ein) / ein);
  }
  return {worst_residual < 1e-20 && worst_energy <= 1e-12,
          fmt("max relative residual %.2e, max relative energy error %.2e", worst_residual, worst_energy)};
}

Outcome superadditivity() {
  const std::vector<std::pair<int, double>> targets{{2, 2.98}, {4, 3.10}, {8, 3.39}};
  bool ok = true;
  std::string d;
  for (const auto& [m, target] : targets) {
    const auto a = optimize_p1(m, 1e-4);
    const auto b = optimize_p1(m, 1e-5);
    const bool near = std::abs(a.efficiency - target) <= 0.02;
    const bool above = a.efficiency > 2.0 * oracle::kLog2E;
    const bool stable = std::abs(a.efficiency - b.efficiency) < 5e-3;
    ok &= near && above && stable;
    d += fmt("M=%d: PIE*=%.4f (target %.2f%s), p1*=%.4f, shift to 1e-5 %.4f; ", m, a.efficiency, target,
             near ? "" : " MISSED", a.p1, b.efficiency - a.efficiency);
  }
  return {ok, d};
}

Outcome monte_carlo_consistency() {
  constexpr int n = 1000000;
  const double sn = std::sqrt(static_cast<double>(n));
  bool ok = true;
  std::string d;

  RandomStream rng(20240501);
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double y = std::get<QuadratureOutcome>(sample_detection(Homodyne{0.0}, 1.0, rng)).y;
    s += y;
    s2 += y * y;
  }
  double var = s2 / n - (s / n) * (s / n);
  ok &= std::abs(var - 0.5) <= 0.01;
  d += fmt("homodyne var %.5f; ", var);

  double si = 0, sii = 0, sq = 0, sqq = 0;
  for (int i = 0; i < n; ++i) {
    const auto o = std::get<DualQuadratureOutcome>(sample_detection(DualHomodyne{}, {3.0, 4.0}, rng));
    si += o.y_i;
    sii += o.y_i * o.y_i;
    sq += o.y_q;
    sqq += o.y_q * o.y_q;
  }
  const double vi = sii / n - (si / n) * (si / n), vq = sqq / n - (sq / n) * (sq / n);
  ok &= std::abs(vi - 0.5) <= 0.01 && std::abs(vq - 0.5) <= 0.01;
  d += fmt("dual vars %.5f/%.5f; ", vi, vq);

  for (double mean : {4.0, 50.0}) {
    double k = 0;
    for (int i = 0; i < n; ++i) {
      k += static_cast<double>(
          std::get<PhotocountOutcome>(sample_detection(DirectDetection{}, std::sqrt(mean), rng)).k);
    }
    const double tol = 3.0 * std::sqrt(mean) / sn;
    ok &= std::abs(k / n - mean) <= tol;
    d += fmt("photocount mean %.4f (|a|^2=%g, 3 sigma %.4f); ", k / n, mean, tol);
  }

  for (double nn : {0.2, 1.0}) {
    const ChannelParams p(1.0, nn);
    double r = 0, rr = 0, q = 0, qq = 0;
    for (int i = 0; i < n; ++i) {
      const Amplitude z = propagate_sample(0.0, p, rng);
      r += z.real();
      rr += z.real() * z.real();
      q += z.imag();
      qq += z.imag() * z.imag();
    }
    const double vr = rr / n - (r / n) * (r / n), vq2 = qq / n - (q / n) * (q / n);
    const double tol = 3.0 * (nn / 2.0) * std::sqrt(2.0 / (n - 1));
    ok &= std::abs(vr - nn / 2) <= tol && std::abs(vq2 - nn / 2) <= tol;
    d += fmt("noise n_n=%.1f vars %.5f/%.5f (3 sigma %.5f); ", nn, vr, vq2, tol);
  }
  return {ok, d};
}

Outcome mutual_information_oracles() {
  const double ns = 0.1;
  const double quad = binary_gaussian_mutual_information(std::sqrt(2.0 * ns), kQuadratureVariance);
  const double riemann = oracle::binary_gaussian_mi_riemann(std::sqrt(2.0 * ns), kQuadratureVariance);

  const Amplitude plus(std::sqrt(ns), 0.0);
  RandomStream rng(777);
  constexpr long n = 10000000;
  double s = 0, s2 = 0;
  for (long i = 0; i < n; ++i) {
    const Amplitude x = rng.uniform() < 0.5 ? plus : -plus;
    const double y = std::get<QuadratureOutcome>(sample_detection(Homodyne{0.0}, x, rng)).y;
    const double dens = std::log2(homodyne_pdf(x, 0.0, y) /
                                  (0.5 * homodyne_pdf(plus, 0.0, y) + 0.5 * homodyne_pdf(-plus, 0.0, y)));
    s += dens;
    s2 += dens * dens;
  }
  const double mc = s / n;
  const double se = std::sqrt((s2 / n - mc * mc) / n);
  return {std::abs(mc - quad) <= 3.0 * se && std::abs(riemann - quad) <= 1e-5,
          fmt("quadrature %.10f, Monte Carlo %.10f +- %.2e (3 sigma), Riemann %.10f", quad, mc, 3 * se,
              riemann)};
}

Outcome noisy_pie_ceiling() {
  bool ok = true;
  std::string d;
  for (double nn : {1.0 / 3.0, 1.0, 3.0}) {
    const double pie = photon_efficiency(holevo_capacity(1e-6, nn), 1e-6);
    const double limit = std::log2(1.0 + 1.0 / nn);
    ok &= std::abs(pie - limit) <= 1e-3;
    d += fmt("n_n=%.4f: %.6f vs %.6f; ", nn, pie, limit);
  }
  return {ok, d};
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
  double time_limit;  // seconds; 0 means unbounded
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"Gordon function anchors", gordon_anchors, 0.0},
      {"Capacity ordering, loss-only channel", capacity_ordering, 1.0},
      {"Shannon PIE asymptotes", shannon_pie_asymptotes, 0.0},
      {"Holevo advantage at large n_s", holevo_advantage_large_signal, 0.0},
      {"PPM efficiency tends to log2 M", ppm_limit, 0.0},
      {"Closed-form optimal PPM below exact optimum and Holevo", lambert_approximation, 0.0},
      {"BPSK and Gaussian-ensemble Holevo quantities", holevo_chi_oracles, 10.0},
      {"Hadamard cascade maps words to slots", cascade_correctness, 0.0},
      {"Superadditive (M+1)-word scheme", superadditivity, 30.0},
      {"Monte Carlo consistency of samplers", monte_carlo_consistency, 10.0},
      {"Mutual-information engine vs oracles", mutual_information_oracles, 0.0},
      {"Noisy Holevo PIE ceiling", noisy_pie_ceiling, 0.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    auto result = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0.0 && secs >= c.time_limit) {
      result.pass = false;
      result.detail += fmt(" [time limit %.0f s exceeded]", c.time_limit);
    }
    failures += result.pass ? 0 : 1;
    std::printf("%s AC%02zu %s (%.2f s): %s\n", result.pass ? "PASS" : "FAIL", i + 1, c.title, secs,
                result.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
