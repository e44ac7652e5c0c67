#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlimits_cli/sweep.hpp"
#include "qlimits_cli/table.hpp"

namespace qlimits::cli {

enum class Scheme { kShannonOneQuadrature, kShannonTwoQuadrature, kHolevo, kFock };

/// "S1", "S2", "Holevo", "Fock".
const char* scheme_name(Scheme scheme);
Scheme parse_scheme(const std::string& name);

/// Long format: n_s, n_n, scheme, bits_per_slot. The sweep may run over n_s
/// (n_n fixed, default 0) or over n_n (n_s fixed, required). Fock encoding is
/// a noiseless scheme and is rejected when any point has n_n > 0.
Table capacity_curves(const SweepSpec& sweep, const std::vector<Scheme>& schemes);

/// PIE against n_s at fixed n_n: S1, S2 and Holevo, one column per PPM order,
/// and optionally the closed-form optimal-order estimate next to the exact
/// integer optimum (PPM columns assume n_n = 0 direct detection).
Table pie_curves(const SweepSpec& ns_sweep, const std::vector<std::int64_t>& ppm_orders,
                 bool include_approx);

/// Holevo PIE on the product grid, n_s outer, n_n inner.
Table pie_heatmap(const SweepSpec& ns_sweep, const SweepSpec& nn_sweep);

/// BPSK efficiencies against n_s: homodyne detection, the BPSK Holevo
/// quantity, and the one-quadrature Shannon and Holevo limits.
Table bpsk_chi(const SweepSpec& ns_sweep);

/// Optimized (M+1)-word scheme per order, next to M-ary PPM at the same n_s
/// and the 2 log2 e ceiling of symbol-by-symbol detection.
Table superadditivity(const std::vector<int>& orders, double ns);

struct ValidationCheck {
  std::string name;
  double measured;
  double expected;
  double tolerance;
  bool passed() const;
};

struct ValidationReport {
  std::uint64_t seed;
  std::int64_t samples;
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

/// Minimum sample count accepted by run_validation.
inline constexpr std::int64_t kMinValidationSamples = 100000;

/// Monte Carlo cross-checks of the detection and channel samplers and of the
/// mutual-information engine. Each check draws from its own stream derived
/// from `seed`, so the report is reproducible. Bands are three standard
/// errors, widened to a fixed floor where one applies.
ValidationReport run_validation(std::uint64_t seed, std::int64_t samples);

Table validation_table(const ValidationReport& report);

}  // namespace qlimits::cli
