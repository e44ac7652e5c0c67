#include "qlimits_cli/commands.hpp"

#include <cmath>
#include <stdexcept>

#include "qlimits/fock.hpp"
#include "qlimits/hadamard.hpp"
#include "qlimits/infotheory.hpp"
#include "qlimits/ppm.hpp"

namespace qlimits::cli {

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kShannonOneQuadrature: return "S1";
    case Scheme::kShannonTwoQuadrature: return "S2";
    case Scheme::kHolevo: return "Holevo";
    case Scheme::kFock: return "Fock";
  }
  throw std::logic_error("unknown scheme");
}

Scheme parse_scheme(const std::string& name) {
  for (Scheme s : {Scheme::kShannonOneQuadrature, Scheme::kShannonTwoQuadrature,
                   Scheme::kHolevo, Scheme::kFock}) {
    if (name == scheme_name(s)) return s;
  }
  throw std::invalid_argument("unknown scheme '" + name + "' (expected S1, S2, Holevo or Fock)");
}

namespace {

double capacity_of(Scheme scheme, double ns, double nn) {
  switch (scheme) {
    case Scheme::kShannonOneQuadrature: return shannon_capacity_one_quadrature(ns, nn);
    case Scheme::kShannonTwoQuadrature: return shannon_capacity_two_quadrature(ns, nn);
    case Scheme::kHolevo: return holevo_capacity(ns, nn);
    case Scheme::kFock: return fock_capacity(ns);
  }
  throw std::logic_error("unknown scheme");
}

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0)) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

}  // namespace

Table capacity_curves(const SweepSpec& sweep, const std::vector<Scheme>& schemes) {
  if (schemes.empty()) throw std::invalid_argument("no schemes requested");
  const auto grid = sweep.values();
  const bool over_signal = sweep.variable == SweepVariable::kSignal;
  if (!over_signal && !sweep.fixed.contains("n_s")) {
    throw std::invalid_argument("a noise sweep needs a fixed n_s");
  }

  Table table{{"n_s", "n_n", "scheme", "bits_per_slot"}, {}};
  for (double x : grid) {
    const double ns = over_signal ? x : sweep.fixed_or("n_s", 0.0);
    const double nn = over_signal ? sweep.fixed_or("n_n", 0.0) : x;
    require_nonnegative(ns, "n_s");
    require_nonnegative(nn, "n_n");
    for (Scheme s : schemes) {
      if (s == Scheme::kFock && nn > 0.0) {
        throw std::invalid_argument("Fock encoding is only defined for n_n = 0");
      }
      table.add_row({ns, nn, std::string(scheme_name(s)), capacity_of(s, ns, nn)});
    }
  }
  return table;
}

Table pie_curves(const SweepSpec& ns_sweep, const std::vector<std::int64_t>& ppm_orders,
                 bool include_approx) {
  if (ns_sweep.variable != SweepVariable::kSignal) {
    throw std::invalid_argument("PIE curves are swept over n_s");
  }
  for (auto m : ppm_orders) {
    if (m < 2 || !is_power_of_two(m)) {
      throw std::invalid_argument("PPM orders must be powers of two >= 2");
    }
  }
  const double nn = ns_sweep.fixed_or("n_n", 0.0);
  require_nonnegative(nn, "n_n");

  Table table{{"n_s", "n_n", "pie_S1", "pie_S2", "pie_holevo"}, {}};
  for (auto m : ppm_orders) table.columns.push_back("pie_ppm_M" + std::to_string(m));
  if (include_approx) {
    table.columns.insert(table.columns.end(),
                         {"pie_ppm_opt_approx", "pie_ppm_opt_exact", "m_opt_exact"});
  }

  for (double ns : ns_sweep.values()) {
    std::vector<Cell> row{ns, nn,
                          photon_efficiency(shannon_capacity_one_quadrature(ns, nn), ns),
                          photon_efficiency(shannon_capacity_two_quadrature(ns, nn), ns),
                          photon_efficiency(holevo_capacity(ns, nn), ns)};
    for (auto m : ppm_orders) row.emplace_back(ppm_photon_efficiency(PpmParams(m, ns)));
    if (include_approx) {
      const auto best = optimal_ppm_order_exact(ns);
      row.emplace_back(optimal_ppm_efficiency_approx(ns));
      row.emplace_back(best.efficiency);
      row.emplace_back(best.order);
    }
    table.add_row(std::move(row));
  }
  return table;
}

Table pie_heatmap(const SweepSpec& ns_sweep, const SweepSpec& nn_sweep) {
  if (ns_sweep.variable != SweepVariable::kSignal || nn_sweep.variable != SweepVariable::kNoise) {
    throw std::invalid_argument("heatmap needs an n_s sweep and an n_n sweep");
  }
  const auto noise = nn_sweep.values();
  for (double nn : noise) require_nonnegative(nn, "n_n");

  Table table{{"n_s", "n_n", "pie_holevo"}, {}};
  for (double ns : ns_sweep.values()) {
    for (double nn : noise) {
      table.add_row({ns, nn, photon_efficiency(holevo_capacity(ns, nn), ns)});
    }
  }
  return table;
}

Table bpsk_chi(const SweepSpec& ns_sweep) {
  if (ns_sweep.variable != SweepVariable::kSignal) {
    throw std::invalid_argument("BPSK curves are swept over n_s");
  }
  Table table{{"n_s", "pie_homodyne_bpsk", "pie_chi_bpsk", "pie_S1", "pie_holevo"}, {}};
  for (double ns : ns_sweep.values()) {
    // Homodyne of +-sqrt(n_s) gives outcome means +-sqrt(2 n_s) at variance 1/2.
    const double homodyne =
        binary_gaussian_mutual_information(std::sqrt(2.0 * ns), 0.5);
    table.add_row({ns, photon_efficiency(homodyne, ns),
                   photon_efficiency(bpsk_holevo_chi(ns), ns),
                   photon_efficiency(shannon_capacity_one_quadrature(ns, 0.0), ns),
                   photon_efficiency(holevo_capacity(ns, 0.0), ns)});
  }
  return table;
}

Table superadditivity(const std::vector<int>& orders, double ns) {
  if (orders.empty()) throw std::invalid_argument("no orders requested");
  for (int m : orders) {
    if (m != 2 && m != 4 && m != 8 && m != 16) {
      throw std::invalid_argument("superadditivity orders must be among 2, 4, 8, 16");
    }
  }
  if (!(ns > 0.0)) throw std::invalid_argument("n_s must be > 0");

  Table table{{"M", "n_s", "p1_star", "pie_star", "ppm_equivalent_pie",
               "single_symbol_ceiling"},
              {}};
  for (int m : orders) {
    const auto opt = optimize_p1(m, ns);
    table.add_row({std::int64_t{m}, ns, opt.p1, opt.efficiency,
                   ppm_photon_efficiency(PpmParams(m, ns)), 2.0 * kLog2E});
  }
  return table;
}

}  // namespace qlimits::cli
