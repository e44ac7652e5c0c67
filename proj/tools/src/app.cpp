#include "qlimits_cli/app.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qlimits_cli/commands.hpp"

namespace qlimits::cli {
namespace {

struct SweepFlags {
  double min;
  double max;
  int points;
  bool log = true;
};

struct OutputFlags {
  bool json = false;
  std::string path;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f, const std::string& prefix) {
  const std::string axis = prefix == "ns" ? "n_s" : "n_n";
  cmd->add_option("--" + prefix + "-min", f.min, axis + " sweep start")->capture_default_str();
  cmd->add_option("--" + prefix + "-max", f.max, axis + " sweep stop")->capture_default_str();
  const std::string points = prefix == "ns" ? "--points" : "--" + prefix + "-points";
  cmd->add_option(points, f.points, "Number of " + axis + " grid points")->capture_default_str();
  const std::string log = prefix == "ns" ? "--log,!--linear" : "--" + prefix + "-log,!--" + prefix + "-linear";
  cmd->add_flag(log, f.log, "Logarithmic (default) or linear " + axis + " spacing");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
  cmd->add_flag("--json", f.json, "Emit a JSON array of records instead of CSV");
  cmd->add_option("--out", f.path, "Write results to FILE instead of standard output");
}

SweepSpec make_sweep(const SweepFlags& f, SweepVariable variable) {
  SweepSpec s;
  s.variable = variable;
  s.scale = f.log ? SweepScale::kLog : SweepScale::kLinear;
  s.start = f.min;
  s.stop = f.max;
  s.points = f.points;
  return s;
}

void emit(const Table& table, const OutputFlags& f, std::ostream& out) {
  std::ofstream file;
  if (!f.path.empty()) {
    file.open(f.path);
    if (!file) throw std::invalid_argument("cannot open output file '" + f.path + "'");
  }
  std::ostream& sink = f.path.empty() ? out : file;
  if (f.json) {
    write_json(table, sink);
  } else {
    write_csv(table, sink);
  }
  if (!sink) throw std::runtime_error("failed writing output");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity limits and photon information efficiency of the optical AWGN channel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(QLIMITS_VERSION));

  // capacity
  auto* capacity = app.add_subcommand("capacity", "Capacity curves in bits per slot");
  SweepFlags cap_ns{1e-2, 1e2, 200};
  SweepFlags cap_nn{1e-3, 1e1, 50};
  double cap_nn_fixed = 0.0;
  double cap_ns_fixed = 1.0;
  std::string cap_vary = "ns";
  std::vector<std::string> cap_schemes;
  OutputFlags cap_out;
  add_sweep_flags(capacity, cap_ns, "ns");
  add_sweep_flags(capacity, cap_nn, "nn");
  capacity->add_option("--nn", cap_nn_fixed, "Excess noise photons per slot (n_s sweep)")
      ->capture_default_str();
  capacity->add_option("--ns", cap_ns_fixed, "Signal photons per slot (n_n sweep)")
      ->capture_default_str();
  capacity->add_option("--vary", cap_vary, "Swept variable")
      ->check(CLI::IsMember({"ns", "nn"}))
      ->capture_default_str();
  capacity->add_option("--schemes", cap_schemes, "Subset of S1,S2,Holevo,Fock")
      ->delimiter(',');
  add_output_flags(capacity, cap_out);

  // pie
  auto* pie = app.add_subcommand("pie", "Photon information efficiency curves");
  SweepFlags pie_ns{1e-6, 1.0, 61};
  double pie_nn = 0.0;
  std::vector<std::int64_t> pie_orders;
  bool pie_approx = false;
  OutputFlags pie_out;
  add_sweep_flags(pie, pie_ns, "ns");
  pie->add_option("--nn", pie_nn, "Excess noise photons per slot")->capture_default_str();
  pie->add_option("--orders", pie_orders, "PPM orders, e.g. 2,4,8")->delimiter(',');
  pie->add_flag("--approx", pie_approx,
                "Add the closed-form and exact optimal-order PPM efficiencies");
  add_output_flags(pie, pie_out);

  // heatmap
  auto* heatmap = app.add_subcommand("heatmap", "Holevo PIE over an (n_s, n_n) grid");
  SweepFlags map_ns{1e-6, 1e2, 41};
  SweepFlags map_nn{1e-6, 1e2, 41};
  OutputFlags map_out;
  add_sweep_flags(heatmap, map_ns, "ns");
  add_sweep_flags(heatmap, map_nn, "nn");
  add_output_flags(heatmap, map_out);

  // bpsk
  auto* bpsk = app.add_subcommand("bpsk", "BPSK efficiencies: homodyne and Holevo quantity");
  SweepFlags bpsk_ns{1e-4, 1e1, 51};
  OutputFlags bpsk_out;
  add_sweep_flags(bpsk, bpsk_ns, "ns");
  add_output_flags(bpsk, bpsk_out);

  // superadditivity
  auto* superadd =
      app.add_subcommand("superadditivity", "Optimized (M+1)-word joint-detection scheme");
  std::vector<int> sup_orders{2, 4, 8};
  double sup_ns = 1e-4;
  OutputFlags sup_out;
  superadd->add_option("--orders", sup_orders, "Orders among 2,4,8,16")
      ->delimiter(',')
      ->capture_default_str();
  superadd->add_option("--ns", sup_ns, "Signal photons per slot")->capture_default_str();
  add_output_flags(superadd, sup_out);

  // validate
  auto* validate = app.add_subcommand("validate", "Monte Carlo checks of the samplers");
  std::uint64_t val_seed = 1;
  std::int64_t val_samples = 1000000;
  OutputFlags val_out;
  validate->add_option("--seed", val_seed, "Random seed")->capture_default_str();
  validate->add_option("--samples", val_samples, "Samples per check (>= 100000)")
      ->capture_default_str();
  add_output_flags(validate, val_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (capacity->parsed()) {
      std::vector<Scheme> schemes;
      for (const auto& name : cap_schemes) schemes.push_back(parse_scheme(name));
      SweepSpec sweep;
      if (cap_vary == "ns") {
        sweep = make_sweep(cap_ns, SweepVariable::kSignal);
        sweep.fixed["n_n"] = cap_nn_fixed;
      } else {
        sweep = make_sweep(cap_nn, SweepVariable::kNoise);
        sweep.fixed["n_s"] = cap_ns_fixed;
      }
      if (schemes.empty()) {
        schemes = {Scheme::kShannonOneQuadrature, Scheme::kShannonTwoQuadrature,
                   Scheme::kHolevo};
        if (cap_vary == "ns" && cap_nn_fixed == 0.0) schemes.push_back(Scheme::kFock);
      }
      emit(capacity_curves(sweep, schemes), cap_out, out);
    } else if (pie->parsed()) {
      auto sweep = make_sweep(pie_ns, SweepVariable::kSignal);
      sweep.fixed["n_n"] = pie_nn;
      emit(pie_curves(sweep, pie_orders, pie_approx), pie_out, out);
    } else if (heatmap->parsed()) {
      emit(pie_heatmap(make_sweep(map_ns, SweepVariable::kSignal),
                       make_sweep(map_nn, SweepVariable::kNoise)),
           map_out, out);
    } else if (bpsk->parsed()) {
      emit(bpsk_chi(make_sweep(bpsk_ns, SweepVariable::kSignal)), bpsk_out, out);
    } else if (superadd->parsed()) {
      emit(superadditivity(sup_orders, sup_ns), sup_out, out);
    } else if (validate->parsed()) {
      const auto report = run_validation(val_seed, val_samples);
      emit(validation_table(report), val_out, out);
      std::size_t passed = 0;
      for (const auto& c : report.checks) passed += c.passed() ? 1 : 0;
      err << "validate: " << passed << "/" << report.checks.size() << " checks passed\n";
      return report.all_passed() ? kExitOk : kExitValidation;
    }
  } catch (const std::exception& e) {
    // Bad parameter combinations surface as exceptions from the library.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace qlimits::cli
