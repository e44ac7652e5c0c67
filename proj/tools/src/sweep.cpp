#include "qlimits_cli/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace qlimits::cli {

void SweepSpec::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw std::invalid_argument("sweep bounds must be finite");
  }
  if (!(start < stop)) throw std::invalid_argument("sweep requires start < stop");
  if (points < 2) throw std::invalid_argument("sweep requires at least 2 points");
  if (scale == SweepScale::kLog && start <= 0.0) {
    throw std::invalid_argument("log sweep requires start > 0");
  }
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(points));
  const double last = points - 1;
  for (int i = 0; i < points; ++i) {
    const double t = i / last;
    // Interpolating decimal exponents keeps decade points exact.
    out[i] = scale == SweepScale::kLog
                 ? std::pow(10.0, std::log10(start) + (std::log10(stop) - std::log10(start)) * t)
                 : start + (stop - start) * t;
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

double SweepSpec::fixed_or(const std::string& name, double fallback) const {
  const auto it = fixed.find(name);
  return it == fixed.end() ? fallback : it->second;
}

const char* column_name(SweepVariable variable) {
  return variable == SweepVariable::kSignal ? "n_s" : "n_n";
}

}  // namespace qlimits::cli
