#pragma once

#include <map>
#include <string>
#include <vector>

namespace qlimits::cli {

enum class SweepVariable { kSignal, kNoise };
enum class SweepScale { kLinear, kLog };

/// One-dimensional parameter sweep. `fixed` holds the values of parameters
/// that are not swept, keyed by column name ("n_s", "n_n").
struct SweepSpec {
  SweepVariable variable = SweepVariable::kSignal;
  SweepScale scale = SweepScale::kLog;
  double start = 0.0;
  double stop = 0.0;
  int points = 2;
  std::map<std::string, double> fixed;

  /// Throws std::invalid_argument unless start < stop, points >= 2, both ends
  /// are finite, and start > 0 for a log scale.
  void validate() const;

  /// Grid values in increasing order. Endpoints are reproduced exactly.
  std::vector<double> values() const;

  /// Fixed parameter, or `fallback` if absent.
  double fixed_or(const std::string& name, double fallback) const;
};

const char* column_name(SweepVariable variable);

}  // namespace qlimits::cli
