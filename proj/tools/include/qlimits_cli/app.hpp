#pragma once

#include <iosfwd>

namespace qlimits::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;

/// Full command-line entry point with injectable streams. Results go to `out`
/// (or to --out FILE), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlimits::cli
