#pragma once

#include <cstdint>
#include <random>

namespace qlimits {

/// Caller-owned, seedable random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Every derived deviate is produced by a transform written here
/// (not by the <random> distributions, whose algorithms are
/// implementation-defined), so a seed reproduces the same draws on every
/// platform and standard library.
///
/// - uniform(): top 53 bits of one engine output, scaled to [0, 1).
/// - normal(): Box-Muller on two uniforms; the second deviate of each pair is
///   cached and returned by the next call.
/// - poisson(): sequential-search inversion for mean <= 30, Hoermann's PTRS
///   transformed rejection above.
///
/// One stream per thread; a stream is not safe for concurrent use.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double normal();
  std::uint64_t poisson(double mean);

 private:
  double uniform_open_zero();  // (0, 1]

  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace qlimits
