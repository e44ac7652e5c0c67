#pragma once

// BPSK Hadamard words, the interferometric cascade that maps them onto
// single-slot pulses, and the joint-detection receivers built on it.

#include <cstdint>
#include <span>
#include <vector>

#include "qlimits/channel.hpp"

namespace qlimits {

/// Sign pattern of one BPSK word of length M = 2^m.
///
/// Index l in 1..M selects a Hadamard row: write l - 1 in binary as
/// b_{m-1}..b_0; bit i contributes a factor that alternates between 1 and
/// (-1)^{b_i} every 2^i slots. Index M + 1 is the all-minus word used by the
/// extended scheme.
class HadamardWord {
 public:
  HadamardWord(int order, int index, std::vector<int> signs);

  int order() const { return order_; }
  int index() const { return index_; }
  std::span<const int> signs() const { return signs_; }

  /// sqrt(ns) times the signs: the per-slot amplitudes of the word.
  std::vector<Amplitude> amplitudes(double ns) const;

 private:
  int order_;
  int index_;
  std::vector<int> signs_;
};

bool is_power_of_two(std::int64_t n);

/// Word l of order M. Throws std::invalid_argument unless M is a power of two
/// >= 2 and 1 <= l <= M + 1 (l = M + 1 is the all-minus word).
HadamardWord hadamard_word(int index, int order);

/// Cascade of time-domain interferometers. Stage s (s = 1..m) superposes
/// slots 2^{m-s} apart with weights +-1/sqrt(2): (a, b) -> ((a+b), (a-b))/sqrt(2).
/// The map is orthogonal, symmetric and its own inverse, and sends word l to
/// a pulse in slot l carrying the whole word energy.
std::vector<Amplitude> cascade_transform(std::span<const Amplitude> amplitudes);

/// Mutual information per slot of Hadamard words with the cascade and ideal
/// direct detection; equal to M-ary PPM at the same n_s.
double hadamard_ppm_mutual_information(int order, double ns);

/// Same quantity computed from first principles: every word is passed through
/// cascade_transform, each output slot is detected on/off with Poisson
/// statistics, and I(X;Y) is taken over all 2^M click patterns. Order is
/// limited to 16.
double hadamard_ppm_mutual_information_composed(int order, double ns);

/// The M+1-word scheme: ++..+ and --..- with probability p1/2 each, the other
/// M-1 Hadamard words with (1 - p1)/(M - 1) each.
class ExtendedSchemeParams {
 public:
  ExtendedSchemeParams(int order, double ns, double p1);

  int order() const { return order_; }
  double ns() const { return ns_; }
  double p1() const { return p1_; }

  /// Word probabilities in index order 1..M+1.
  std::vector<double> word_probabilities() const;

 private:
  int order_;
  double ns_;
  double p1_;
};

/// Mutual information per slot of the extended scheme. After the cascade the
/// receiver homodynes the I quadrature of slot 1 and performs ideal direct
/// detection on slots 2..M. Outcome: the quadrature value together with which
/// slot, if any, clicked. Only one slot can carry light for any word, so the
/// discrete outcome has M values.
double extended_scheme_mutual_information(const ExtendedSchemeParams& params);

struct SuperadditiveOptimum {
  double p1;
  double mutual_information;  // bits per slot
  double efficiency;          // bits per photon
};

/// Golden-section maximization of the extended scheme over p1 in [0, 1]
/// (tolerance 1e-6 in p1). The mutual information is concave in the input
/// distribution, hence in p1. Requires n_s > 0.
SuperadditiveOptimum optimize_p1(int order, double ns);

}  // namespace qlimits
