#pragma once

// Monte Carlo estimate of the Lyapunov exponents of the zero-holonomy cocycle
// along random continued-fraction paths (the only floating-point module).

#include <array>
#include <cstdint>
#include <vector>

#include "origami/monodromy.hpp"

namespace origami {

struct LyapunovOptions {
  std::size_t iterations = 32768;  // continued-fraction digits per trial
  std::size_t trials = 32;
  std::uint64_t seed = 0x5eed2024ULL;
  unsigned digit_cap = 100;
  unsigned reorthonormalize_every = 16;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool inverse_transpose_check = true;
};

struct LyapunovEstimate {
  /// top g-1 exponents of the restricted cocycle, descending, normalized so the
  /// tautological top exponent is 1
  std::vector<double> exponents;
  std::vector<double> standard_errors;
  /// all 2g-2 normalized exponents (trial means)
  std::vector<double> spectrum;
  /// top g-1 exponents of the inverse-transpose cocycle on the same paths
  std::vector<double> inverse_transpose_exponents;
  /// {top, bottom} of the tautological block after normalization: {1, -1}
  std::array<double, 2> tautological_exponents{0.0, 0.0};
  /// |sum of the spectrum|, zero for a volume-preserving cocycle
  double volume_residual = 0.0;
  std::size_t iterations = 0;  // per trial
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  unsigned digit_cap = 0;
  std::size_t total_digit_steps() const { return iterations * trials; }
};

/// Throws DomainError for zero trials or fewer than 1000 iterations.
LyapunovEstimate estimate_exponents(const MonodromyPair& mp, const LyapunovOptions& options = {});

/// Generic form: restricted generators with their tautological 2x2 blocks.
LyapunovEstimate estimate_exponents(const IntMatrix& restricted_T, const IntMatrix& restricted_S,
                                    const IntMatrix& tautological_T, const IntMatrix& tautological_S,
                                    const LyapunovOptions& options = {});

/// splitmix64 step; per-trial seeds are splitmix64 outputs of the master seed.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace origami
