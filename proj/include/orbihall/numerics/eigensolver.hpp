#pragma once

#include <cstdint>
#include <vector>

#include "orbihall/numerics/kernels.hpp"
#include "orbihall/numerics/lattice.hpp"

namespace orbihall::numerics {

struct EigensolverOptions {
  int max_iterations = 400;
  int filter_degree = 40;
  /// Problems of at most this dimension are diagonalized densely.
  int dense_threshold = 1024;
  /// Subspace size; 0 picks max(2k, k + 16).
  int block_size = 0;
  Execution exec = Execution::parallel;
  std::uint64_t seed = 0x0b1fa11ULL;
};

struct EigenPairs {
  std::vector<double> values;  // ascending
  Block vectors;               // one orthonormal column per value
  std::vector<double> residuals;
  int iterations = 0;
  bool dense = false;
};

/// The k smallest eigenpairs of H with ||H v - lambda v|| <= tol ||v||.
///
/// Large problems use Chebyshev-filtered subspace iteration with a
/// Rayleigh-Ritz step per sweep; the filter damps [largest Ritz value,
/// Gershgorin bound] and amplifies everything below. Throws
/// ConvergenceFailure, with the worst residual in the detail, when the
/// target is not met within max_iterations.
EigenPairs spectrum_lowest(const HermitianOperator& H, int k, double tol = 1e-10,
                           const EigensolverOptions& options = {});

/// Full dense diagonalization, used by small problems and by tests.
EigenPairs dense_spectrum(const HermitianOperator& H);

}  // namespace orbihall::numerics
