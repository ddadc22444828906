#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "orbihall/numerics/clusters.hpp"
#include "orbihall/numerics/eigensolver.hpp"
#include "orbihall/numerics/lattice.hpp"

namespace orbihall::numerics {

/// A monomial unitary (U psi)(s) = exp(2 pi i phase[s] / modulus) psi(image[s]).
struct SiteUnitary {
  std::vector<int> image;
  std::vector<std::int64_t> phase;
  std::int64_t modulus = 1;
  /// U^2 = exp(2 pi i square_phase / modulus) I.
  std::int64_t square_phase = 0;

  int dimension() const { return static_cast<int>(image.size()); }
  void apply(const Block& X, Block& Y) const;
  std::complex<double> square_scalar() const { return phase_to_complex(square_phase, modulus); }
};

/// Lift of x -> -x (mod N) to the magnetic bundle. The gauge phase is solved
/// link by link from site 0, where it is fixed to 1. Throws SymmetryBroken if
/// some link contradicts the propagated phases, and NonInvolutive if U^2 is
/// not a scalar.
SiteUnitary inversion_unitary(const LatticeModel& M);

/// Frobenius norm of U H U^dagger - H, evaluated entry by entry.
double commutator_norm(const HermitianOperator& H, const SiteUnitary& U);

/// Dimensions of the +1 and -1 eigenspaces of U (rescaled so that U^2 = I)
/// restricted to the cluster's eigenvectors. Throws NonInvolutive when the
/// restricted operator is not an involution within `tol`.
std::pair<int, int> isotypic_multiplicities(const HermitianOperator& H, const SiteUnitary& U, const EigenPairs& eig,
                                            const LevelCluster& cluster, double tol = 1e-6);

}  // namespace orbihall::numerics
