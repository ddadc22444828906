#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "orbihall/orbifold.hpp"
#include "orbihall/rational.hpp"

namespace orbihall {

/// A Galois cover X -> Y^orb = X/G, recorded through its numerical data only.
/// Derived fields are always recomputed from (base, group_order).
class GaloisCoverData {
 public:
  GaloisCoverData() = default;

  const OrbifoldSurface& base() const noexcept { return base_; }
  std::int64_t group_order() const noexcept { return group_order_; }
  std::int64_t cover_genus() const noexcept { return cover_genus_; }
  std::int64_t chi_cover() const noexcept { return 2 - 2 * cover_genus_; }
  const std::vector<std::int64_t>& sheet_counts() const noexcept { return sheet_counts_; }
  double cover_volume() const noexcept { return cover_volume_; }
  /// Asserted by the caller, never verified.
  bool cyclic_quotient_free() const noexcept { return cyclic_quotient_free_; }

  friend GaloisCoverData build_cover(const OrbifoldSurface& Y, std::int64_t group_order, double cover_volume,
                                     bool cyclic_quotient_free);

 private:
  OrbifoldSurface base_;
  std::int64_t group_order_ = 1;
  std::int64_t cover_genus_ = 0;
  std::vector<std::int64_t> sheet_counts_;
  double cover_volume_ = 1.0;
  bool cyclic_quotient_free_ = true;
};

/// Throws IsotropyMismatch / NonIntegralCover as chi_cover does, and
/// InvalidInput for a non-positive volume.
GaloisCoverData build_cover(const OrbifoldSurface& Y, std::int64_t group_order, double cover_volume = 1.0,
                            bool cyclic_quotient_free = true);

/// deg L~ = |G| deg_orb(L) of the G-equivariant bundle on X.
std::int64_t equivariant_degree(const OrbifoldLineBundle& L, const GaloisCoverData& C);

// ---------------------------------------------------------------------------
// Elliptic curves C/(n Z + tau Z) with points at rational lattice coordinates.

struct EllipticLattice {
  std::int64_t n = 1;  // real period
  std::complex<double> tau{0.0, 1.0};

  friend bool operator==(const EllipticLattice&, const EllipticLattice&) = default;
};

/// The point re + im_tau * tau, stored reduced: re in [0, n), im_tau in [0, 1).
class EllipticPoint {
 public:
  EllipticPoint() = default;
  /// Throws InvalidInput unless Im(tau) > 0 and n >= 1.
  EllipticPoint(Rational re, Rational tau_coeff, EllipticLattice lattice);

  const Rational& re() const noexcept { return re_; }
  const Rational& tau_coeff() const noexcept { return tau_coeff_; }
  const EllipticLattice& lattice() const noexcept { return lattice_; }
  std::complex<double> value() const;

  EllipticPoint operator+(const EllipticPoint& rhs) const;
  EllipticPoint scaled(std::int64_t k) const;

  friend bool operator==(const EllipticPoint&, const EllipticPoint&) = default;

 private:
  Rational re_;
  Rational tau_coeff_;
  EllipticLattice lattice_;
};

/// A divisor sum_k c_k y_k on an elliptic curve.
struct EllipticDivisor {
  std::vector<std::pair<std::int64_t, EllipticPoint>> terms;

  std::int64_t degree() const;
  /// Abel-Jacobi image: sum c_k y_k reduced modulo the lattice.
  EllipticPoint abel_jacobi(const EllipticLattice& lattice) const;
};

/// Pullback of a divisor along p : C/(nZ + tau Z) -> C/(Z + tau Z), each
/// point y having preimages y, y + 1, ..., y + n - 1.
EllipticDivisor pullback_divisor(const EllipticDivisor& D, std::int64_t n);

/// Class in J(X) of the pullback of the degree-zero class a + (l/n) tau on Y,
/// computed from the explicit divisor (a + (l/n) tau) - 0.
EllipticPoint elliptic_pullback_class(const EllipticPoint& a, std::int64_t n, std::int64_t l);

}  // namespace orbihall
