#pragma once

/**
 * @file orbifold.hpp
 * @brief Orbifold Riemann surfaces, orbifold line bundles and fractional divisors.
 *
 * An orbifold line bundle is stored as the degree of its associated smooth
 * bundle plus one monodromy residue per marked point. Residues live in the
 * canonical range [0, m); anything outside that range is folded back with
 * carries into the smooth degree by OrbifoldLineBundle::normalized.
 */

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbihall/rational.hpp"

namespace orbihall {

struct MarkedPoint {
  std::string label;
  int m = 2;  // isotropy order, >= 2

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

class OrbifoldSurface {
 public:
  OrbifoldSurface() = default;
  /// Throws InvalidInput on negative genus, m < 2 or duplicate labels.
  OrbifoldSurface(int genus, std::vector<MarkedPoint> marked_points);

  int genus() const noexcept { return genus_; }
  const std::vector<MarkedPoint>& marked_points() const noexcept { return points_; }
  int num_marked() const noexcept { return static_cast<int>(points_.size()); }

  /// lcm of all isotropy orders (1 for a smooth surface).
  std::int64_t isotropy_lcm() const;

  friend bool operator==(const OrbifoldSurface&, const OrbifoldSurface&) = default;

 private:
  int genus_ = 0;
  std::vector<MarkedPoint> points_;
};

struct Monodromy {
  const MarkedPoint* point = nullptr;
  int d = 0;
};

class OrbifoldLineBundle {
 public:
  OrbifoldLineBundle() = default;
  /// Residues must satisfy 0 <= d_k < m_k; throws InvalidInput otherwise.
  OrbifoldLineBundle(OrbifoldSurface base, std::int64_t deg_smooth, std::vector<int> residues);

  /// Accepts arbitrary integer residues and folds them into [0, m) with
  /// carries, e.g. the d = m convention maps to d = 0 and deg_smooth + 1.
  static OrbifoldLineBundle normalized(OrbifoldSurface base, std::int64_t deg_smooth,
                                       std::span<const std::int64_t> residues);

  /// Builds the bundle of the given orbifold degree; throws NonIntegralDegree
  /// if deg_orb - sum d_k/m_k is not an integer.
  static OrbifoldLineBundle from_orbifold_degree(OrbifoldSurface base, const Rational& deg_orb,
                                                 std::vector<int> residues);

  static OrbifoldLineBundle trivial(OrbifoldSurface base);

  const OrbifoldSurface& base() const noexcept { return base_; }
  std::int64_t deg_smooth() const noexcept { return deg_smooth_; }
  const std::vector<int>& residues() const noexcept { return residues_; }
  std::vector<Monodromy> monodromies() const;

  friend bool operator==(const OrbifoldLineBundle&, const OrbifoldLineBundle&) = default;

 private:
  OrbifoldSurface base_;
  std::int64_t deg_smooth_ = 0;
  std::vector<int> residues_;
};

/// Integral part plus rational coefficients at marked points, kept sorted by label.
class FractionalDivisor {
 public:
  struct Term {
    std::string label;
    int m = 2;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  FractionalDivisor() = default;
  /// Throws InvalidInput if a coefficient's denominator does not divide m.
  FractionalDivisor(std::int64_t integral_degree, std::vector<Term> terms);

  static FractionalDivisor of_bundle(const OrbifoldLineBundle& L);
  /// Canonical divisor of the orbifold: K_Y[p_1 + ... + p_n] (x) prod L_{p_k}^{-1}.
  static FractionalDivisor canonical(const OrbifoldSurface& Y);

  std::int64_t integral_degree() const noexcept { return integral_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Rational degree() const;

  /// Moves integer parts of every coefficient into the integral part, leaving
  /// fractional parts in [0, 1).
  FractionalDivisor normalized() const;
  /// Requires a normalized divisor on the given base.
  OrbifoldLineBundle to_bundle(const OrbifoldSurface& base) const;

  FractionalDivisor operator+(const FractionalDivisor& rhs) const;
  FractionalDivisor scaled(std::int64_t k) const;

  friend bool operator==(const FractionalDivisor&, const FractionalDivisor&) = default;

 private:
  std::int64_t integral_ = 0;
  std::vector<Term> terms_;
};

// Euler characteristics and degrees.

Rational chi_orb(const OrbifoldSurface& Y);

struct CoverEuler {
  std::int64_t chi_cover;  // |G| * chi_orb
  std::int64_t cover_genus;
};

/// chi(X) = |G| chi_orb(Y). Throws IsotropyMismatch if some m_k does not
/// divide |G| and NonIntegralCover if the result is not an even integer <= 2.
CoverEuler chi_cover(const OrbifoldSurface& Y, std::int64_t group_order);

Rational deg_canonical_orb(const OrbifoldSurface& Y);

Rational deg_orb(const OrbifoldLineBundle& L);
std::int64_t smooth_degree(const OrbifoldLineBundle& L);

/// Monodromies add with carry into the smooth degree.
OrbifoldLineBundle tensor(const OrbifoldLineBundle& a, const OrbifoldLineBundle& b);
OrbifoldLineBundle dual(const OrbifoldLineBundle& L);
OrbifoldLineBundle power(const OrbifoldLineBundle& L, std::int64_t k);

OrbifoldLineBundle canonical_bundle(const OrbifoldSurface& Y);

/// L (x) K^{-q}, computed by repeated carry arithmetic.
OrbifoldLineBundle twist_by_canonical(const OrbifoldLineBundle& L, std::int64_t q);

/// deg L_q = deg L - q(2g-2) - qn + sum floor((d_k+q)/m_k).
std::int64_t deg_Lq(const OrbifoldLineBundle& L, std::int64_t q);

/// Holomorphic Euler characteristic 1 - g + deg L of the associated smooth bundle.
std::int64_t riemann_roch_orb(const OrbifoldLineBundle& L);

/// True when deg_orb(L) > -chi_orb(Y), the range in which h^1 vanishes and
/// riemann_roch_orb counts holomorphic sections.
bool h1_vanishes(const OrbifoldLineBundle& L);

}  // namespace orbihall
