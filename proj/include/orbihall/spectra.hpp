#pragma once

/**
 * @file spectra.hpp
 * @brief Landau-level ladder of the magnetic Laplacian on an orbifold cover.
 *
 * Energies are exact integer coefficients of 2 pi / vol(X), with hbar^2/2m = 1,
 * and refer to the connection Laplacian alone. The constant curvature shift
 * R/6 is reported separately as its own coefficient of 2 pi / vol(X).
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "orbihall/covers.hpp"
#include "orbihall/orbifold.hpp"
#include "orbihall/rational.hpp"

namespace orbihall {

inline constexpr std::int64_t kDefaultFlatCap = 16;

struct SpectralLevel {
  std::int64_t level = 0;
  Rational energy_coeff;  // E_l * vol(X) / 2 pi
  double energy = 0.0;
  std::optional<std::int64_t> multiplicity;  // empty for levels outside the valid range
  bool valid = false;
};

struct SpectralLadder {
  GaloisCoverData cover;
  OrbifoldLineBundle bundle;
  std::int64_t deg_equivariant = 0;
  std::vector<SpectralLevel> levels;
  std::int64_t q_max = -1;
  bool capped = false;  // q_max came from the flat-cover cap
  std::vector<Rational> gaps;  // E_{l+1} - E_l for l < q_max, in units of 2 pi / vol(X)
  Rational curvature_shift_coeff;  // R/6 in units of 2 pi / vol(X)
};

struct SpectralBundleInvariants {
  std::int64_t rank = 0;
  Rational c1_coefficient;
  Rational conductance_prefactor;
};

/// (2l + 1) deg L~ - l(l + 1)(2 g_X - 2).
Rational landau_energy(const GaloisCoverData& C, std::int64_t deg_equivariant, std::int64_t level);

/// Real rendering of an energy coefficient: coeff * 2 pi / vol(X).
double energy_value(const GaloisCoverData& C, const Rational& coeff);

/// Largest q >= 0 with deg - q(2g_X - 2) > 2g_X - 2 and deg - (q + 1)(2g_X - 2) > 0.
/// Flat and spherical covers (g_X <= 1) return `cap` when q = 0 qualifies.
std::int64_t valid_q_max(std::int64_t deg_equivariant, std::int64_t cover_genus,
                         std::int64_t cap = kDefaultFlatCap);

/// M_q = 1 - g_Y + deg L_q; throws OutOfValidRange outside 0..q_max.
std::int64_t level_multiplicity(const OrbifoldLineBundle& L, const GaloisCoverData& C, std::int64_t q,
                                std::int64_t cap = kDefaultFlatCap);

/// Throws HypothesisViolated unless deg_orb(L) > -chi_orb(Y).
SpectralLadder spectral_ladder(const OrbifoldLineBundle& L, const GaloisCoverData& C,
                               std::int64_t cap = kDefaultFlatCap);

SpectralBundleInvariants spectral_bundle_invariants(const OrbifoldLineBundle& L, const GaloisCoverData& C);

}  // namespace orbihall
