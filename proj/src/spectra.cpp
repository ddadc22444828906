#include "orbihall/spectra.hpp"

#include <numbers>
#include <stdexcept>

#include "orbihall/error.hpp"

namespace orbihall {

namespace {

void require_hypothesis(const OrbifoldLineBundle& L) {
  if (!h1_vanishes(L)) {
    throw Error(ErrorCode::HypothesisViolated, "deg_orb = " + deg_orb(L).str() + " does not exceed -chi_orb = " +
                                                   (-chi_orb(L.base())).str());
  }
}

}  // namespace

Rational landau_energy(const GaloisCoverData& C, std::int64_t deg_equivariant, std::int64_t level) {
  if (level < 0) throw Error(ErrorCode::InvalidInput, "level index must be >= 0");
  std::int64_t k = 2 * C.cover_genus() - 2;
  std::int64_t e = checked_mul(2 * level + 1, deg_equivariant);
  e = checked_add(e, -checked_mul(checked_mul(level, level + 1), k));
  return e;
}

double energy_value(const GaloisCoverData& C, const Rational& coeff) {
  return coeff.to_double() * 2.0 * std::numbers::pi / C.cover_volume();
}

std::int64_t valid_q_max(std::int64_t deg_equivariant, std::int64_t cover_genus, std::int64_t cap) {
  const std::int64_t k = 2 * cover_genus - 2;
  auto valid = [&](std::int64_t q) { return deg_equivariant - q * k > k && deg_equivariant - (q + 1) * k > 0; };
  if (!valid(0)) return -1;
  if (k <= 0) return cap;
  // both conditions are linear and decreasing in q, so solve directly
  std::int64_t q1 = floor_div(deg_equivariant - k - 1, k);  // deg - qk >= k + 1
  std::int64_t q2 = floor_div(deg_equivariant - 1, k) - 1;  // deg - (q+1)k >= 1
  return std::min(q1, q2);
}

std::int64_t level_multiplicity(const OrbifoldLineBundle& L, const GaloisCoverData& C, std::int64_t q,
                                std::int64_t cap) {
  std::int64_t qmax = valid_q_max(equivariant_degree(L, C), C.cover_genus(), cap);
  if (q < 0 || q > qmax) {
    throw Error(ErrorCode::OutOfValidRange,
                "level " + std::to_string(q) + " outside the valid range 0.." + std::to_string(qmax));
  }
  return checked_add(1 - static_cast<std::int64_t>(L.base().genus()), deg_Lq(L, q));
}

SpectralLadder spectral_ladder(const OrbifoldLineBundle& L, const GaloisCoverData& C, std::int64_t cap) {
  require_hypothesis(L);
  SpectralLadder ladder;
  ladder.cover = C;
  ladder.bundle = L;
  ladder.deg_equivariant = equivariant_degree(L, C);
  ladder.q_max = valid_q_max(ladder.deg_equivariant, C.cover_genus(), cap);
  ladder.capped = C.cover_genus() <= 1;
  // R = 4 pi chi(X) / vol(X) for a constant-curvature metric
  ladder.curvature_shift_coeff = Rational(C.chi_cover(), 3);

  for (std::int64_t l = 0; l <= ladder.q_max; ++l) {
    SpectralLevel lvl;
    lvl.level = l;
    lvl.energy_coeff = landau_energy(C, ladder.deg_equivariant, l);
    lvl.energy = energy_value(C, lvl.energy_coeff);
    lvl.multiplicity = level_multiplicity(L, C, l, cap);
    lvl.valid = true;
    ladder.levels.push_back(lvl);
  }
  for (std::size_t i = 0; i + 1 < ladder.levels.size(); ++i) {
    Rational gap = ladder.levels[i + 1].energy_coeff - ladder.levels[i].energy_coeff;
    if (gap <= Rational(0)) throw std::logic_error("Landau ladder is not strictly increasing");
    ladder.gaps.push_back(gap);
  }

  // The first level past q_max still has an energy whenever deg(L~ (x) K^{-l}) > 0,
  // but its multiplicity is not covered by Riemann-Roch.
  const std::int64_t next = ladder.q_max + 1;
  if (ladder.deg_equivariant - next * (2 * C.cover_genus() - 2) > 0) {
    SpectralLevel lvl;
    lvl.level = next;
    lvl.energy_coeff = landau_energy(C, ladder.deg_equivariant, next);
    lvl.energy = energy_value(C, lvl.energy_coeff);
    lvl.valid = false;
    ladder.levels.push_back(lvl);
  }
  return ladder;
}

SpectralBundleInvariants spectral_bundle_invariants(const OrbifoldLineBundle& L, const GaloisCoverData& C) {
  if (!(L.base() == C.base())) throw Error(ErrorCode::BaseMismatch, "bundle and cover live on different orbifolds");
  require_hypothesis(L);
  SpectralBundleInvariants inv;
  inv.rank = checked_add(1 - static_cast<std::int64_t>(L.base().genus()), smooth_degree(L));
  inv.c1_coefficient = Rational(-1, C.group_order());
  inv.conductance_prefactor = Rational(-1, C.group_order());
  return inv;
}

}  // namespace orbihall
