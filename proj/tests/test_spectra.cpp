#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "orbihall/error.hpp"
#include "orbihall/spectra.hpp"

using namespace orbihall;

namespace {

OrbifoldSurface pillow() { return OrbifoldSurface(0, {{"p1", 2}, {"p2", 2}, {"p3", 2}, {"p4", 2}}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

// Largest q passing both strict inequalities, by linear search.
std::int64_t q_max_by_search(std::int64_t deg, std::int64_t gX) {
  const std::int64_t k = 2 * gX - 2;
  std::int64_t q = -1;
  while (deg - (q + 1) * k > k && deg - (q + 2) * k > 0) ++q;
  return q;
}

}  // namespace

TEST_CASE("pillowcase bundles") {
  const GaloisCoverData C = build_cover(pillow(), 2);
  const OrbifoldLineBundle even(pillow(), 4, {0, 0, 0, 0});
  const SpectralBundleInvariants inv = spectral_bundle_invariants(even, C);
  CHECK(inv.rank == 5);
  CHECK(inv.c1_coefficient == Rational(-1, 2));
  CHECK(level_multiplicity(even, C, 0) == 5);

  const OrbifoldLineBundle odd(pillow(), 2, {1, 1, 1, 1});
  CHECK(level_multiplicity(odd, C, 0) == 3);
  CHECK(spectral_bundle_invariants(odd, C).rank == 3);
  // both lift to the same degree-8 bundle on the torus
  CHECK(equivariant_degree(even, C) == 8);
  CHECK(equivariant_degree(odd, C) == 8);
  // the isotypic halves fill the torus level: M_even + M_odd = 8
  for (std::int64_t q = 0; q < 6; ++q) {
    CHECK(level_multiplicity(even, C, q) + level_multiplicity(odd, C, q) == 8);
  }
  CHECK(level_multiplicity(even, C, 1) == 3);
  CHECK(level_multiplicity(odd, C, 1) == 5);
}

TEST_CASE("landau energies on a flat cover are odd multiples of the degree") {
  const GaloisCoverData C = build_cover(pillow(), 2, 4096.0);
  const SpectralLadder ladder = spectral_ladder(OrbifoldLineBundle(pillow(), 4, {0, 0, 0, 0}), C);
  CHECK(ladder.capped);
  CHECK(ladder.q_max == kDefaultFlatCap);
  CHECK(ladder.levels.size() == static_cast<std::size_t>(kDefaultFlatCap + 2));
  CHECK_FALSE(ladder.levels.back().valid);
  CHECK_FALSE(ladder.levels.back().multiplicity.has_value());
  for (std::int64_t l = 0; l <= ladder.q_max; ++l) {
    CHECK(ladder.levels[static_cast<std::size_t>(l)].energy_coeff == Rational((2 * l + 1) * 8));
    CHECK(ladder.levels[static_cast<std::size_t>(l)].valid);
  }
  CHECK(ladder.levels[0].energy == doctest::Approx(2 * std::numbers::pi * 8 / 4096).epsilon(1e-15));
  CHECK(ladder.curvature_shift_coeff == Rational(0));
  CHECK(spectral_ladder(OrbifoldLineBundle(pillow(), 4, {0, 0, 0, 0}), C, 3).q_max == 3);
}

TEST_CASE("hypothesis and range violations") {
  const GaloisCoverData C = build_cover(pillow(), 2);
  CHECK(code_of([&] { spectral_ladder(OrbifoldLineBundle::trivial(pillow()), C); }) == ErrorCode::HypothesisViolated);
  CHECK(code_of([&] { level_multiplicity(OrbifoldLineBundle(pillow(), 4, {0, 0, 0, 0}), C, 17); }) ==
        ErrorCode::OutOfValidRange);
  CHECK(code_of([&] { level_multiplicity(OrbifoldLineBundle(pillow(), 4, {0, 0, 0, 0}), C, -1); }) ==
        ErrorCode::OutOfValidRange);

  const OrbifoldSurface Y(2, {});
  const GaloisCoverData S = build_cover(Y, 1);
  // deg = 2g - 2 sits exactly on the boundary and is invalid
  CHECK(code_of([&] { spectral_ladder(OrbifoldLineBundle(Y, 2, {}), S); }) == ErrorCode::HypothesisViolated);
  CHECK(spectral_ladder(OrbifoldLineBundle(Y, 3, {}), S).q_max == 0);
  CHECK(code_of([&] { level_multiplicity(OrbifoldLineBundle(Y, 3, {}), S, 1); }) == ErrorCode::OutOfValidRange);
}

TEST_CASE("valid_q_max agrees with a linear search, strict boundaries included") {
  for (std::int64_t gX = 2; gX <= 7; ++gX) {
    for (std::int64_t deg = -5; deg <= 120; ++deg) {
      CHECK(valid_q_max(deg, gX) == q_max_by_search(deg, gX));
    }
  }
  CHECK(valid_q_max(5, 1) == kDefaultFlatCap);
  CHECK(valid_q_max(0, 1) == -1);
  CHECK(valid_q_max(-1, 0, 4) == 4);
  CHECK(valid_q_max(-2, 0, 4) == -1);
  // g_X = 2, deg = 6: q = 0 (6 > 2, 4 > 0), q = 1 (4 > 2, 2 > 0), q = 2 fails (2 > 2)
  CHECK(valid_q_max(6, 2) == 1);
}

TEST_CASE("genus-2 smooth cover ladder") {
  const OrbifoldSurface Y(2, {});
  const GaloisCoverData C = build_cover(Y, 1, 10.0);
  const OrbifoldLineBundle L(Y, 9, {});
  const SpectralLadder ladder = spectral_ladder(L, C);
  CHECK_FALSE(ladder.capped);
  CHECK(ladder.q_max == 3);  // 9 - 2q > 2 and 9 - 2(q+1) > 0
  CHECK(ladder.levels[0].energy_coeff == Rational(9));
  CHECK(ladder.levels[1].energy_coeff == Rational(27 - 4));
  CHECK(ladder.gaps[0] == Rational(2 * (9 - 2)));
  CHECK(*ladder.levels[0].multiplicity == 1 - 2 + 9);
  CHECK(*ladder.levels[1].multiplicity == 1 - 2 + 7);
  CHECK(ladder.curvature_shift_coeff == Rational(-2, 3));
  // level 4: 9 - 4 * 2 = 1 > 0 still has an energy but no certified multiplicity
  CHECK(ladder.levels.size() == 5);
  CHECK_FALSE(ladder.levels[4].valid);
  CHECK(ladder.levels[4].energy_coeff == landau_energy(C, 9, 4));
}

TEST_CASE("ladder invariants on random hyperbolic covers") {
  std::mt19937_64 rng(29);
  int built = 0;
  while (built < 200) {
    const int g = static_cast<int>(rng() % 3);
    const int n = static_cast<int>(rng() % 5);
    std::vector<MarkedPoint> pts;
    std::int64_t lcm = 1;
    for (int k = 0; k < n; ++k) {
      const int m = 2 + static_cast<int>(rng() % 6);
      pts.push_back({"q" + std::to_string(k), m});
      lcm = lcm_checked(lcm, m);
    }
    const OrbifoldSurface Y(g, pts);
    const std::int64_t order = lcm * (1 + static_cast<std::int64_t>(rng() % 4));
    GaloisCoverData C;
    try {
      C = build_cover(Y, order);
    } catch (const Error&) {
      continue;
    }
    if (C.cover_genus() < 2) continue;
    std::vector<int> d;
    for (const auto& p : pts) d.push_back(static_cast<int>(rng() % static_cast<unsigned>(p.m)));
    const OrbifoldLineBundle L(Y, static_cast<std::int64_t>(rng() % 40) - 5, d);
    if (!h1_vanishes(L)) {
      CHECK_THROWS_AS(spectral_ladder(L, C), Error);
      continue;
    }
    ++built;
    const SpectralLadder ladder = spectral_ladder(L, C);
    const std::int64_t deg = ladder.deg_equivariant;
    const std::int64_t k = 2 * C.cover_genus() - 2;
    CHECK(ladder.levels[0].energy_coeff == Rational(deg));
    Rational telescoped = deg;
    for (std::int64_t l = 0; l <= ladder.q_max; ++l) {
      const auto& lv = ladder.levels[static_cast<std::size_t>(l)];
      if (l > 0) telescoped += Rational(2 * (deg - l * k));
      CHECK(lv.energy_coeff == telescoped);
      CHECK(*lv.multiplicity == riemann_roch_orb(twist_by_canonical(L, l)));
      if (l < ladder.q_max) {
        const Rational gap = ladder.levels[static_cast<std::size_t>(l + 1)].energy_coeff - lv.energy_coeff;
        CHECK(gap == Rational(2 * (deg - (l + 1) * k)));
        CHECK(gap == ladder.gaps[static_cast<std::size_t>(l)]);
        CHECK(gap > Rational(0));
      }
    }
    CHECK(spectral_bundle_invariants(L, C).rank == level_multiplicity(L, C, 0));
  }
}
