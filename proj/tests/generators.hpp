#pragma once

// Random orbifolds, covers and bundles for property tests.

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orbihall/covers.hpp"
#include "orbihall/orbifold.hpp"

namespace gen {

struct CoverSample {
  orbihall::OrbifoldSurface base;
  oracle::Signature signature;
  std::int64_t group_order = 1;
  std::int64_t cover_genus = 0;  // from the oracle
};

/// g <= max_genus, n <= max_points, 2 <= m_k <= max_m, |G| a multiple of
/// lcm(m_k) up to max_order, rejecting signatures with no cover of that order.
inline CoverSample cover(std::mt19937_64& rng, int max_genus = 5, int max_points = 6, int max_m = 12,
                         std::int64_t max_order = 360) {
  for (;;) {
    CoverSample s;
    s.signature.genus = static_cast<int>(rng() % static_cast<unsigned>(max_genus + 1));
    const int n = static_cast<int>(rng() % static_cast<unsigned>(max_points + 1));
    std::vector<orbihall::MarkedPoint> pts;
    std::int64_t lcm = 1;
    for (int k = 0; k < n; ++k) {
      const int m = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_m - 1));
      s.signature.m.push_back(m);
      pts.push_back({"x" + std::to_string(k), m});
      lcm = std::lcm(lcm, static_cast<std::int64_t>(m));
    }
    if (lcm > max_order) continue;
    s.group_order = lcm * (1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(max_order / lcm)));
    const auto g = oracle::hurwitz_genus(s.signature, s.group_order);
    if (!g) continue;
    s.cover_genus = *g;
    s.base = orbihall::OrbifoldSurface(s.signature.genus, std::move(pts));
    return s;
  }
}

/// Random canonical residues and a smooth degree in the vanishing range,
/// offset by up to `spread` above its minimum.
inline orbihall::OrbifoldLineBundle bundle_above_threshold(std::mt19937_64& rng, const orbihall::OrbifoldSurface& Y,
                                                           int spread = 20) {
  using orbihall::Rational;
  std::vector<int> d;
  Rational frac = 0;
  for (const auto& p : Y.marked_points()) {
    d.push_back(static_cast<int>(rng() % static_cast<unsigned>(p.m)));
    frac += Rational(d.back(), p.m);
  }
  const std::int64_t lowest = (-orbihall::chi_orb(Y) - frac).floor() + 1;
  return orbihall::OrbifoldLineBundle(Y, lowest + static_cast<std::int64_t>(rng() % static_cast<unsigned>(spread + 1)), d);
}

}  // namespace gen
