#include <doctest.h>

#include "oracles.hpp"
#include "orbihall/error.hpp"
#include "orbihall/orbifold.hpp"

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

}  // namespace

TEST_CASE("surface construction validates its data") {
  CHECK(code_of([] { OrbifoldSurface(-1, {}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { OrbifoldSurface(0, {{"a", 1}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { OrbifoldSurface(0, {{"a", 2}, {"a", 3}}); }) == ErrorCode::InvalidInput);
  CHECK(OrbifoldSurface(0, {{"a", 4}, {"b", 6}}).isotropy_lcm() == 12);
  CHECK(OrbifoldSurface(2, {}).isotropy_lcm() == 1);
}

TEST_CASE("orbifold Euler characteristic") {
  CHECK(chi_orb(OrbifoldSurface(0, {{"a", 2}, {"b", 3}, {"c", 7}})) == Rational(-1, 42));
  CHECK(chi_orb(pillow()) == Rational(0));
  CHECK(chi_orb(OrbifoldSurface(2, {})) == Rational(-2));
  CHECK(deg_canonical_orb(OrbifoldSurface(0, {{"a", 2}, {"b", 3}, {"c", 7}})) == Rational(1, 42));
}

TEST_CASE("cover Euler characteristic and its failure modes") {
  const OrbifoldSurface hurwitz(0, {{"a", 2}, {"b", 3}, {"c", 7}});
  const CoverEuler e = chi_cover(hurwitz, 168);
  CHECK(e.chi_cover == -4);
  CHECK(e.cover_genus == 3);
  CHECK(code_of([&] { chi_cover(hurwitz, 12); }) == ErrorCode::IsotropyMismatch);
  CHECK(chi_cover(hurwitz, 84).cover_genus == 2);
  // three order-2 points on a sphere: 2 * (2 - 3 + 3/2) = 1 is odd
  CHECK(code_of([] { chi_cover(OrbifoldSurface(0, {{"a", 2}, {"b", 2}, {"c", 2}}), 2); }) ==
        ErrorCode::NonIntegralCover);
  // a bare sphere under |G| = 2 would give chi = 4
  CHECK(code_of([] { chi_cover(OrbifoldSurface(0, {}), 2); }) == ErrorCode::NonIntegralCover);
  CHECK(chi_cover(pillow(), 2).cover_genus == 1);
}

TEST_CASE("bundle residues must be canonical") {
  CHECK(code_of([] { OrbifoldLineBundle(pillow(), 0, {2, 0, 0, 0}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { OrbifoldLineBundle(pillow(), 0, {-1, 0, 0, 0}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { OrbifoldLineBundle(pillow(), 0, {0, 0, 0}); }) == ErrorCode::InvalidInput);
  const std::int64_t raw[] = {2, 0, 3, -1};
  const OrbifoldLineBundle n = OrbifoldLineBundle::normalized(pillow(), 0, raw);
  CHECK(n.deg_smooth() == 1);  // +1 +1 -1
  CHECK(n.residues() == std::vector<int>{0, 0, 1, 1});
  CHECK(deg_orb(n) == Rational(2));
}

TEST_CASE("orbifold degree of pillowcase bundles") {
  CHECK(deg_orb(OrbifoldLineBundle(pillow(), 4, {0, 0, 0, 0})) == Rational(4));
  CHECK(deg_orb(OrbifoldLineBundle(pillow(), 2, {1, 1, 1, 1})) == Rational(4));
  CHECK(smooth_degree(OrbifoldLineBundle(pillow(), 2, {1, 1, 1, 1})) == 2);
}

TEST_CASE("from_orbifold_degree inverts deg_orb and rejects non-integral smooth parts") {
  const OrbifoldLineBundle L = OrbifoldLineBundle::from_orbifold_degree(pillow(), Rational(7, 2), {1, 0, 0, 0});
  CHECK(L.deg_smooth() == 3);
  CHECK(code_of([] { OrbifoldLineBundle::from_orbifold_degree(pillow(), Rational(7, 2), {0, 0, 0, 0}); }) ==
        ErrorCode::NonIntegralDegree);
}

TEST_CASE("canonical bundle has residues m - 1 and degree -chi_orb") {
  const OrbifoldSurface Y(1, {{"a", 3}, {"b", 5}});
  const OrbifoldLineBundle K = canonical_bundle(Y);
  CHECK(K.deg_smooth() == 0);
  CHECK(K.residues() == std::vector<int>{2, 4});
  CHECK(deg_orb(K) == -chi_orb(Y));
  CHECK(deg_orb(K) == deg_canonical_orb(Y));
  CHECK(FractionalDivisor::canonical(Y).degree() == deg_orb(K));
  CHECK(FractionalDivisor::canonical(Y).normalized().to_bundle(Y) == K);
}

TEST_CASE("tensor, dual and power form a group") {
  const OrbifoldSurface Y(2, {{"a", 3}, {"b", 4}});
  const OrbifoldLineBundle A(Y, 1, {2, 3});
  const OrbifoldLineBundle B(Y, -2, {2, 1});
  const OrbifoldLineBundle AB = tensor(A, B);
  CHECK(AB.residues() == std::vector<int>{1, 0});
  CHECK(AB.deg_smooth() == 1 - 2 + 1 + 1);
  CHECK(deg_orb(AB) == deg_orb(A) + deg_orb(B));
  CHECK(tensor(A, dual(A)) == OrbifoldLineBundle::trivial(Y));
  CHECK(power(A, 3) == tensor(A, tensor(A, A)));
  CHECK(power(A, -2) == dual(tensor(A, A)));
  CHECK(power(A, 0) == OrbifoldLineBundle::trivial(Y));
  CHECK(deg_orb(power(A, 12)) == deg_orb(A) * 12);
}

TEST_CASE("twist by the canonical bundle: three routes agree") {
  const OrbifoldSurface Y(1, {{"a", 3}, {"b", 5}, {"c", 2}});
  const oracle::Signature sig{1, {3, 5, 2}};
  const OrbifoldLineBundle L(Y, 6, {1, 4, 0});
  for (std::int64_t q = 0; q <= 12; ++q) {
    const OrbifoldLineBundle Lq = twist_by_canonical(L, q);
    CHECK(deg_Lq(L, q) == smooth_degree(Lq));
    CHECK(deg_Lq(L, q) == oracle::twisted_degree_stepwise(sig, 6, {1, 4, 0}, q));
    const FractionalDivisor D = (FractionalDivisor::of_bundle(L) + FractionalDivisor::canonical(Y).scaled(-q)).normalized();
    CHECK(D.to_bundle(Y) == Lq);
    CHECK(deg_orb(Lq) == deg_orb(L) - deg_canonical_orb(Y) * q);
  }
}

TEST_CASE("Riemann-Roch and the vanishing range") {
  const OrbifoldLineBundle even(pillow(), 4, {0, 0, 0, 0});
  const OrbifoldLineBundle odd(pillow(), 2, {1, 1, 1, 1});
  CHECK(riemann_roch_orb(even) == 5);
  CHECK(riemann_roch_orb(odd) == 3);
  CHECK(h1_vanishes(even));
  CHECK(h1_vanishes(OrbifoldLineBundle(pillow(), 0, {1, 0, 0, 0})));
  CHECK_FALSE(h1_vanishes(OrbifoldLineBundle::trivial(pillow())));
  const OrbifoldSurface Y(2, {});
  CHECK_FALSE(h1_vanishes(OrbifoldLineBundle(Y, 2, {})));  // boundary: deg = 2g - 2
  CHECK(h1_vanishes(OrbifoldLineBundle(Y, 3, {})));
}

TEST_CASE("fractional divisors") {
  CHECK_THROWS_AS(FractionalDivisor(0, {{"a", 4, Rational(1, 3)}}), Error);
  const FractionalDivisor D(1, {{"b", 3, Rational(5, 3)}, {"a", 2, Rational(-1, 2)}});
  CHECK(D.terms().front().label == "a");
  CHECK(D.degree() == Rational(1) + Rational(5, 3) - Rational(1, 2));
  const FractionalDivisor N = D.normalized();
  CHECK(N.integral_degree() == 1 + 1 - 1);
  CHECK(N.terms()[0].coefficient == Rational(1, 2));
  CHECK(N.terms()[1].coefficient == Rational(2, 3));
  CHECK(N.degree() == D.degree());
}
