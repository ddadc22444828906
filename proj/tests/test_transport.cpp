#include <doctest.h>

#include <random>

#include "orbihall/error.hpp"
#include "orbihall/transport.hpp"

using namespace orbihall;

namespace {

IntMatrix standard_symplectic(int g) {
  IntMatrix J(static_cast<std::size_t>(2 * g), std::vector<std::int64_t>(static_cast<std::size_t>(2 * g), 0));
  for (int i = 0; i < g; ++i) {
    J[static_cast<std::size_t>(2 * i)][static_cast<std::size_t>(2 * i + 1)] = 1;
    J[static_cast<std::size_t>(2 * i + 1)][static_cast<std::size_t>(2 * i)] = -1;
  }
  return J;
}

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

TEST_CASE("unit pairing at |G| = 2 under both sign conventions") {
  const TransportSetup S(2, standard_symplectic(1), {{1, 0}, {0, 1}});
  const std::int64_t b[] = {1, 0};
  const std::int64_t d[] = {0, 1};
  CHECK(intersection_pairing(S, b, d) == 1);
  CHECK(mean_transport(S, b, d).conductance == Rational(-1, 2));
  CHECK(mean_transport(S, b, d, SignConvention::proof).conductance == Rational(1, 2));
  CHECK(mean_transport(S, b, d).charge_transport == Rational(-1, 2));
  const auto table = conductance_table(S);
  CHECK(table[0][1].conductance == Rational(-1, 2));
  CHECK(table[1][0].conductance == Rational(1, 2));
  CHECK(table[0][0].conductance == Rational(0));
}

TEST_CASE("setup validation") {
  CHECK(code_of([] { TransportSetup(2, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}, {{1}, {0}, {0}}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { TransportSetup(2, {{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { TransportSetup(2, {{0, 2}, {-2, 0}}, {{1, 0}, {0, 1}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { TransportSetup(2, {{0, 1}, {-1, 0}}, {{1, 0}, {0, 1}, {0, 0}}); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([] { TransportSetup(2, {{0, 1}, {-1, 0}}, {{1, 1}, {1, 1}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { TransportSetup(0, {{0, 1}, {-1, 0}}, {{1, 0}, {0, 1}}); }) == ErrorCode::InvalidInput);

  const TransportSetup S(3, standard_symplectic(1), {{1, 0}, {0, 1}});
  const std::int64_t b[] = {1, 0, 0};
  const std::int64_t d[] = {0, 1};
  CHECK(code_of([&] { intersection_pairing(S, b, d); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("setup checked against a cover") {
  const OrbifoldSurface Y(0, {{"p1", 2}, {"p2", 2}, {"p3", 2}, {"p4", 2}});
  const GaloisCoverData C = build_cover(Y, 2);
  // g_Y = 0: the pushforward has no columns, which the cover check enforces
  CHECK(code_of([&] { TransportSetup(C, standard_symplectic(1), {{1, 0}, {0, 1}}); }) ==
        ErrorCode::DimensionMismatch);
  const OrbifoldSurface T(1, {});
  const TransportSetup S(build_cover(T, 3), standard_symplectic(1), {{1, 0}, {0, 3}});
  CHECK(S.group_order() == 3);
  CHECK(S.base_rank() == 2);
}

TEST_CASE("integer determinant and rank") {
  CHECK(integer_determinant({{2, 1}, {7, 4}}) == 1);
  CHECK(integer_determinant({{0, 1, 0}, {-1, 0, 0}, {0, 0, 5}}) == 5);
  CHECK(integer_determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(integer_rank({{1, 2}, {2, 4}, {3, 6}}, 2) == 1);
  CHECK(integer_rank({{1, 0}, {0, 1}, {1, 1}}, 2) == 2);
}

TEST_CASE("random setups: integrality, antisymmetry and bilinearity") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> small(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int gX = 1 + static_cast<int>(rng() % 3);
    const int gY = 1 + static_cast<int>(rng() % static_cast<unsigned>(gX));
    const std::int64_t order = 1 + static_cast<std::int64_t>(rng() % 12);
    IntMatrix M(static_cast<std::size_t>(2 * gX), std::vector<std::int64_t>(static_cast<std::size_t>(2 * gY)));
    for (auto& row : M)
      for (auto& x : row) x = small(rng);
    if (integer_rank(M, 2 * gY) < 2 * gY) continue;
    const TransportSetup S(order, standard_symplectic(gX), M);
    std::vector<std::int64_t> a(static_cast<std::size_t>(2 * gY)), b(a.size()), c(a.size()), ab(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = small(rng);
      b[i] = small(rng);
      c[i] = small(rng);
      ab[i] = 2 * a[i] - 3 * b[i];
    }
    for (SignConvention conv : {SignConvention::theorem, SignConvention::proof}) {
      const Rational ac = mean_transport(S, a, c, conv).conductance;
      const Rational bc = mean_transport(S, b, c, conv).conductance;
      CHECK((ac * order).is_integer());
      CHECK(mean_transport(S, c, a, conv).conductance == -ac);
      CHECK(mean_transport(S, a, a, conv).conductance == Rational(0));
      CHECK(mean_transport(S, ab, c, conv).conductance == ac * 2 - bc * 3);
      CHECK(mean_transport(S, c, ab, conv).conductance == -(ac * 2 - bc * 3));
    }
    const Rational t = mean_transport(S, a, c, SignConvention::theorem).conductance;
    CHECK(mean_transport(S, a, c, SignConvention::proof).conductance == -t);
  }
}
