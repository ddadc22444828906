#include <doctest.h>

#include <sstream>

#include "orbihall/error.hpp"
#include "orbihall/json_io.hpp"

using namespace orbihall;
using io::Json;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

OrbifoldSurface pillow() { return OrbifoldSurface(0, {{"p1", 2}, {"p2", 2}, {"p3", 2}, {"p4", 2}}); }

}  // namespace

TEST_CASE("rationals") {
  CHECK(io::rational_to_json(Rational(-3, 6)).dump() == R"({"num":-1,"den":2})");
  CHECK(io::rational_from_json(Json::parse(R"({"num":4,"den":-6})")) == Rational(-2, 3));
  CHECK(io::rational_from_json(Json(5)) == Rational(5));
  CHECK(code_of([] { io::rational_from_json(Json::parse(R"({"num":1,"den":0})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::rational_from_json(Json::parse(R"({"num":1,"den":2,"x":0})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::rational_from_json(Json::parse(R"({"num":1.5,"den":2})")); }) == ErrorCode::ParseError);
}

TEST_CASE("surface and bundle round trips") {
  const OrbifoldSurface Y(1, {{"a", 3}, {"b", 7}});
  CHECK(io::surface_from_json(io::surface_to_json(Y)) == Y);
  const OrbifoldLineBundle L(Y, -4, {2, 5});
  const Json j = io::bundle_to_json(L);
  CHECK(j.dump() ==
        R"({"genus":1,"marked_points":[{"label":"a","m":3,"d":2},{"label":"b","m":7,"d":5}],"deg_smooth":-4})");
  CHECK(io::bundle_from_json(j) == L);
}

TEST_CASE("strict readers") {
  // d = m is not canonical and must be rejected rather than folded
  const Json bad_d = Json::parse(R"({"genus":0,"marked_points":[{"label":"a","m":2,"d":2}],"deg_smooth":0})");
  CHECK(code_of([&] { io::bundle_from_json(bad_d); }) == ErrorCode::InvalidInput);
  const Json extra = Json::parse(R"({"genus":0,"marked_points":[],"deg_smooth":0,"colour":"red"})");
  CHECK(code_of([&] { io::bundle_from_json(extra); }) == ErrorCode::ParseError);
  const Json missing = Json::parse(R"({"genus":0,"marked_points":[]})");
  CHECK(code_of([&] { io::bundle_from_json(missing); }) == ErrorCode::ParseError);
  const Json wrong_type = Json::parse(R"({"genus":"zero","marked_points":[]})");
  CHECK(code_of([&] { io::surface_from_json(wrong_type); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse("{\"genus\": "); }) == ErrorCode::ParseError);
}

TEST_CASE("cover derived fields are recomputed, never trusted") {
  const GaloisCoverData C = build_cover(OrbifoldSurface(0, {{"a", 2}, {"b", 3}, {"c", 7}}), 168, 2.5, false);
  Json j = io::cover_to_json(C);
  CHECK(j.dump() ==
        R"({"base":{"genus":0,"marked_points":[{"label":"a","m":2},{"label":"b","m":3},{"label":"c","m":7}]},"group_order":168,"cover_volume":2.5,"cyclic_quotient_free":false})");
  j["cover_genus"] = 99;
  j["sheet_counts"] = {1, 2, 3};
  const GaloisCoverData back = io::cover_from_json(j);
  CHECK(back.cover_genus() == 3);
  CHECK(back.sheet_counts() == std::vector<std::int64_t>{84, 56, 24});
  CHECK_FALSE(back.cyclic_quotient_free());
  j["group_order"] = 100;
  CHECK(code_of([&] { io::cover_from_json(j); }) == ErrorCode::IsotropyMismatch);
}

TEST_CASE("ladder report layout") {
  const GaloisCoverData C = build_cover(pillow(), 2, 4096.0);
  const OrbifoldLineBundle L(pillow(), 4, {0, 0, 0, 0});
  const Json j = io::ladder_to_json(spectral_ladder(L, C, 2), spectral_bundle_invariants(L, C));
  REQUIRE(j.at("levels").size() == 4);
  CHECK(j.at("levels")[0].at("l") == 0);
  CHECK(j.at("levels")[0].at("multiplicity") == 5);
  CHECK(j.at("levels")[0].at("energy_coeff").dump() == R"({"num":8,"den":1})");
  CHECK(j.at("levels")[3].at("multiplicity").is_null());
  CHECK(j.at("levels")[3].at("valid") == false);
  CHECK(j.at("q_max") == 2);
  CHECK(j.at("c1_coefficient").dump() == R"({"num":-1,"den":2})");
  CHECK(j.at("cyclic_quotient_free") == true);
  // doubles survive a text round trip exactly
  const double e0 = j.at("levels")[0].at("energy").get<double>();
  CHECK(Json::parse(j.dump()).at("levels")[0].at("energy").get<double>() == e0);
}

TEST_CASE("transport input and table") {
  const Json in = Json::parse(
      R"({"group_order":2,"intersection_matrix":[[0,1],[-1,0]],"pushforward":[[1,0],[0,1]],"convention":"proof",
          "cycles":[{"beta":[1,0],"delta":[0,1]}]})");
  const io::TransportInput t = io::transport_from_json(in);
  CHECK(t.convention == SignConvention::proof);
  const Json out = io::transport_to_json(t, SignConvention::theorem);
  CHECK(out.at("conductance")[0][1].dump() == R"({"value":{"num":-1,"den":2},"unit":"e^2/h"})");
  CHECK(out.at("pairs")[0].at("pairing") == 1);
  CHECK(out.at("convention") == "theorem");
  CHECK(code_of([] { io::convention_from_string("both"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("eigenvalue CSV keeps 17 significant digits") {
  std::ostringstream os;
  io::write_eigenvalues_csv(os, {0.1, 1.0 / 3.0});
  CHECK(os.str() == "0.10000000000000001\n0.33333333333333331\n");
}
