#include "orbihall/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "orbihall/error.hpp"

namespace orbihall::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_error(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_error(where + ": missing key '" + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_error(where + ": expected an integer");
  return j.get<std::int64_t>();
}

double as_double(const Json& j, const std::string& where) {
  if (!j.is_number()) parse_error(where + ": expected a number");
  return j.get<double>();
}

bool as_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) parse_error(where + ": expected a boolean");
  return j.get<bool>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where + ": expected an array");
  return j;
}

int as_small_int(const Json& j, const std::string& where) {
  const std::int64_t v = as_int(j, where);
  if (v < INT32_MIN || v > INT32_MAX) parse_error(where + ": integer out of range");
  return static_cast<int>(v);
}

IntMatrix int_matrix(const Json& j, const std::string& where) {
  IntMatrix out;
  for (const Json& row : as_array(j, where)) {
    std::vector<std::int64_t> r;
    for (const Json& x : as_array(row, where)) r.push_back(as_int(x, where));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::int64_t> int_vector(const Json& j, const std::string& where) {
  std::vector<std::int64_t> out;
  for (const Json& x : as_array(j, where)) out.push_back(as_int(x, where));
  return out;
}

Json unit_value(const Rational& r, const char* unit) {
  Json j = Json::object();
  j["value"] = rational_to_json(r);
  j["unit"] = unit;
  return j;
}

}  // namespace

void require_keys_subset(const Json& obj, const std::vector<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) parse_error(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      parse_error(where + ": unknown key '" + key + "'");
    }
  }
}

Json rational_to_json(const Rational& r) {
  Json j = Json::object();
  j["num"] = r.num();
  j["den"] = r.den();
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  require_keys_subset(j, {"num", "den"}, "rational");
  const std::int64_t den = as_int(field(j, "den", "rational"), "rational.den");
  if (den == 0) parse_error("rational: zero denominator");
  return Rational(as_int(field(j, "num", "rational"), "rational.num"), den);
}

Json surface_to_json(const OrbifoldSurface& Y) {
  Json j = Json::object();
  j["genus"] = Y.genus();
  Json pts = Json::array();
  for (const MarkedPoint& p : Y.marked_points()) pts.push_back(Json{{"label", p.label}, {"m", p.m}});
  j["marked_points"] = std::move(pts);
  return j;
}

OrbifoldSurface surface_from_json(const Json& j) {
  require_keys_subset(j, {"genus", "marked_points"}, "surface");
  const int genus = as_small_int(field(j, "genus", "surface"), "surface.genus");
  std::vector<MarkedPoint> pts;
  for (const Json& p : as_array(field(j, "marked_points", "surface"), "surface.marked_points")) {
    require_keys_subset(p, {"label", "m"}, "marked point");
    const Json& label = field(p, "label", "marked point");
    if (!label.is_string()) parse_error("marked point: label must be a string");
    pts.push_back({label.get<std::string>(), as_small_int(field(p, "m", "marked point"), "marked point.m")});
  }
  return OrbifoldSurface(genus, std::move(pts));
}

Json bundle_to_json(const OrbifoldLineBundle& L) {
  Json j = Json::object();
  j["genus"] = L.base().genus();
  Json pts = Json::array();
  for (const Monodromy& mo : L.monodromies()) {
    pts.push_back(Json{{"label", mo.point->label}, {"m", mo.point->m}, {"d", mo.d}});
  }
  j["marked_points"] = std::move(pts);
  j["deg_smooth"] = L.deg_smooth();
  return j;
}

OrbifoldLineBundle bundle_from_json(const Json& j) {
  require_keys_subset(j, {"genus", "marked_points", "deg_smooth"}, "bundle");
  const int genus = as_small_int(field(j, "genus", "bundle"), "bundle.genus");
  std::vector<MarkedPoint> pts;
  std::vector<int> residues;
  for (const Json& p : as_array(field(j, "marked_points", "bundle"), "bundle.marked_points")) {
    require_keys_subset(p, {"label", "m", "d"}, "bundle marked point");
    const Json& label = field(p, "label", "bundle marked point");
    if (!label.is_string()) parse_error("bundle marked point: label must be a string");
    pts.push_back({label.get<std::string>(), as_small_int(field(p, "m", "bundle marked point"), "m")});
    residues.push_back(as_small_int(field(p, "d", "bundle marked point"), "d"));
  }
  const std::int64_t deg = as_int(field(j, "deg_smooth", "bundle"), "bundle.deg_smooth");
  return OrbifoldLineBundle(OrbifoldSurface(genus, std::move(pts)), deg, std::move(residues));
}

Json cover_to_json(const GaloisCoverData& C) {
  Json j = Json::object();
  j["base"] = surface_to_json(C.base());
  j["group_order"] = C.group_order();
  j["cover_volume"] = C.cover_volume();
  j["cyclic_quotient_free"] = C.cyclic_quotient_free();
  return j;
}

GaloisCoverData cover_from_json(const Json& j) {
  // derived keys are tolerated so that full reports re-load, but never read
  require_keys_subset(j, {"base", "group_order", "cover_volume", "cyclic_quotient_free", "cover_genus", "chi_cover",
                          "sheet_counts"},
                      "cover");
  const OrbifoldSurface Y = surface_from_json(field(j, "base", "cover"));
  const std::int64_t order = as_int(field(j, "group_order", "cover"), "cover.group_order");
  const double volume = as_double(field(j, "cover_volume", "cover"), "cover.cover_volume");
  const bool cqf = as_bool(field(j, "cyclic_quotient_free", "cover"), "cover.cyclic_quotient_free");
  return build_cover(Y, order, volume, cqf);
}

Json ladder_to_json(const SpectralLadder& ladder, const SpectralBundleInvariants& invariants) {
  Json levels = Json::array();
  for (const SpectralLevel& lv : ladder.levels) {
    Json e = Json::object();
    e["l"] = lv.level;
    e["energy_coeff"] = rational_to_json(lv.energy_coeff);
    e["energy"] = lv.energy;
    e["multiplicity"] = lv.multiplicity ? Json(*lv.multiplicity) : Json(nullptr);
    e["valid"] = lv.valid;
    levels.push_back(std::move(e));
  }
  Json gaps = Json::array();
  for (const Rational& g : ladder.gaps) gaps.push_back(rational_to_json(g));

  Json j = Json::object();
  j["levels"] = std::move(levels);
  j["q_max"] = ladder.q_max;
  j["q_max_capped"] = ladder.capped;
  j["c1_coefficient"] = rational_to_json(invariants.c1_coefficient);
  j["rank"] = invariants.rank;
  j["deg_equivariant"] = ladder.deg_equivariant;
  j["cover_genus"] = ladder.cover.cover_genus();
  j["gaps"] = std::move(gaps);
  j["curvature_shift_coeff"] = rational_to_json(ladder.curvature_shift_coeff);
  j["cyclic_quotient_free"] = ladder.cover.cyclic_quotient_free();
  j["energy_unit"] = "2*pi/vol(X)";
  return j;
}

SignConvention convention_from_string(const std::string& s) {
  if (s == "theorem") return SignConvention::theorem;
  if (s == "proof") return SignConvention::proof;
  throw Error(ErrorCode::InvalidInput, "convention must be 'theorem' or 'proof', got '" + s + "'");
}

std::string to_string(SignConvention c) { return c == SignConvention::theorem ? "theorem" : "proof"; }

TransportInput transport_from_json(const Json& j) {
  require_keys_subset(j, {"group_order", "intersection_matrix", "pushforward", "convention", "cycles"}, "transport");
  const std::int64_t order = as_int(field(j, "group_order", "transport"), "transport.group_order");
  TransportInput in{TransportSetup(order, int_matrix(field(j, "intersection_matrix", "transport"), "intersection_matrix"),
                                   int_matrix(field(j, "pushforward", "transport"), "pushforward")),
                    SignConvention::theorem,
                    {}};
  if (j.contains("convention")) {
    const Json& c = j.at("convention");
    if (!c.is_string()) parse_error("transport.convention: expected a string");
    in.convention = convention_from_string(c.get<std::string>());
  }
  if (j.contains("cycles")) {
    for (const Json& c : as_array(j.at("cycles"), "transport.cycles")) {
      require_keys_subset(c, {"beta", "delta"}, "cycle pair");
      in.cycles.emplace_back(int_vector(field(c, "beta", "cycle pair"), "beta"),
                             int_vector(field(c, "delta", "cycle pair"), "delta"));
    }
  }
  return in;
}

Json transport_to_json(const TransportInput& in, SignConvention convention) {
  const auto table = conductance_table(in.setup, convention);
  Json cond = Json::array();
  Json charge = Json::array();
  for (const auto& row : table) {
    Json crow = Json::array();
    Json qrow = Json::array();
    for (const TransportCoefficients& t : row) {
      crow.push_back(unit_value(t.conductance, "e^2/h"));
      qrow.push_back(unit_value(t.charge_transport, "e"));
    }
    cond.push_back(std::move(crow));
    charge.push_back(std::move(qrow));
  }
  Json pairs = Json::array();
  for (const auto& [beta, delta] : in.cycles) {
    const TransportCoefficients t = mean_transport(in.setup, beta, delta, convention);
    Json p = Json::object();
    p["beta"] = beta;
    p["delta"] = delta;
    p["pairing"] = intersection_pairing(in.setup, beta, delta);
    p["conductance"] = unit_value(t.conductance, "e^2/h");
    p["charge_transport"] = unit_value(t.charge_transport, "e");
    pairs.push_back(std::move(p));
  }
  Json j = Json::object();
  j["group_order"] = in.setup.group_order();
  j["convention"] = to_string(convention);
  j["conductance"] = std::move(cond);
  j["charge_transport"] = std::move(charge);
  j["pairs"] = std::move(pairs);
  return j;
}

Json validation_to_json(const numerics::ValidationReport& r) {
  Json clusters = Json::array();
  for (const auto& c : r.clusters) {
    clusters.push_back(Json{{"mean_energy", c.mean_energy}, {"degeneracy", c.degeneracy}, {"even", c.even}, {"odd", c.odd}});
  }
  Json predicted = Json::object();
  predicted["energies"] = r.predicted.energies;
  predicted["degeneracy"] = r.predicted.degeneracy;
  predicted["even"] = r.predicted.even;
  predicted["odd"] = r.predicted.odd;

  Json j = Json::object();
  j["N"] = r.N;
  j["flux_quanta"] = r.flux_quanta;
  j["clusters"] = std::move(clusters);
  j["predicted"] = std::move(predicted);
  j["relative_errors"] = r.relative_errors;
  j["commutator_norm"] = r.commutator_norm;
  j["eigensolver_iterations"] = r.eigensolver_iterations;
  j["degeneracies_match"] = r.degeneracies_match;
  j["isotypic_match"] = r.isotypic_match;
  j["pass"] = r.pass;
  return j;
}

void write_eigenvalues_csv(std::ostream& os, const std::vector<double>& values) {
  char buf[64];
  for (double v : values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    os << buf;
  }
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace orbihall::io
