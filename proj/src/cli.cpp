#include "orbihall/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "orbihall/covers.hpp"
#include "orbihall/error.hpp"
#include "orbihall/json_io.hpp"
#include "orbihall/numerics/validate.hpp"
#include "orbihall/orbifold.hpp"
#include "orbihall/spectra.hpp"
#include "orbihall/transport.hpp"

namespace orbihall::cli {

namespace {

using io::Json;

struct Output {
  Json report;
  std::optional<std::string> csv;  // validate only
};

std::int64_t parse_int_option(const std::string& key, const std::string& value) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::InvalidInput, "option --" + key + " expects an integer, got '" + value + "'");
  }
  return v;
}

std::vector<std::string> allowed_options(Command c) {
  switch (c) {
    case Command::spectrum: return {"seed", "cap"};
    case Command::transport: return {"seed", "convention"};
    case Command::validate: return {"seed", "csv"};
    default: return {"seed"};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json info(const Json& in) {
  const bool is_cover = in.is_object() && in.contains("base");
  const GaloisCoverData cover = is_cover ? io::cover_from_json(in) : GaloisCoverData{};
  const OrbifoldSurface Y = is_cover ? cover.base() : io::surface_from_json(in);

  Json j = Json::object();
  j["surface"] = io::surface_to_json(Y);
  j["chi_orb"] = io::rational_to_json(chi_orb(Y));
  j["deg_canonical_orb"] = io::rational_to_json(deg_canonical_orb(Y));
  j["isotropy_lcm"] = Y.isotropy_lcm();
  if (is_cover) {
    Json c = io::cover_to_json(cover);
    c["cover_genus"] = cover.cover_genus();
    c["chi_cover"] = cover.chi_cover();
    c["sheet_counts"] = cover.sheet_counts();
    j["cover"] = std::move(c);
  }
  return j;
}

Json riemann_roch(const Json& in) {
  io::require_keys_subset(in, {"bundle", "twists"}, "riemann-roch input");
  if (!in.contains("bundle")) throw Error(ErrorCode::ParseError, "riemann-roch input: missing key 'bundle'");
  const OrbifoldLineBundle L = io::bundle_from_json(in.at("bundle"));
  std::int64_t twists = 0;
  if (in.contains("twists")) {
    if (!in.at("twists").is_number_integer()) throw Error(ErrorCode::ParseError, "twists: expected an integer");
    twists = in.at("twists").get<std::int64_t>();
    if (twists < 0) throw Error(ErrorCode::InvalidInput, "twists must be non-negative");
  }
  Json rows = Json::array();
  for (std::int64_t q = 0; q <= twists; ++q) {
    const OrbifoldLineBundle Lq = twist_by_canonical(L, q);
    Json r = Json::object();
    r["q"] = q;
    r["bundle"] = io::bundle_to_json(Lq);
    r["deg_orb"] = io::rational_to_json(deg_orb(Lq));
    r["deg_smooth"] = deg_Lq(L, q);
    r["euler_characteristic"] = riemann_roch_orb(Lq);
    r["h1_vanishes"] = h1_vanishes(Lq);
    rows.push_back(std::move(r));
  }
  Json j = Json::object();
  j["bundle"] = io::bundle_to_json(L);
  j["chi_orb"] = io::rational_to_json(chi_orb(L.base()));
  j["twists"] = std::move(rows);
  return j;
}

Json spectrum(const Json& in, std::int64_t cap) {
  io::require_keys_subset(in, {"cover", "bundle"}, "spectrum input");
  if (!in.contains("cover") || !in.contains("bundle")) {
    throw Error(ErrorCode::ParseError, "spectrum input: needs 'cover' and 'bundle'");
  }
  const GaloisCoverData C = io::cover_from_json(in.at("cover"));
  const OrbifoldLineBundle L = io::bundle_from_json(in.at("bundle"));
  const SpectralLadder ladder = spectral_ladder(L, C, cap);
  return io::ladder_to_json(ladder, spectral_bundle_invariants(L, C));
}

Json transport(const Json& in, const std::optional<std::string>& convention_flag) {
  const io::TransportInput t = io::transport_from_json(in);
  const SignConvention c = convention_flag ? io::convention_from_string(*convention_flag) : t.convention;
  return io::transport_to_json(t, c);
}

Output validate(const Json& in, bool want_csv) {
  io::require_keys_subset(in, {"N", "flux_quanta"}, "validate input");
  if (!in.contains("N") || !in.contains("flux_quanta") || !in.at("N").is_number_integer() ||
      !in.at("flux_quanta").is_number_integer()) {
    throw Error(ErrorCode::ParseError, "validate input: needs integer 'N' and 'flux_quanta'");
  }
  const std::int64_t N = in.at("N").get<std::int64_t>();
  if (N < 4 || N > 4096) throw Error(ErrorCode::InvalidInput, "N must lie in [4, 4096]");
  const auto report = numerics::validate_pillowcase(static_cast<int>(N), in.at("flux_quanta").get<std::int64_t>());
  Output o{io::validation_to_json(report), std::nullopt};
  if (want_csv) {
    std::ostringstream ss;
    io::write_eigenvalues_csv(ss, report.eigenvalues);
    o.csv = ss.str();
  }
  return o;
}

Json pullback_demo(const Json& in) {
  io::require_keys_subset(in, {"n", "point", "tau"}, "pullback-demo input");
  if (!in.contains("n") || !in.at("n").is_number_integer() || !in.contains("point")) {
    throw Error(ErrorCode::ParseError, "pullback-demo input: needs integer 'n' and 'point'");
  }
  const std::int64_t n = in.at("n").get<std::int64_t>();
  const Json& pt = in.at("point");
  io::require_keys_subset(pt, {"re", "tau_coeff"}, "point");
  if (!pt.contains("re") || !pt.contains("tau_coeff")) throw Error(ErrorCode::ParseError, "point: needs 're' and 'tau_coeff'");
  EllipticLattice base{1, {0.0, 1.0}};
  if (in.contains("tau")) {
    const Json& t = in.at("tau");
    io::require_keys_subset(t, {"re", "im"}, "tau");
    if (!t.contains("re") || !t.contains("im") || !t.at("re").is_number() || !t.at("im").is_number()) {
      throw Error(ErrorCode::ParseError, "tau: needs numeric 're' and 'im'");
    }
    base.tau = {t.at("re").get<double>(), t.at("im").get<double>()};
  }
  const EllipticPoint a(io::rational_from_json(pt.at("re")), io::rational_from_json(pt.at("tau_coeff")), base);
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be positive");

  Json classes = Json::array();
  bool agree = true;
  const EllipticPoint first = elliptic_pullback_class(a, n, 0);
  for (std::int64_t l = 0; l < n; ++l) {
    const EllipticPoint cls = elliptic_pullback_class(a, n, l);
    agree = agree && cls == first;
    classes.push_back(Json{{"l", l},
                           {"re", io::rational_to_json(cls.re())},
                           {"tau_coeff", io::rational_to_json(cls.tau_coeff())}});
  }
  Json j = Json::object();
  j["n"] = n;
  j["point"] = Json{{"re", io::rational_to_json(a.re())}, {"tau_coeff", io::rational_to_json(a.tau_coeff())}};
  j["classes"] = std::move(classes);
  // n distinct classes on Y collapse to one on X
  j["classes_agree"] = agree;
  j["pullback_injective"] = !(agree && n > 1);
  return j;
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::AmbiguousClustering:
    case ErrorCode::SymmetryBroken:
    case ErrorCode::NonInvolutive:
      return kNumerical;
    case ErrorCode::HypothesisViolated:
    case ErrorCode::OutOfValidRange:
      return kHypothesis;
    default:
      return kInvalid;
  }
}

void report_error(std::ostream& err, std::string_view code, const std::string& detail) {
  Json j = Json::object();
  j["error"] = code;
  j["detail"] = detail;
  err << j.dump() << '\n';
}

}  // namespace

Command command_from_string(const std::string& name) {
  for (Command c : {Command::info, Command::riemann_roch, Command::spectrum, Command::transport, Command::validate,
                    Command::pullback_demo}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::InvalidInput, "unknown command '" + name + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::info: return "info";
    case Command::riemann_roch: return "riemann-roch";
    case Command::spectrum: return "spectrum";
    case Command::transport: return "transport";
    case Command::validate: return "validate";
    case Command::pullback_demo: return "pullback-demo";
  }
  return "info";
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    const auto allowed = allowed_options(job.command);
    for (const auto& [key, value] : job.options) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw Error(ErrorCode::InvalidInput, "option '" + key + "' is not accepted by " + to_string(job.command));
      }
    }
    if (job.options.contains("seed")) {
      parse_int_option("seed", job.options.at("seed"));
      err << "warning: --seed is ignored; all computations are deterministic\n";
    }

    const Json in = io::parse(read_file(job.input_path));
    Output o;
    switch (job.command) {
      case Command::info: o.report = info(in); break;
      case Command::riemann_roch: o.report = riemann_roch(in); break;
      case Command::spectrum: {
        const std::int64_t cap =
            job.options.contains("cap") ? parse_int_option("cap", job.options.at("cap")) : kDefaultFlatCap;
        if (cap < 0) throw Error(ErrorCode::InvalidInput, "--cap must be non-negative");
        o.report = spectrum(in, cap);
        break;
      }
      case Command::transport: {
        std::optional<std::string> conv;
        if (job.options.contains("convention")) conv = job.options.at("convention");
        o.report = transport(in, conv);
        break;
      }
      case Command::validate: o = validate(in, job.options.contains("csv")); break;
      case Command::pullback_demo: o.report = pullback_demo(in); break;
    }

    const std::string text = o.report.dump(2) + "\n";
    if (job.output_path) {
      std::ofstream f(*job.output_path, std::ios::binary);
      if (!f) throw Error(ErrorCode::InvalidInput, "cannot open output file '" + *job.output_path + "'");
      f << text;
    } else {
      out << text;
    }
    if (o.csv) {
      std::ofstream f(job.options.at("csv"), std::ios::binary);
      if (!f) throw Error(ErrorCode::InvalidInput, "cannot open csv file '" + job.options.at("csv") + "'");
      f << *o.csv;
    }
    if (job.command == Command::validate && !o.report.at("pass").get<bool>()) {
      report_error(err, "ValidationFailed", "lattice spectrum disagrees with the analytic prediction");
      return kNumerical;
    }
    return kSuccess;
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.detail());
    return exit_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    report_error(err, "ParseError", e.what());
    return kInvalid;
  } catch (const std::exception& e) {
    report_error(err, "InvalidInput", e.what());
    return kInvalid;
  }
}

}  // namespace orbihall::cli
