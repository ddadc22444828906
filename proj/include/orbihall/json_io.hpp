#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of the library types.
 *
 * Readers are strict: a missing key, a wrong type or an unexpected key raises
 * ErrorCode::ParseError. Writers use insertion-ordered objects, so output is
 * byte-stable for identical inputs.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbihall/covers.hpp"
#include "orbihall/numerics/validate.hpp"
#include "orbihall/orbifold.hpp"
#include "orbihall/rational.hpp"
#include "orbihall/spectra.hpp"
#include "orbihall/transport.hpp"

namespace orbihall::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError unless every key of `obj` is listed in `allowed`.
void require_keys_subset(const Json& obj, const std::vector<std::string>& allowed, const std::string& where);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json surface_to_json(const OrbifoldSurface& Y);
OrbifoldSurface surface_from_json(const Json& j);

Json bundle_to_json(const OrbifoldLineBundle& L);
OrbifoldLineBundle bundle_from_json(const Json& j);

/// Only the primary fields; derived data is recomputed by cover_from_json.
Json cover_to_json(const GaloisCoverData& C);
GaloisCoverData cover_from_json(const Json& j);

Json ladder_to_json(const SpectralLadder& ladder, const SpectralBundleInvariants& invariants);

struct TransportInput {
  TransportSetup setup;
  SignConvention convention = SignConvention::theorem;
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> cycles;
};
TransportInput transport_from_json(const Json& j);
Json transport_to_json(const TransportInput& in, SignConvention convention);
SignConvention convention_from_string(const std::string& s);
std::string to_string(SignConvention c);

Json validation_to_json(const numerics::ValidationReport& report);

/// One eigenvalue per line, 17 significant digits.
void write_eigenvalues_csv(std::ostream& os, const std::vector<double>& values);

/// Parses text into JSON, mapping syntax errors to ParseError.
Json parse(const std::string& text);

}  // namespace orbihall::io
