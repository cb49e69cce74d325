#pragma once

// Wire formats. Rationals travel as "p/q" strings (q omitted when 1), floats
// are rendered with 10 decimal places and reparsed so emitted JSON numbers
// round-trip bit-identically. All emitted collections are ordered, so equal
// inputs produce byte-identical output.

#include <string>

#include <json.hpp>

#include "filtration.hpp"
#include "flags.hpp"
#include "maps.hpp"
#include "testbed.hpp"

namespace kflag {

using Json = nlohmann::ordered_json;

double round10(double x);
Json float10(double x);

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

ToricPolarization polytope_from_json(const Json& j);
Json polytope_json(const ToricPolarization& x);

MonomialConfig config_from_json(const ToricPolarization& x, const Json& j);
Json config_json(const ToricPolarization& x, const MonomialConfig& c);

WeightedFlag flag_from_json(const Json& j);
Json flag_json(const WeightedFlag& f);

ApartmentPoint apartment_point_from_json(const Json& j);
Json apartment_point_json(const ApartmentPoint& p);

Subspace subspace_from_json(const Json& j);

QuadExt quadext_from_json(const Json& j);

FiltrationSpec filtration_from_json(const ToricPolarization& x, const Json& j);

Json cosine_json(const CosineTriple& t);
Json report_json(const InvariantReport& rep);
Json dinf_json(const DInfinityResult& d);

// Parses text, mapping any json exception to ParseError.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace kflag
