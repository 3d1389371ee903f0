#pragma once

#include <string>

#include <json.hpp>

#include "qcalc/spectral.hpp"
#include "qcalc/stem_function.hpp"

namespace qcalc {

using Json = nlohmann::json;

// [w, x, y, z]
Json to_json(const Quaternion& q);
// [re.w, re.x, re.y, re.z, im.w, im.x, im.y, im.z]
Json to_json(const Biquaternion& a);
// [re, im]
Json to_json(Complex c);
// {"s_plus": [re, im], "s_minus": [re, im], "is_real": bool}
Json to_json(const Spectrum& s);
// {"pieces": [{"disk": {"center": [re, im], "radius": r}}, {"rect": {...}}]}
Json to_json(const PlaneDomain& d);
// Throws InvalidArgument for closure-backed specs.
Json to_json(const StemFunction& f);

// The parsers throw Error(Errc::ParseError) on malformed input.
Quaternion quaternion_from_json(const Json& j);
// Accepts 8 reals, or 4 reals for an element of H.
Biquaternion biquaternion_from_json(const Json& j);
Complex complex_from_json(const Json& j);
PlaneDomain domain_from_json(const Json& j);
StemFunction stem_function_from_json(const Json& j);

StemFunction load_stem_function(const std::string& path);

}  // namespace qcalc
