#pragma once

// Canonical JSON forms. Objects use sorted keys and rationals use their
// canonical "p/q" strings, so equal values always serialize to equal bytes.

#include "latmin/gon.hpp"
#include "latmin/polytope.hpp"
#include "latmin/postulation.hpp"
#include "latmin/report.hpp"
#include "latmin/toric.hpp"

#include <json.hpp>

namespace latmin {

using Json = nlohmann::json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json int_to_json(const Int& v);
Json intvec_to_json(const IntVec& v);
Json ratvec_to_json(const RatVec& v);
IntVec intvec_from_json(const Json& j);

/// {"dim": d, "vertices": [["p/q", ...], ...]}
Json polytope_to_json(const Polytope& p);
/// Accepts rational strings or integers for coordinates; hulls the input.
Polytope polytope_from_json(const Json& j);

Json minima_to_json(const SuccessiveMinima& m);
Json width_to_json(const WidthResult& w);
Json report_to_json(const TheoremReport& r);
Json eps_to_json(const EpsProfile& eps);

BoxSpec box_from_json(const Json& j);
FlagSpec flag_from_json(const Json& j);

/// Parses text, mapping syntax errors to Error(ParseError).
Json parse_json(const std::string& text);

} // namespace latmin
