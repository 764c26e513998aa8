#pragma once

#include <string>
#include <vector>

#include "git1/chambers.hpp"
#include "git1/curve.hpp"
#include "git1/function_field.hpp"
#include "git1/smyth.hpp"
#include "git1/stability.hpp"
#include "json.hpp"

namespace git1 {

using Json = nlohmann::ordered_json;

// Parses text, throwing git1::Error(Parse) on malformed JSON.
Json parse_json(const std::string& text);

// Curve format:
// {"n": 3, "core": {"kind": "ngon", "m": 2}, "core_marks": [[1], [2]],
//  "tails": [{"anchor": {"kind": "smooth", "component": 0},
//             "components": [[3]], "joints": [{"base": "anchor", "attached": [0]}]}]}
// Anchor kinds: "smooth", "singular", "node". Validated on the way in.
Curve curve_from_json(const Json& j, bool allow_unmarked = false);
Json curve_to_json(const Curve& c);

// {"a": ["1/2", ...]}, a bare array of rational strings, or "1/2,1/2".
RatVec chi_from_json(const Json& j);
Json rational_array(const RatVec& v);

// Curve fields plus "positions" and "scalings" ({mark: "p/q"}) and, when
// tails exist, "anchor_positions" (one "p/q" per tail).
CoordinatizedCurve coordinatized_from_json(const Json& j);
Json coordinatized_to_json(const CoordinatizedCurve& cc);

Json verdict_to_json(const StabilityVerdict& v, const RatVec& chi);
Json polytope_to_json(const HPolytope& p, const OmegaSets& omega);
Json inclusion_to_json(const InclusionReport& r);
Json window_to_json(const ChiWindow& w, bool common_chi);
Json atlas_to_json(const AtlasReport& r);
Json identity_run_to_json(const IdentityRun& r);

}  // namespace git1
