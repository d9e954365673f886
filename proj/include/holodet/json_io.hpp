#pragma once

#include <json.hpp>

#include "holodet/guess.hpp"
#include "holodet/verify.hpp"

namespace holodet {

using nlohmann::json;

// Polynomials serialize as ascending coefficient arrays of "p/q" strings
// (mu^2+3mu+2 <-> ["2","3","1"]); rational functions as {"num":..., "den":...}.
json to_json(const MuPoly& p);
MuPoly mu_poly_from_json(const json& j);

json to_json(const MuRat& r);
MuRat mu_rat_from_json(const json& j);

// Nested coefficient arrays, outermost variable first, mu innermost.
json to_json(const MultiPoly& p);
MultiPoly multi_poly_from_json(const json& j, int nvars);

// {"vars":["n","j"],"terms":[{"shift":[1,2],"coeff":...}]}
json to_json(const Recurrence& r);
Recurrence recurrence_from_json(const json& j);

// Data files: {"points": {"n,j": <MuRat>, ...}} or a flat map "n,j" -> MuRat.
json to_json(const DataMap& d);
DataMap data_map_from_json(const json& j);

json to_json(const VerificationReport& r);

json to_json(const AnsatzSpec& a);
AnsatzSpec ansatz_from_json(const json& j);

}  // namespace holodet
