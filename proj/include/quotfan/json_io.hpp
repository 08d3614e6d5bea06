#pragma once

#include "quotfan/catalog.hpp"
#include "quotfan/mutations.hpp"

#include <json.hpp>

namespace quotfan {

using Json = nlohmann::json;

/// Exact integers/rationals as JSON: plain numbers when they fit in 64 bits,
/// decimal strings otherwise; rationals as "p/q" strings when not integral.
Json int_to_json(const Int& x);
Json rat_to_json(const Rat& q);
Int json_to_int(const Json& j, const std::string& field);
Rat json_to_rat(const Json& j, const std::string& field);

Json matrix_to_json(const IntMatrix& m);
IntMatrix json_to_matrix(const Json& j, const std::string& field);

Json vec_to_json(const IntVec& v);
Json ratvec_to_json(const RatVec& v);
RatVec json_to_ratvec(const Json& j, const std::string& field);

Json fan_to_json(const Fan& f);
Fan json_to_fan(const Json& j);

Json polytope_to_json(const Polytope& p, bool with_vertices = true);
Polytope json_to_polytope(const Json& j);

Json weight_system_to_json(const WeightSystem& ws);
WeightSystem json_to_weight_system(const Json& j);

Json chamber_complex_to_json(const ChamberComplex& cc);
Json fan_report_to_json(const FanReport& r);
Json relation_report_to_json(const RelationReport& r);

/// Parse "r1,r2,..." with entries "p" or "p/q".
RatVec parse_rational_vector(const std::string& s);

} // namespace quotfan
