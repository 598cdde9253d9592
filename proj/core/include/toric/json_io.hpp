#pragma once

#include "toric/additive.hpp"
#include "toric/cox.hpp"
#include "toric/fan.hpp"
#include "toric/lp.hpp"
#include "toric/projectivity.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace toric {

// All serialization is canonical: object keys in fixed order, rationals as
// integers when possible and "p/q" strings otherwise, so equal values render
// to identical bytes.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);
Json int_to_json(const Int& z);
Int int_from_json(const Json& j);

Json int_mat_to_json(const IntMat& m);
IntMat int_mat_from_json(const Json& j, std::size_t expect_cols = 0);

Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j);

Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

Json system_to_json(const LinearSystem& s);
LinearSystem system_from_json(const Json& j);

Json certificate_to_json(const FarkasCertificate& c);
FarkasCertificate certificate_from_json(const Json& j);

Json point_to_json(const PointY& y);
PointY point_from_json(const Json& j);

Json chart_point_to_json(const ChartPoint& x);
ChartPoint chart_point_from_json(const Json& j);

Json validation_to_json(const ValidationReport& r);
Json quasitorus_to_json(const QuasitorusData& q);
Json star_fan_to_json(const StarFan& s);
Json verdict_to_json(const ProjectivityVerdict& v);
Json paper_certificate_to_json(const PaperCertificateReport& r);
Json orbit_report_to_json(const OrbitReport& r);
Json star_check_to_json(const StarCheckReport& r);

std::string orbit_report_text(const OrbitReport& r);

// Graphviz rendering of the orbit poset: nodes carry ray sets and orbit
// dimensions, edges are the covering relations (face to cone).
std::string orbit_poset_dot(const Fan& f);

}  // namespace toric
