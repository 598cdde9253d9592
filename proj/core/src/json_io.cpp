#include "toric/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool fits_int64(const Int& z) {
  return z >= std::numeric_limits<std::int64_t>::min() &&
         z <= std::numeric_limits<std::int64_t>::max();
}

Json rat_vec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& q : v) out.push_back(rat_to_json(q));
  return out;
}

RatVec rat_vec_from_json(const Json& j) {
  require(j.is_array(), "expected an array of rationals");
  RatVec out;
  for (const Json& e : j) out.push_back(rat_from_json(e));
  return out;
}

Json int_vec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& z : v) out.push_back(int_to_json(z));
  return out;
}

IntVec int_vec_from_json(const Json& j) {
  require(j.is_array(), "expected an array of integers");
  IntVec out;
  for (const Json& e : j) out.push_back(int_from_json(e));
  return out;
}

Json index_vec_to_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i);
  return out;
}

std::vector<std::size_t> index_vec_from_json(const Json& j) {
  require(j.is_array(), "expected an array of indices");
  std::vector<std::size_t> out;
  for (const Json& e : j) {
    require(e.is_number_unsigned() || (e.is_number_integer() && e.get<std::int64_t>() >= 0),
            "expected a nonnegative index");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

}  // namespace

Json rat_to_json(const Rat& q) {
  if (denominator(q) == 1 && fits_int64(numerator(q)))
    return Json(numerator(q).convert_to<std::int64_t>());
  return Json(rat_to_string(q));
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

Json int_to_json(const Int& z) {
  if (fits_int64(z)) return Json(z.convert_to<std::int64_t>());
  return Json(z.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    Rat q = rat_from_string(j.get<std::string>());
    require(denominator(q) == 1, "expected an integer");
    return numerator(q);
  }
  throw std::invalid_argument("expected an integer");
}

Json int_mat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(int_vec_to_json(m.row(i)));
  return rows;
}

IntMat int_mat_from_json(const Json& j, std::size_t expect_cols) {
  require(j.is_array(), "expected a matrix (array of rows)");
  std::vector<IntVec> rows;
  for (const Json& r : j) rows.push_back(int_vec_from_json(r));
  if (rows.empty()) {
    require(expect_cols > 0, "cannot infer the width of an empty matrix");
    return IntMat(0, expect_cols);
  }
  return IntMat::from_rows(rows);
}

Json fan_to_json(const Fan& f) {
  Json j;
  j["rank"] = f.rank();
  Json rays = Json::array();
  for (const IntVec& r : f.rays()) rays.push_back(int_vec_to_json(r));
  j["rays"] = rays;
  Json cones = Json::array();
  for (const auto& c : f.max_cones()) cones.push_back(index_vec_to_json(c));
  j["max_cones"] = cones;
  return j;
}

Fan fan_from_json(const Json& j) {
  require(j.is_object() && j.contains("rank") && j.contains("rays") && j.contains("max_cones"),
          "fan JSON must have rank, rays and max_cones");
  std::size_t rank = j.at("rank").get<std::size_t>();
  std::vector<IntVec> rays;
  for (const Json& r : j.at("rays")) rays.push_back(int_vec_from_json(r));
  std::vector<std::vector<std::size_t>> cones;
  for (const Json& c : j.at("max_cones")) cones.push_back(index_vec_from_json(c));
  return Fan(rank, std::move(rays), std::move(cones));
}

Json polytope_to_json(const Polytope& p) {
  Json j;
  j["rank"] = p.rank;
  Json verts = Json::array();
  for (const IntVec& v : p.vertices) verts.push_back(int_vec_to_json(v));
  j["vertices"] = verts;
  return j;
}

Polytope polytope_from_json(const Json& j) {
  require(j.is_object() && j.contains("rank") && j.contains("vertices"),
          "polytope JSON must have rank and vertices");
  Polytope p;
  p.rank = j.at("rank").get<std::size_t>();
  for (const Json& v : j.at("vertices")) p.vertices.push_back(int_vec_from_json(v));
  return p;
}

namespace {

Json constraint_rows_to_json(const std::vector<std::pair<RatVec, Rat>>& rows) {
  Json out = Json::array();
  for (const auto& [coeffs, rhs] : rows) {
    Json row = Json::array();
    for (const Rat& c : coeffs) row.push_back(rat_to_json(c));
    row.push_back(rat_to_json(rhs));
    out.push_back(row);
  }
  return out;
}

std::vector<std::pair<RatVec, Rat>> constraint_rows_from_json(const Json& j, std::size_t vars) {
  require(j.is_array(), "expected an array of constraint rows");
  std::vector<std::pair<RatVec, Rat>> out;
  for (const Json& row : j) {
    require(row.is_array() && row.size() == vars + 1, "constraint row has the wrong width");
    RatVec coeffs;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) coeffs.push_back(rat_from_json(row[i]));
    out.emplace_back(std::move(coeffs), rat_from_json(row.back()));
  }
  return out;
}

}  // namespace

Json system_to_json(const LinearSystem& s) {
  Json j;
  j["vars"] = s.num_vars;
  j["eq"] = constraint_rows_to_json(s.equalities);
  j["ge"] = constraint_rows_to_json(s.inequalities);
  return j;
}

LinearSystem system_from_json(const Json& j) {
  require(j.is_object() && j.contains("vars") && j.contains("eq") && j.contains("ge"),
          "system JSON must have vars, eq and ge");
  LinearSystem s;
  s.num_vars = j.at("vars").get<std::size_t>();
  s.equalities = constraint_rows_from_json(j.at("eq"), s.num_vars);
  s.inequalities = constraint_rows_from_json(j.at("ge"), s.num_vars);
  return s;
}

Json certificate_to_json(const FarkasCertificate& c) {
  Json j;
  j["eq"] = rat_vec_to_json(c.eq_multipliers);
  j["ge"] = rat_vec_to_json(c.ineq_multipliers);
  return j;
}

FarkasCertificate certificate_from_json(const Json& j) {
  require(j.is_object() && j.contains("eq") && j.contains("ge"),
          "certificate JSON must have eq and ge");
  return {rat_vec_from_json(j.at("eq")), rat_vec_from_json(j.at("ge"))};
}

Json point_to_json(const PointY& y) {
  Json j;
  j["coords"] = rat_vec_to_json(y.coords);
  return j;
}

PointY point_from_json(const Json& j) {
  require(j.is_object() && j.contains("coords"), "point JSON must have coords");
  return {rat_vec_from_json(j.at("coords"))};
}

Json chart_point_to_json(const ChartPoint& x) {
  Json j;
  j["cone"] = index_vec_to_json(x.cone.ray_indices);
  j["coords"] = rat_vec_to_json(x.coords);
  return j;
}

ChartPoint chart_point_from_json(const Json& j) {
  require(j.is_object() && j.contains("cone") && j.contains("coords"),
          "chart point JSON must have cone and coords");
  return {ConeRef{index_vec_from_json(j.at("cone"))}, rat_vec_from_json(j.at("coords"))};
}

Json validation_to_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json entry;
    entry["cones"] = Json::array({v.cone_a, v.cone_b});
    entry["message"] = v.message;
    entry["overlap_point"] = v.overlap_point ? rat_vec_to_json(*v.overlap_point) : Json(nullptr);
    violations.push_back(entry);
  }
  j["violations"] = violations;
  return j;
}

Json quasitorus_to_json(const QuasitorusData& q) {
  Json j;
  j["relations"] = int_mat_to_json(q.relations);
  j["kernel_basis"] = int_mat_to_json(q.kernel_basis);
  Json factors = Json::array();
  for (const Int& d : q.invariant_factors) factors.push_back(int_to_json(d));
  j["invariant_factors"] = factors;
  return j;
}

Json star_fan_to_json(const StarFan& s) {
  Json j;
  j["fan"] = fan_to_json(s.fan);
  j["projection"] = int_mat_to_json(s.projection);
  j["source_rays"] = index_vec_to_json(s.source_rays);
  return j;
}

Json verdict_to_json(const ProjectivityVerdict& v) {
  Json j;
  j["projective"] = v.projective;
  if (v.support) {
    Json w = Json::array();
    for (const RatVec& u : v.support->cone_functionals) w.push_back(rat_vec_to_json(u));
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["certificate"] = v.certificate ? certificate_to_json(*v.certificate) : Json(nullptr);
  j["system"] = system_to_json(v.system);
  return j;
}

Json paper_certificate_to_json(const PaperCertificateReport& r) {
  Json j;
  j["n"] = r.n;
  j["ok"] = r.ok;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json e;
    e["i"] = s.i;
    e["prev"] = s.prev;
    e["identity_ok"] = s.identity_ok;
    e["triple_cone"] = s.triple_cone;
    e["neighbor_cone"] = s.neighbor_cone;
    e["expansion"] = rat_vec_to_json(s.expansion);
    e["negative_coefficient"] = rat_to_json(s.negative_coefficient);
    e["inequality"] = s.inequality;
    steps.push_back(e);
  }
  j["steps"] = steps;
  j["contradiction"] = r.contradiction;
  return j;
}

namespace {

Json cone_list_to_json(const std::vector<ConeRef>& cones) {
  Json out = Json::array();
  for (const auto& c : cones) out.push_back(index_vec_to_json(c.ray_indices));
  return out;
}

}  // namespace

Json orbit_report_to_json(const OrbitReport& r) {
  Json j;
  j["n"] = r.n;
  j["ok"] = r.ok;
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json e;
    e["ray_index"] = c.ray_index;
    e["ray_label"] = c.ray_label;
    e["star_class"] = c.star_class;
    comps.push_back(e);
  }
  j["components"] = comps;
  j["x0_pointwise_fixed"] = r.x0_pointwise_fixed;
  j["x0_samples"] = r.x0_samples;
  Json curves = Json::array();
  for (const auto& c : r.curves) {
    Json e;
    e["curve"] = "S_" + std::to_string(c.j) + std::to_string(c.k);
    e["cone"] = index_vec_to_json(c.cone.ray_indices);
    e["representative"] = point_to_json(c.representative);
    e["fixed_pointwise"] = c.fixed_pointwise;
    curves.push_back(e);
  }
  j["curves"] = curves;
  Json meets = Json::array();
  for (const auto& m : r.curve_intersections) {
    Json e;
    e["curves"] = Json::array({"S_" + std::to_string(m.j) + std::to_string(m.k1),
                               "S_" + std::to_string(m.j) + std::to_string(m.k2)});
    e["cones"] = cone_list_to_json(m.cones);
    e["point_count"] = m.point_count;
    e["representative"] = m.representative ? point_to_json(*m.representative) : Json(nullptr);
    meets.push_back(e);
  }
  j["curve_intersections"] = meets;
  j["curve_pair_points_distinct"] = r.curve_pair_points_distinct;
  j["pair_intersections_match"] = r.pair_intersections_match;
  j["triple_intersection_empty"] = r.triple_empty;
  Json triples = Json::array();
  for (const auto& t : r.x0_triples) {
    Json e;
    e["components"] = index_vec_to_json(t.components);
    e["cones"] = cone_list_to_json(t.cones);
    e["point_count"] = t.point_count;
    e["representative"] = t.representative ? point_to_json(*t.representative) : Json(nullptr);
    triples.push_back(e);
  }
  j["x0_triple_intersections"] = triples;
  j["triple_points_distinct"] = r.triple_points_distinct;
  return j;
}

Json star_check_to_json(const StarCheckReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["pairwise_isomorphic"] = r.pairwise_isomorphic;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json item;
    item["ray_index"] = e.ray_index;
    item["reference"] = e.reference;
    item["witness"] = e.witness.rows() > 0 ? int_mat_to_json(e.witness) : Json(nullptr);
    entries.push_back(item);
  }
  j["entries"] = entries;
  return j;
}

std::string orbit_report_text(const OrbitReport& r) {
  std::ostringstream out;
  out << "Orbit structure of the additive action, n = " << r.n << "\n";
  out << "Boundary components (" << r.components.size() << "):\n";
  for (const auto& c : r.components)
    out << "  X" << c.ray_index << " = V(" << c.ray_label << "), star fan: " << c.star_class
        << "\n";
  out << "X0 pointwise fixed: " << (r.x0_pointwise_fixed ? "yes" : "no") << " (" << r.x0_samples
      << " sampled points)\n";
  out << "Fixed curves:\n";
  for (const auto& c : r.curves)
    out << "  S_" << c.j << c.k << " = V(b" << c.cone.ray_indices[0] << ", b"
        << c.cone.ray_indices[1] << "), pointwise fixed: " << (c.fixed_pointwise ? "yes" : "no")
        << "\n";
  out << "Curve intersections:\n";
  for (const auto& m : r.curve_intersections)
    out << "  S_" << m.j << m.k1 << " with S_" << m.j << m.k2 << ": " << m.point_count
        << " point(s)\n";
  out << "Distinct meeting points on each component: "
      << (r.curve_pair_points_distinct ? "yes" : "no") << "\n";
  out << "X_j and X_l meet exactly in S_jl: " << (r.pair_intersections_match ? "yes" : "no")
      << "\n";
  out << "X1, X2, X3 have empty triple intersection: " << (r.triple_empty ? "yes" : "no") << "\n";
  out << "Triple points with X0:\n";
  for (const auto& t : r.x0_triples)
    out << "  X" << t.components[0] << " with X" << t.components[1] << " and X" << t.components[2]
        << ": " << t.point_count << " point(s)\n";
  out << "Triple points pairwise distinct: " << (r.triple_points_distinct ? "yes" : "no") << "\n";
  out << "Report verdict: " << (r.ok ? "consistent" : "INCONSISTENT") << "\n";
  return out.str();
}

std::string orbit_poset_dot(const Fan& f) {
  auto nodes = orbit_poset(f);
  std::ostringstream out;
  out << "digraph orbit_poset {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"{";
    for (std::size_t k = 0; k < nodes[i].cone.ray_indices.size(); ++k) {
      if (k) out << ",";
      out << nodes[i].cone.ray_indices[k];
    }
    out << "} dim O=" << nodes[i].orbit_dim << "\"];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t facet : nodes[i].covered) out << "  n" << facet << " -> n" << i << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace toric
