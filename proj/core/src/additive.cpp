#include "toric/additive.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace toric {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<IntVec> paper_rays(std::size_t n) {
  std::vector<IntVec> rays;
  IntVec b0(n, Int(-1));
  rays.push_back(b0);
  for (std::size_t i = 1; i <= n; ++i) {
    IntVec bi = b0;
    bi[i - 1] += 1;
    rays.push_back(bi);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    IntVec aj(n, Int(0));
    aj[j - 1] = 1;
    rays.push_back(aj);
  }
  return rays;
}

}  // namespace

Fan build_paper_fan(std::size_t n) {
  require(n >= 3, "build_paper_fan: n must be at least 3");
  auto rays = paper_rays(n);

  std::vector<std::vector<std::size_t>> cones;
  std::vector<std::size_t> a_cone;
  for (std::size_t j = 1; j <= n; ++j) a_cone.push_back(n + j);
  cones.push_back(a_cone);

  for (std::size_t i = 1; i <= n; ++i) {
    // Cyclic index sequence i+1, ..., i+n-1 inside {1..n}.
    std::vector<std::size_t> c;
    for (std::size_t t = 1; t <= n - 1; ++t) c.push_back(((i + t - 1) % n) + 1);
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<std::size_t> cone;
      if (j <= n - 1) {
        for (std::size_t t = j; t <= n - 1; ++t) cone.push_back(n + c[t - 1]);  // a_{c_t}
        for (std::size_t t = 1; t <= j; ++t) cone.push_back(c[t - 1]);          // b_{c_t}
      } else {
        for (std::size_t t = 1; t <= n - 1; ++t) cone.push_back(c[t - 1]);
        cone.push_back(0);  // b_0
      }
      std::sort(cone.begin(), cone.end());
      cones.push_back(std::move(cone));
    }
  }
  return Fan(n, std::move(rays), std::move(cones));
}

std::size_t paper_fan_parameter(const Fan& f) {
  const std::size_t r = f.rays().size();
  require(r >= 7 && r % 2 == 1, "paper_fan_parameter: ray count does not match the family");
  const std::size_t n = (r - 1) / 2;
  require(f.rank() == n && f.rays() == paper_rays(n),
          "paper_fan_parameter: rays do not match the family layout");
  return n;
}

std::string paper_ray_label(std::size_t n, std::size_t index) {
  if (index <= n) return "b" + std::to_string(index);
  return "a" + std::to_string(index - n);
}

PointY additive_act(const AdditiveParams& c, const PointY& y, const Fan& f) {
  const std::size_t n = paper_fan_parameter(f);
  require(c.c.size() == n, "additive_act: parameter count mismatch");
  require(y.coords.size() == 2 * n + 1, "additive_act: coordinate count mismatch");
  require(in_Y(y.coords, f), "additive_act: point lies in the irrelevant locus");

  PointY out = y;
  for (std::size_t j = 1; j <= n; ++j) {
    Rat monomial(1);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != j) monomial *= y.coords[i];
    out.coords[n + j] += c.c[j - 1] * monomial;
  }
  if (!in_Y(out.coords, f))
    throw std::logic_error("additive_act: action left the admissible locus");
  return out;
}

bool check_equivariance(const Fan& f) {
  const std::size_t n = paper_fan_parameter(f);
  QuasitorusData q = quasitorus(f);
  for (std::size_t j = 1; j <= n; ++j) {
    // Character of x'_j minus character of its monomial must pair to zero
    // against every kernel row.
    IntVec d(2 * n + 1, Int(0));
    d[n + j] = 1;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != j) d[i] -= 1;
    for (std::size_t k = 0; k < q.kernel_basis.rows(); ++k)
      if (dot(q.kernel_basis.row(k), d) != 0) return false;
  }
  return true;
}

ChartPoint additive_act_X(const AdditiveParams& c, const ChartPoint& x, const Fan& f) {
  return quotient_map(additive_act(c, lift(x, f), f), f);
}

std::size_t orbit_dimension(const ChartPoint& x, const Fan& f) {
  const std::size_t n = paper_fan_parameter(f);
  QuasitorusData q = quasitorus(f);
  PointY y = lift(x, f);
  const std::size_t r = 2 * n + 1;

  std::vector<RatVec> group_rows;
  for (std::size_t k = 0; k < q.kernel_basis.rows(); ++k) {
    RatVec w(r);
    for (std::size_t rho = 0; rho < r; ++rho) w[rho] = Rat(q.kernel_basis(k, rho)) * y.coords[rho];
    group_rows.push_back(std::move(w));
  }
  std::vector<RatVec> combined = group_rows;
  for (std::size_t j = 1; j <= n; ++j) {
    Rat monomial(1);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != j) monomial *= y.coords[i];
    RatVec v(r, Rat(0));
    v[n + j] = monomial;
    combined.push_back(std::move(v));
  }
  std::size_t rank_group = rref_with_transform(RatMat::from_rows(group_rows)).rank;
  std::size_t rank_combined = rref_with_transform(RatMat::from_rows(combined)).rank;
  return rank_combined - rank_group;
}

Fan projective_plane_fan() {
  std::vector<IntVec> rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}};
  return Fan(2, std::move(rays), {{0, 1}, {0, 2}, {1, 2}});
}

Fan f1_blowup_reference_fan() {
  std::vector<IntVec> rays = {{Int(0), Int(1)},
                              {Int(-1), Int(0)},
                              {Int(-1), Int(-1)},
                              {Int(0), Int(-1)},
                              {Int(1), Int(-1)}};
  return Fan(2, std::move(rays), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

namespace {

PointY zeros_at(const Fan& f, const std::vector<std::size_t>& zero_rays) {
  PointY y;
  y.coords.assign(f.rays().size(), Rat(1));
  for (std::size_t i : zero_rays) y.coords[i] = 0;
  return y;
}

Rat random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  Rat q = Rat(Int(num(rng)), Int(den(rng)));
  return sign(rng) ? q : -q;
}

}  // namespace

StarCheckReport component_star_check() {
  Fan f = build_paper_fan(3);
  StarCheckReport report;
  report.ok = true;

  Fan p2 = projective_plane_fan();
  Fan bl = f1_blowup_reference_fan();

  std::vector<Fan> stars;
  for (std::size_t i = 0; i <= 3; ++i) stars.push_back(star_fan(f, ConeRef{{i}}).fan);

  for (std::size_t i = 0; i <= 3; ++i) {
    const Fan& reference = (i == 0) ? p2 : bl;
    auto witness = fan_isomorphic(stars[i], reference);
    StarCheckEntry entry;
    entry.ray_index = i;
    entry.reference = (i == 0) ? "projective-plane" : "hirzebruch-F1-blowup";
    if (witness) entry.witness = *witness;
    else report.ok = false;
    report.entries.push_back(std::move(entry));
  }

  report.pairwise_isomorphic = fan_isomorphic(stars[1], stars[2]).has_value() &&
                               fan_isomorphic(stars[1], stars[3]).has_value() &&
                               fan_isomorphic(stars[2], stars[3]).has_value();
  report.ok = report.ok && report.pairwise_isomorphic;
  return report;
}

OrbitReport ga_orbit_report(std::size_t n) {
  require(n == 3, "ga_orbit_report: the orbit report is specified only for n = 3");
  Fan f = build_paper_fan(3);
  OrbitReport report;
  report.n = 3;
  report.ok = true;

  auto star = component_star_check();
  for (std::size_t i = 0; i <= 3; ++i) {
    ComponentInfo comp;
    comp.ray_index = i;
    comp.ray_label = paper_ray_label(3, i);
    comp.star_class = star.entries[i].reference;
    report.components.push_back(std::move(comp));
  }
  report.ok = report.ok && star.ok;

  // X_0 is pointwise fixed: the action differentials vanish when x_0 = 0.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  report.x0_samples = 20;
  report.x0_pointwise_fixed = true;
  for (std::size_t s = 0; s < report.x0_samples; ++s) {
    PointY y;
    y.coords.assign(7, Rat(0));
    for (std::size_t i = 1; i < 7; ++i) y.coords[i] = random_nonzero(rng);
    if (orbit_dimension(quotient_map(y, f), f) != 0) report.x0_pointwise_fixed = false;
  }
  report.ok = report.ok && report.x0_pointwise_fixed;

  // Fixed curves S_{j,k} inside each component X_j, j = 1..3.
  for (std::size_t j = 1; j <= 3; ++j) {
    std::vector<std::size_t> ks;
    ks.push_back(0);
    for (std::size_t k = 1; k <= 3; ++k)
      if (k != j) ks.push_back(k);
    for (std::size_t k : ks) {
      CurveInfo curve;
      curve.j = j;
      curve.k = k;
      std::vector<std::size_t> pair = {std::min(j, k), std::max(j, k)};
      curve.cone = ConeRef{pair};
      curve.representative = zeros_at(f, pair);
      curve.fixed_pointwise = true;
      for (std::size_t s = 0; s < 5; ++s) {
        PointY y;
        y.coords.assign(7, Rat(0));
        for (std::size_t i = 0; i < 7; ++i)
          if (i != pair[0] && i != pair[1]) y.coords[i] = random_nonzero(rng);
        if (orbit_dimension(quotient_map(y, f), f) != 0) curve.fixed_pointwise = false;
      }
      report.ok = report.ok && curve.fixed_pointwise && is_cone_of(f, curve.cone);
      report.curves.push_back(std::move(curve));
    }

    // Pairwise intersections of the three curves of X_j.
    std::size_t kp = ks[1], kpp = ks[2];
    std::vector<std::array<std::size_t, 2>> pairs = {{0, kp}, {0, kpp}, {kp, kpp}};
    std::vector<ChartPoint> meet_points;
    for (auto [k1, k2] : pairs) {
      CurveIntersectionInfo info;
      info.j = j;
      info.k1 = k1;
      info.k2 = k2;
      std::vector<std::size_t> c1 = {std::min(j, k1), std::max(j, k1)};
      std::vector<std::size_t> c2 = {std::min(j, k2), std::max(j, k2)};
      info.cones = closure_intersection(f, ConeRef{c1}, ConeRef{c2});
      for (const auto& c : info.cones)
        if (c.ray_indices.size() == 3) ++info.point_count;
      if (!info.cones.empty()) {
        std::vector<std::size_t> all = {j, k1, k2};
        std::sort(all.begin(), all.end());
        info.representative = zeros_at(f, all);
        meet_points.push_back(quotient_map(*info.representative, f));
      }
      bool expected = (k1 == 0 || k2 == 0) ? (info.point_count == 1 && info.cones.size() == 1)
                                           : info.cones.empty();
      report.ok = report.ok && expected;
      report.curve_intersections.push_back(std::move(info));
    }
    // The two meeting points with S_{j0} are distinct.
    bool distinct = meet_points.size() == 2 && !points_equal(meet_points[0], meet_points[1], f);
    if (j == 1) report.curve_pair_points_distinct = distinct;
    else report.curve_pair_points_distinct = report.curve_pair_points_distinct && distinct;
  }
  report.ok = report.ok && report.curve_pair_points_distinct;

  // Component intersections: X_j with X_l meet exactly in S_{jl}.
  report.pair_intersections_match = true;
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t l = j + 1; l <= 3; ++l) {
      auto cones = closure_intersection(f, ConeRef{{j}}, ConeRef{{l}});
      bool has_pair = false;
      for (const auto& c : cones)
        if (c.ray_indices == std::vector<std::size_t>{j, l}) has_pair = true;
      if (!has_pair || cones.empty()) report.pair_intersections_match = false;
    }
  report.ok = report.ok && report.pair_intersections_match;

  report.triple_empty = closure_intersection(f, ConeRef{{1, 2}}, ConeRef{{3}}).empty();
  report.ok = report.ok && report.triple_empty;

  std::vector<ChartPoint> triple_points;
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t l = j + 1; l <= 3; ++l) {
      TripleIntersectionInfo info;
      info.components = {0, j, l};
      info.cones = closure_intersection(f, ConeRef{{0, j}}, ConeRef{{l}});
      for (const auto& c : info.cones)
        if (c.ray_indices.size() == 3) ++info.point_count;
      if (!info.cones.empty()) {
        info.representative = zeros_at(f, {0, j, l});
        triple_points.push_back(quotient_map(*info.representative, f));
      }
      report.ok = report.ok && info.point_count == 1 && info.cones.size() == 1;
      report.x0_triples.push_back(std::move(info));
    }
  report.triple_points_distinct =
      triple_points.size() == 3 && !points_equal(triple_points[0], triple_points[1], f) &&
      !points_equal(triple_points[0], triple_points[2], f) &&
      !points_equal(triple_points[1], triple_points[2], f);
  report.ok = report.ok && report.triple_points_distinct;

  return report;
}

}  // namespace toric
