#pragma once

#include "toric/cox.hpp"
#include "toric/fan.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toric {

// The family fan of parameter n >= 3 in rank n: rays b_0 = -(e_1+...+e_n),
// b_i = b_0 + e_i and a_j = e_j, with the maximal cone on all a's plus n
// rows of n cones each subdividing the remaining simplex facets. Ray layout:
// b_i at index i (0 <= i <= n), a_j at index n+j (1 <= j <= n); coordinates
// on the homogeneous space follow the same order (x_0..x_n, x'_1..x'_n).
Fan build_paper_fan(std::size_t n);

// Recovers n from a fan with the family ray layout; throws
// std::invalid_argument otherwise.
std::size_t paper_fan_parameter(const Fan& f);

// "b0".."bn", "a1".."an".
std::string paper_ray_label(std::size_t n, std::size_t index);

// Parameters of the vector-group action; every rational tuple is valid.
struct AdditiveParams {
  RatVec c;
};

// The additive action upstairs: x_i fixed, x'_j += c_j * x_0...x_n / x_j.
// The result is checked to stay off the irrelevant locus.
PointY additive_act(const AdditiveParams& c, const PointY& y, const Fan& f);

// True iff every coordinate x'_j carries the same quasitorus character as
// its monomial, i.e. the action commutes with the quasitorus action.
bool check_equivariance(const Fan& f);

// Induced action on the variety, computed through the standard section.
ChartPoint additive_act_X(const AdditiveParams& c, const ChartPoint& x, const Fan& f);

// Dimension of the vector-group orbit through x: rank of the combined
// action-plus-quasitorus tangent space minus the quasitorus-orbit rank, at
// the lift of x. Exact rational rank computation.
std::size_t orbit_dimension(const ChartPoint& x, const Fan& f);

// --- n = 3 orbit structure ---

Fan projective_plane_fan();
Fan f1_blowup_reference_fan();

struct ComponentInfo {
  std::size_t ray_index = 0;
  std::string ray_label;
  std::string star_class;
};

struct CurveInfo {
  std::size_t j = 0, k = 0;  // the curve S_{j,k}
  ConeRef cone;
  PointY representative;
  bool fixed_pointwise = false;
};

struct CurveIntersectionInfo {
  std::size_t j = 0, k1 = 0, k2 = 0;  // S_{j,k1} with S_{j,k2}
  std::vector<ConeRef> cones;
  std::size_t point_count = 0;
  std::optional<PointY> representative;
};

struct TripleIntersectionInfo {
  std::vector<std::size_t> components;
  std::vector<ConeRef> cones;
  std::size_t point_count = 0;
  std::optional<PointY> representative;
};

struct OrbitReport {
  std::size_t n = 3;
  bool ok = false;
  std::vector<ComponentInfo> components;
  bool x0_pointwise_fixed = false;
  std::size_t x0_samples = 0;
  std::vector<CurveInfo> curves;
  std::vector<CurveIntersectionInfo> curve_intersections;
  bool curve_pair_points_distinct = false;
  bool pair_intersections_match = false;
  bool triple_empty = false;
  std::vector<TripleIntersectionInfo> x0_triples;
  bool triple_points_distinct = false;
};

// Assembles the full orbit-structure report of the boundary components,
// fixed loci and curve intersections. Only n = 3 is supported.
OrbitReport ga_orbit_report(std::size_t n = 3);

struct StarCheckEntry {
  std::size_t ray_index = 0;
  std::string reference;
  IntMat witness;
};

struct StarCheckReport {
  bool ok = false;
  bool pairwise_isomorphic = false;
  std::vector<StarCheckEntry> entries;
};

// Identifies the star fans at b_0..b_3 of the n = 3 family fan with the
// reference fans, returning the unimodular witnesses.
StarCheckReport component_star_check();

}  // namespace toric
