#pragma once

#include "toric/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toric {

// A cone of a simplicial fan, identified by its sorted ray-index set. The
// empty set is the zero cone.
struct ConeRef {
  std::vector<std::size_t> ray_indices;

  bool operator==(const ConeRef&) const = default;
  auto operator<=>(const ConeRef&) const = default;
};

// A codimension-one cone together with the maximal cones containing it.
struct Wall {
  ConeRef shared;
  std::vector<std::size_t> incident;  // indices into Fan::max_cones()
};

// Lattice polytope in the dual space, given by its vertices. The origin must
// be strictly interior and the dimension must equal the rank.
struct Polytope {
  std::size_t rank = 0;
  std::vector<IntVec> vertices;
};

// Simplicial fan: primitive ray generators plus maximal cones as ray-index
// sets. The constructor enforces the structural invariants (distinct
// primitive rays, sorted in-range index sets, linearly independent
// generators); the pairwise-face axiom is checked separately by
// fan_validate.
class Fan {
 public:
  Fan(std::size_t rank, std::vector<IntVec> rays, std::vector<std::vector<std::size_t>> max_cones);

  std::size_t rank() const { return rank_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const IntVec& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return max_cones_; }

 private:
  std::size_t rank_ = 0;
  std::vector<IntVec> rays_;
  std::vector<std::vector<std::size_t>> max_cones_;
};

struct FanViolation {
  std::size_t cone_a = 0, cone_b = 0;
  std::optional<RatVec> overlap_point;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<FanViolation> violations;
};

// Checks that every pair of maximal cones meets in a common face, by finding
// a separating functional that vanishes exactly on the shared rays. On
// failure the report carries the offending pair and, when one exists, a
// point interior to the illegal overlap.
ValidationReport fan_validate(const Fan& f);

// Every maximal cone is generated by part of a lattice basis.
bool is_smooth(const Fan& f);

// Nonempty, pure of top dimension, and every wall lies in exactly two
// maximal cones.
bool is_complete(const Fan& f);

// Minimal ray sets contained in no cone (minimal non-faces of the ray
// complex), sorted by size then lexicographically.
std::vector<std::vector<std::size_t>> primitive_collections(const Fan& f);

// All walls: geometrically deduplicated (n-1)-subsets of maximal cones.
std::vector<Wall> walls(const Fan& f);

// All cones of the fan (subsets of maximal cones, deduplicated), sorted by
// dimension then lexicographically. Always contains the zero cone.
std::vector<ConeRef> all_cones(const Fan& f);

bool is_cone_of(const Fan& f, const ConeRef& c);

// Coordinates of x in the cone's generator basis when x lies in the cone
// (all coordinates >= 0), nullopt otherwise.
std::optional<RatVec> cone_coordinates(const Fan& f, const ConeRef& c, const RatVec& x);
bool cone_contains(const Fan& f, const ConeRef& c, const RatVec& x);

// Quotient fan of the orbit closure at tau: all cones containing tau are
// projected to N / N_tau. Requires tau to span a direct summand (unimodular
// generators), which holds in smooth fans.
struct StarFan {
  Fan fan;
  IntMat projection;                       // (n-k) x n
  std::vector<std::size_t> source_rays;    // star ray i is the image of this ray of f
};
StarFan star_fan(const Fan& f, const ConeRef& tau);

// Orbit-cone correspondence data: every cone with its orbit dimension
// n - dim(cone) and the covering relations of the face order.
struct OrbitPosetNode {
  ConeRef cone;
  std::size_t orbit_dim = 0;
  std::vector<std::size_t> covered;  // indices of nodes this cone covers (its facets)
};
std::vector<OrbitPosetNode> orbit_poset(const Fan& f);

// Cones containing both tau1 and tau2; V(tau1) and V(tau2) intersect in the
// orbits of exactly these cones (empty result = empty intersection).
std::vector<ConeRef> closure_intersection(const Fan& f, const ConeRef& tau1, const ConeRef& tau2);

// True iff the lattice map sends every cone of `from` into some cone of `to`.
bool map_compatible(const IntMat& a, const Fan& from, const Fan& to);

// The minimal cone of `to` containing the image of sigma. Throws when the
// map is not compatible on sigma.
ConeRef orbit_image(const IntMat& a, const Fan& from, const Fan& to, const ConeRef& sigma);

// A unimodular matrix identifying f1 with f2 (bijective on rays and maximal
// cones), or nullopt. Both fans must be smooth and of equal rank.
std::optional<IntMat> fan_isomorphic(const Fan& f1, const Fan& f2);

// The complete fan dual to a polytope (rank <= 3, brute-force face
// enumeration). Throws std::invalid_argument when the origin is not strictly
// interior, the polytope is degenerate, or some normal cone is not
// simplicial.
Fan dual_fan_of_polytope(const Polytope& p);

}  // namespace toric
