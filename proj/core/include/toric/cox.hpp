#pragma once

#include "toric/fan.hpp"
#include "toric/linalg.hpp"

#include <cstddef>
#include <vector>

namespace toric {

// The quasitorus G acting on the homogeneous coordinate space: the defining
// character relations (one row per lattice coordinate), a Z-basis of the
// exponent lattice parameterizing G, and the invariant factors of the
// relation matrix (torsion of the character group).
struct QuasitorusData {
  IntMat relations;
  IntMat kernel_basis;
  std::vector<Int> invariant_factors;
};

// A point of the homogeneous coordinate space, indexed by the fan's rays.
struct PointY {
  RatVec coords;
};

// A point of the variety, written in the affine chart of a smooth maximal
// cone: coords are the values of the chart coordinates for the dual basis of
// the cone's generators.
struct ChartPoint {
  ConeRef cone;
  RatVec coords;
};

// Free parameters of a quasitorus element through the kernel basis; all
// entries must be nonzero.
struct GroupElement {
  RatVec params;
};

// n x |rays| matrix whose columns are the primitive ray generators.
IntMat ray_matrix(const Fan& f);

// Throws std::invalid_argument when the rays do not span the ambient space.
QuasitorusData quasitorus(const Fan& f);

// True iff the zero-support of x is contained in some cone's ray set, i.e.
// x avoids the irrelevant locus.
bool in_Y(const RatVec& x, const Fan& f);

// Coordinate-wise action: coordinate rho is scaled by
// prod_k params_k ^ kernel_basis[k][rho]. The zero-support is unchanged.
PointY group_act(const GroupElement& g, const PointY& y, const QuasitorusData& q);
PointY group_act(const GroupElement& g, const PointY& y, const Fan& f);

// Descends y to the chart of the lexicographically first maximal cone whose
// ray set contains the zero-support. Chart coordinate k is the monomial
// prod_rho y_rho ^ <u_k, p_rho> for the dual basis u_k of the cone.
ChartPoint quotient_map(const PointY& y, const Fan& f);

// Standard section: cone rays take the chart coordinates, all other rays 1.
PointY lift(const ChartPoint& x, const Fan& f);

// Rewrites x in the chart of target. Throws std::invalid_argument when the
// point does not lie in that chart.
ChartPoint chart_transition(const ChartPoint& x, const ConeRef& target, const Fan& f);

// True iff some maximal cone admits both points with equal chart
// coordinates; this is exact point equality on the variety.
bool points_equal(const ChartPoint& x1, const ChartPoint& x2, const Fan& f);

// The face of the chart cone spanned by the generators whose chart
// coordinates vanish; x lies in the orbit of exactly this cone.
ConeRef orbit_label(const ChartPoint& x, const Fan& f);

}  // namespace toric
