#pragma once

#include "toric/fan.hpp"
#include "toric/lp.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toric {

// One linear functional per maximal cone; together a strictly convex
// piecewise-linear support function when the wall constraints hold.
struct SupportFunction {
  std::vector<RatVec> cone_functionals;
};

// Support system plus the bookkeeping linking constraints back to walls:
// wall k owns equalities [k*(n-1), (k+1)*(n-1)) and inequality k. The
// inequality for wall k constrains off_ray[k], the ray of the higher-index
// incident cone that lies off the wall.
struct SupportSystem {
  LinearSystem system;
  std::vector<Wall> wall_list;
  std::vector<std::size_t> off_ray;
};

// Variables are n unknowns per maximal cone. Per wall: agreement equalities
// on the shared rays and one strictness inequality ">= 1" (the system is
// homogeneous, so strictness loses nothing by this normalization).
// Throws std::invalid_argument when the fan is not complete.
SupportSystem build_support_system_detailed(const Fan& f);
LinearSystem build_support_system(const Fan& f);

// Either a support function or a Farkas certificate for its nonexistence;
// the evidence is re-verified before it is returned, and the underlying
// system is carried along.
struct ProjectivityVerdict {
  bool projective = false;
  std::optional<SupportFunction> support;
  std::optional<FarkasCertificate> certificate;
  LinearSystem system;
};
ProjectivityVerdict is_projective(const Fan& f);

// Exact re-check of a support function against the fan's walls.
bool verify_support_function(const Fan& f, const SupportFunction& s);

// One step of the cyclic contradiction: the lattice identity
// a_i + b_{i-1} - a_{i-1} = b_i, the maximal cone containing the triple,
// the coordinate expansion showing b_i stays outside it, and the adjacent
// cone whose wall inequality realizes the strict drop.
struct PaperChainStep {
  std::size_t i = 0, prev = 0;
  bool identity_ok = false;
  std::size_t triple_cone = 0;
  std::size_t neighbor_cone = 0;
  RatVec expansion;
  Rat negative_coefficient;
  std::string inequality;
};

struct PaperCertificateReport {
  std::size_t n = 0;
  bool ok = false;
  std::vector<PaperChainStep> steps;
  std::string contradiction;
};

// Checks, in exact arithmetic, the hand-built non-projectivity argument for
// the family fan of parameter n: all n cyclic lattice identities, triple
// membership in a single maximal cone, exclusion of b_i from that cone, and
// the induced inequality chain whose sum is the contradiction.
PaperCertificateReport verify_paper_certificate(std::size_t n);

}  // namespace toric
