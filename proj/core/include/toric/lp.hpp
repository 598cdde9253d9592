#pragma once

#include "toric/linalg.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace toric {

// Exact rational linear constraint system. Inequalities mean coeffs . x >= rhs;
// strict inequalities never appear (callers of homogeneous systems encode
// "> 0" as ">= 1").
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<std::pair<RatVec, Rat>> equalities;
  std::vector<std::pair<RatVec, Rat>> inequalities;
};

// Infeasibility witness: multipliers whose weighted constraint sum is
// 0 = (something positive). Equality multipliers may have any sign,
// inequality multipliers are nonnegative.
struct FarkasCertificate {
  RatVec eq_multipliers;
  RatVec ineq_multipliers;
};

// Exactly one of witness / certificate is present.
struct Feasibility {
  std::optional<RatVec> witness;
  std::optional<FarkasCertificate> certificate;
  bool feasible() const { return witness.has_value(); }
};

// Decides feasibility with exact arithmetic. Equalities are eliminated by
// rational row reduction; the residual inequality system goes through a
// phase-1 simplex with Bland's pivot rule, so the outcome and the returned
// evidence are deterministic. Every answer carries checkable evidence.
Feasibility feasible(const LinearSystem& sys);

// True iff the multipliers are shaped right, inequality multipliers are
// nonnegative, the weighted left-hand sides cancel to zero and the weighted
// right-hand sides sum to something strictly positive.
// Throws std::invalid_argument on a multiplier-count mismatch.
bool verify_farkas(const LinearSystem& sys, const FarkasCertificate& cert);

// Exact substitution check.
bool satisfies(const LinearSystem& sys, const RatVec& x);

// Fourier-Motzkin projection: eliminates variable var_index, returning a
// system in one fewer variable that is feasible iff the input is. An
// equality involving the variable is used as a substitution when available;
// otherwise inequalities are combined pairwise. Naive (quadratic blowup);
// meant as an independent oracle, not a solver.
LinearSystem fm_project(const LinearSystem& sys, std::size_t var_index);

// Eliminates every variable (greedy order) and reads feasibility off the
// resulting variable-free system.
bool fm_feasible(LinearSystem sys);

}  // namespace toric
