#pragma once

#include "toric/numbers.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense matrices at desk scale. Row-major storage; a matrix may have zero
// rows (e.g. an empty kernel basis) but never zero columns.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows);
  static IntMat from_columns(const std::vector<IntVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec column(std::size_t j) const;
  IntMat transposed() const;

  IntVec apply(const IntVec& v) const;  // A * v
  IntMat operator*(const IntMat& rhs) const;

  bool operator==(const IntMat&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols);

  static RatMat identity(std::size_t n);
  static RatMat from_rows(const std::vector<RatVec>& rows);
  static RatMat from_int(const IntMat& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatMat transposed() const;

  RatVec apply(const RatVec& v) const;

  bool operator==(const RatMat&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// --- vector helpers ---

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& v);
RatVec to_rat(const IntVec& v);

// --- integer lattice algorithms ---

// Row Hermite normal form: h = u * a with u unimodular, h in row echelon
// form, pivots positive, entries above each pivot reduced into [0, pivot).
struct HnfResult {
  IntMat h, u;
};
HnfResult hnf(const IntMat& a);

// Smith normal form: s = u * a * v diagonal with nonnegative entries and
// d1 | d2 | ... ; u, v unimodular.
struct SnfResult {
  IntMat s, u, v;
};
SnfResult snf(const IntMat& a);

// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int det(const IntMat& a);

// Rows form a Z-basis of {v : a * v = 0}; the basis is saturated, so any
// integer kernel vector is an integer combination of the rows. May return a
// matrix with zero rows.
IntMat kernel_basis_Z(const IntMat& a);

// Rank over Q.
std::size_t rank(const IntMat& a);

// Some exact solution of a * x = b, or nullopt when inconsistent. Free
// variables are set to zero, so the result is deterministic.
std::optional<RatVec> solve_rational(const IntMat& a, const RatVec& b);
std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b);

// v / gcd(entries). Throws std::invalid_argument on the zero vector.
IntVec primitive(const IntVec& v);

// True iff v is an integer combination of the rows of basis.
bool lattice_contains(const IntMat& basis, const IntVec& v);

// Inverse of a matrix with det = +-1; entries stay integral.
IntMat inverse_unimodular(const IntMat& a);

// --- rational elimination with multiplier tracking ---

// Reduced row echelon form r = t * a with t invertible, plus the pivot
// columns. Zero rows of r are pushed to the bottom.
struct RrefResult {
  RatMat r, t;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};
RrefResult rref_with_transform(const RatMat& a);

// Rows form a Q-basis of {v : a * v = 0}.
RatMat kernel_basis_Q(const RatMat& a);

}  // namespace toric
