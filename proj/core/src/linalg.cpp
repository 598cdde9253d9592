#include "toric/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toric {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

IntMat::IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  require(cols > 0, "IntMat: zero columns");
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  require(!rows.empty() && !rows.front().empty(), "IntMat::from_rows: empty input");
  IntMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols(), "IntMat::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols) {
  require(!cols.empty() && !cols.front().empty(), "IntMat::from_columns: empty input");
  IntMat m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == m.rows(), "IntMat::from_columns: ragged columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntVec IntMat::column(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMat IntMat::transposed() const {
  require(rows_ > 0, "IntMat::transposed: empty matrix");
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMat::apply(const IntVec& v) const {
  require(v.size() == cols_, "IntMat::apply: size mismatch");
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  require(cols_ == rhs.rows_, "IntMat::operator*: shape mismatch");
  IntMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RatMat::RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  require(cols > 0, "RatMat: zero columns");
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
  require(!rows.empty() && !rows.front().empty(), "RatMat::from_rows: empty input");
  RatMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols(), "RatMat::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMat RatMat::from_int(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatVec RatMat::row(std::size_t i) const {
  RatVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatMat RatMat::transposed() const {
  require(rows_ > 0, "RatMat::transposed: empty matrix");
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVec RatMat::apply(const RatVec& v) const {
  require(v.size() == cols_, "RatMat::apply: size mismatch");
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "dot: size mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot(const RatVec& a, const RatVec& b) {
  require(a.size() == b.size(), "dot: size mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  return acc;
}

Rat dot(const RatVec& a, const IntVec& b) {
  require(a.size() == b.size(), "dot: size mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * Rat(b[i]);
  return acc;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

IntVec add(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "add: size mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "sub: size mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec negate(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void negate_row(IntMat& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// (row a, row b) <- (s*row a + t*row b, -beta*row a + alpha*row b)
// with s*x + t*y = g, alpha = x/g, beta = y/g; the transform has det 1.
void gcd_row_op(IntMat& m, std::size_t a, std::size_t b, const Int& s, const Int& t,
                const Int& alpha, const Int& beta) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int ma = m(a, j), mb = m(b, j);
    m(a, j) = s * ma + t * mb;
    m(b, j) = alpha * mb - beta * ma;
  }
}

void add_multiple_row(IntMat& m, std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void gcd_col_op(IntMat& m, std::size_t a, std::size_t b, const Int& s, const Int& t,
                const Int& alpha, const Int& beta) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int ma = m(i, a), mb = m(i, b);
    m(i, a) = s * ma + t * mb;
    m(i, b) = alpha * mb - beta * ma;
  }
}

void add_multiple_col(IntMat& m, std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}

}  // namespace

HnfResult hnf(const IntMat& a) {
  IntMat h = a;
  IntMat u = IntMat::identity(a.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < h.rows() && h(r, col) == 0) ++r;
    if (r == h.rows()) continue;
    swap_rows(h, pivot_row, r);
    swap_rows(u, pivot_row, r);
    for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      auto [g, s, t] = xgcd(h(pivot_row, col), h(i, col));
      Int alpha = h(pivot_row, col) / g;
      Int beta = h(i, col) / g;
      gcd_row_op(h, pivot_row, i, s, t, alpha, beta);
      gcd_row_op(u, pivot_row, i, s, t, alpha, beta);
    }
    if (h(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = floor_div(h(i, col), h(pivot_row, col));
      add_multiple_row(h, i, pivot_row, -q);
      add_multiple_row(u, i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMat& a) {
  IntMat s = a;
  IntMat u = IntMat::identity(a.rows());
  IntMat v = IntMat::identity(a.cols());
  const std::size_t bound = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < bound; ++t) {
    // Deterministic pivot: minimal |entry| over the trailing block, first by
    // position on ties.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j) {
        if (s(i, j) == 0) continue;
        Int mag = abs(s(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    swap_rows(s, t, pi);
    swap_rows(u, t, pi);
    swap_cols(s, t, pj);
    swap_cols(v, t, pj);

    for (;;) {
      if (s(t, t) < 0) {
        negate_row(s, t);
        negate_row(u, t);
      }
      // Exact-divisor entries are cleared by elementary ops, which leave the
      // pivot row/column alone; gcd transforms run only when they strictly
      // shrink the pivot, which bounds the number of passes.
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        if (s(i, t) % s(t, t) == 0) {
          Int q = s(i, t) / s(t, t);
          add_multiple_row(s, i, t, -q);
          add_multiple_row(u, i, t, -q);
        } else {
          auto [g, p, q] = xgcd(s(t, t), s(i, t));
          Int alpha = s(t, t) / g, beta = s(i, t) / g;
          gcd_row_op(s, t, i, p, q, alpha, beta);
          gcd_row_op(u, t, i, p, q, alpha, beta);
        }
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        if (s(t, j) % s(t, t) == 0) {
          Int q = s(t, j) / s(t, t);
          add_multiple_col(s, j, t, -q);
          add_multiple_col(v, j, t, -q);
        } else {
          auto [g, p, q] = xgcd(s(t, t), s(t, j));
          Int alpha = s(t, t) / g, beta = s(t, j) / g;
          gcd_col_op(s, t, j, p, q, alpha, beta);
          gcd_col_op(v, t, j, p, q, alpha, beta);
        }
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i)
        if (s(i, t) != 0) clean = false;
      for (std::size_t j = t + 1; j < s.cols(); ++j)
        if (s(t, j) != 0) clean = false;
      if (!clean) continue;
      // Enforce divisibility on the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < s.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < s.cols() && !fixed; ++j)
          if (s(i, j) % s(t, t) != 0) {
            add_multiple_row(s, t, i, 1);
            add_multiple_row(u, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

Int det(const IntMat& a) {
  require(a.rows() == a.cols(), "det: matrix not square");
  const std::size_t n = a.rows();
  IntMat m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return Int(0);
      swap_rows(m, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMat kernel_basis_Z(const IntMat& a) {
  // Kernel vectors of a are the left-kernel rows of a^T; read them off the
  // unimodular transform of the HNF.
  auto [h, u] = hnf(a.transposed());
  std::size_t rk = 0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (!is_zero(h.row(i))) ++rk;
  IntMat basis(a.cols() - rk, a.cols());
  for (std::size_t i = rk; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) basis(i - rk, j) = u(i, j);
  return basis;
}

std::size_t rank(const IntMat& a) {
  auto [h, u] = hnf(a);
  std::size_t rk = 0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (!is_zero(h.row(i))) ++rk;
  return rk;
}

std::optional<RatVec> solve_rational(const IntMat& a, const RatVec& b) {
  return solve_rational(RatMat::from_int(a), b);
}

std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b) {
  require(b.size() == a.rows(), "solve_rational: rhs size mismatch");
  auto red = rref_with_transform(a);
  RatVec rhs = red.t.apply(b);
  for (std::size_t i = red.rank; i < a.rows(); ++i)
    if (rhs[i] != 0) return std::nullopt;
  RatVec x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivot_cols[i]] = rhs[i];
  return x;
}

IntVec primitive(const IntVec& v) {
  require(!is_zero(v), "primitive: zero vector");
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool lattice_contains(const IntMat& basis, const IntVec& v) {
  require(v.size() == basis.cols(), "lattice_contains: size mismatch");
  if (basis.rows() == 0) return is_zero(v);
  // Solve y * H = v by forward substitution on the echelon rows; membership
  // needs exact divisibility at every pivot.
  auto [h, u] = hnf(basis);
  IntVec residual = v;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t lead = 0;
    while (lead < h.cols() && h(i, lead) == 0) ++lead;
    if (lead == h.cols()) break;  // zero rows trail
    if (residual[lead] % h(i, lead) != 0) return false;
    Int q = residual[lead] / h(i, lead);
    for (std::size_t j = lead; j < h.cols(); ++j) residual[j] -= q * h(i, j);
  }
  return is_zero(residual);
}

IntMat inverse_unimodular(const IntMat& a) {
  require(a.rows() == a.cols(), "inverse_unimodular: matrix not square");
  Int d = det(a);
  require(d == 1 || d == -1, "inverse_unimodular: determinant not a unit");
  auto red = rref_with_transform(RatMat::from_int(a));
  IntMat inv(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rat& q = red.t(i, j);
      require(denominator(q) == 1, "inverse_unimodular: non-integral inverse");
      inv(i, j) = numerator(q);
    }
  return inv;
}

RrefResult rref_with_transform(const RatMat& a) {
  RatMat r = a;
  RatMat t = RatMat::identity(a.rows());
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t pr = pivot_row;
    while (pr < a.rows() && r(pr, col) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != pivot_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(r(pivot_row, j), r(pr, j));
    if (pr != pivot_row)
      for (std::size_t j = 0; j < a.rows(); ++j) std::swap(t(pivot_row, j), t(pr, j));
    Rat inv = Rat(1) / r(pivot_row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) r(pivot_row, j) *= inv;
    for (std::size_t j = 0; j < a.rows(); ++j) t(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || r(i, col) == 0) continue;
      Rat f = r(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= f * r(pivot_row, j);
      for (std::size_t j = 0; j < a.rows(); ++j) t(i, j) -= f * t(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  std::size_t rk = pivots.size();
  return {std::move(r), std::move(t), std::move(pivots), rk};
}

RatMat kernel_basis_Q(const RatMat& a) {
  auto red = rref_with_transform(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  std::size_t dim = a.cols() - red.rank;
  RatMat basis(dim, a.cols());
  std::size_t k = 0;
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    basis(k, free_col) = 1;
    for (std::size_t i = 0; i < red.rank; ++i) basis(k, red.pivot_cols[i]) = -red.r(i, free_col);
    ++k;
  }
  return basis;
}

}  // namespace toric
