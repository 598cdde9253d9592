#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here is deliberately separate from the library's own code paths: the
// oracles recompute expected values by brute force or by a second method.

#include <toric/additive.hpp>
#include <toric/cox.hpp>
#include <toric/fan.hpp>
#include <toric/lp.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using namespace toric;

inline Fan p1_fan() {
  return Fan(1, {{Int(1)}, {Int(-1)}}, {{0}, {1}});
}

inline Fan p1xp1_fan() {
  return Fan(2,
             {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(0)}, {Int(0), Int(-1)}},
             {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Fan p3_fan() {
  return Fan(3,
             {{Int(1), Int(0), Int(0)},
              {Int(0), Int(1), Int(0)},
              {Int(0), Int(0), Int(1)},
              {Int(-1), Int(-1), Int(-1)}},
             {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline Fan p1_cubed_fan() {
  std::vector<IntVec> rays = {{Int(1), Int(0), Int(0)}, {Int(-1), Int(0), Int(0)},
                              {Int(0), Int(1), Int(0)}, {Int(0), Int(-1), Int(0)},
                              {Int(0), Int(0), Int(1)}, {Int(0), Int(0), Int(-1)}};
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t z = 0; z < 2; ++z) cones.push_back({x, 2 + y, 4 + z});
  return Fan(3, std::move(rays), std::move(cones));
}

inline Fan c2_fan() {
  return Fan(2, {{Int(1), Int(0)}, {Int(0), Int(1)}}, {{0, 1}});
}

inline Fan c3_fan() {
  return Fan(3,
             {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}},
             {{0, 1, 2}});
}

// --- random data ---

inline Rat random_rat(std::mt19937_64& rng, int lo = -5, int hi = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rat(Int(num(rng)), Int(den(rng)));
}

inline Rat random_nonzero_rat(std::mt19937_64& rng, int mag = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(1, mag);
  std::uniform_int_distribution<int> den(1, max_den);
  std::uniform_int_distribution<int> sign(0, 1);
  Rat q = Rat(Int(num(rng)), Int(den(rng)));
  return sign(rng) ? q : -q;
}

inline IntVec random_int_vec(std::mt19937_64& rng, std::size_t len, int mag = 4) {
  std::uniform_int_distribution<int> d(-mag, mag);
  IntVec v(len);
  for (auto& x : v) x = d(rng);
  return v;
}

inline IntMat random_int_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                             int mag = 4) {
  IntMat m(rows, cols);
  std::uniform_int_distribution<int> d(-mag, mag);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Three shapes, all within the oracle's reach: small dense systems, systems
// with equalities (the projection substitutes those), and wide thin systems
// up to 40 variables.
inline LinearSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shape(0, 2);
  std::size_t vars, eq, ge;
  switch (shape(rng)) {
    case 0:
      vars = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      eq = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
      ge = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      break;
    case 1:
      vars = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
      eq = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      ge = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
      break;
    default:
      vars = std::uniform_int_distribution<std::size_t>(10, 40)(rng);
      eq = std::uniform_int_distribution<std::size_t>(0, vars / 2)(rng);
      ge = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      break;
  }
  LinearSystem sys;
  sys.num_vars = vars;
  for (std::size_t i = 0; i < eq; ++i) {
    RatVec row(vars);
    for (auto& x : row) x = random_rat(rng, -3, 3, 2);
    sys.equalities.emplace_back(std::move(row), random_rat(rng, -3, 3, 2));
  }
  for (std::size_t i = 0; i < ge; ++i) {
    RatVec row(vars);
    for (auto& x : row) x = random_rat(rng, -3, 3, 2);
    sys.inequalities.emplace_back(std::move(row), random_rat(rng, -3, 3, 2));
  }
  return sys;
}

// Random point off the irrelevant locus of the n = 3 family fan: zeros on a
// random face of a random maximal cone, random nonzero rationals elsewhere.
inline PointY random_point_in_Y(std::mt19937_64& rng, const Fan& f) {
  std::uniform_int_distribution<std::size_t> pick(0, f.max_cones().size() - 1);
  const auto& cone = f.max_cones()[pick(rng)];
  std::uniform_int_distribution<int> coin(0, 1);
  PointY y;
  y.coords.assign(f.rays().size(), Rat(0));
  std::vector<bool> zero(f.rays().size(), false);
  for (std::size_t i : cone) zero[i] = coin(rng);
  for (std::size_t i = 0; i < f.rays().size(); ++i)
    if (!zero[i]) y.coords[i] = random_nonzero_rat(rng);
  return y;
}

inline GroupElement random_group_element(std::mt19937_64& rng, std::size_t params) {
  GroupElement g;
  g.params.resize(params);
  for (auto& t : g.params) t = random_nonzero_rat(rng);
  return g;
}

// --- oracles ---

// Monte-Carlo completeness: every sampled direction must lie in some maximal
// cone iff the fan is complete (exact membership tests on random integer
// directions).
inline bool mc_complete(const Fan& f, std::mt19937_64& rng, std::size_t samples = 1000) {
  std::uniform_int_distribution<int> d(-9, 9);
  for (std::size_t s = 0; s < samples; ++s) {
    RatVec x(f.rank());
    bool zero = true;
    for (auto& c : x) {
      int v = d(rng);
      c = Rat(v);
      if (v != 0) zero = false;
    }
    if (zero) continue;
    bool housed = false;
    for (const auto& mc : f.max_cones())
      if (cone_contains(f, ConeRef{mc}, x)) {
        housed = true;
        break;
      }
    if (!housed) return false;
  }
  return true;
}

// Brute-force enumeration of integer kernel vectors in a small box.
inline std::vector<IntVec> brute_kernel_vectors(const IntMat& a, int box) {
  std::vector<IntVec> found;
  IntVec v(a.cols(), Int(-box));
  for (;;) {
    if (!is_zero(v) && is_zero(a.apply(v))) found.push_back(v);
    std::size_t k = 0;
    while (k < v.size()) {
      v[k] += 1;
      if (v[k] <= box) break;
      v[k] = -box;
      ++k;
    }
    if (k == v.size()) break;
  }
  return found;
}

// All subsets of rays contained in some cone of the fan (faces of the ray
// complex), via direct bitmask scan. Used for the face/primitive-collection
// dichotomy test.
inline bool subset_is_face(const Fan& f, std::uint64_t mask) {
  for (const auto& c : f.max_cones()) {
    std::uint64_t cm = 0;
    for (std::size_t i : c) cm |= (1ull << i);
    if ((mask & ~cm) == 0) return true;
  }
  return false;
}

inline IntMat random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 5) {
  IntMat u = IntMat::identity(n);
  std::uniform_int_distribution<std::size_t> row(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = row(rng), j = row(rng);
    if (i == j) continue;
    Int c(coef(rng));
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

// Random lattice polytope with the origin strictly interior and a simplicial
// normal fan. Rank 2: a centrally symmetric polygon (every polygon works).
// Rank 3: random point hulls are simplicial, hence have non-simple vertices,
// so build a prism over a polygon (simple by construction) and shear it by a
// unimodular map for variety.
inline Polytope random_polytope(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<int> d(1, 5);
  std::uniform_int_distribution<std::size_t> extra(3, 6);
  std::vector<IntVec> polygon;
  std::size_t pairs = extra(rng);
  for (std::size_t i = 0; i < pairs; ++i) {
    IntVec v = random_int_vec(rng, 2, 5);
    if (is_zero(v)) v[0] = d(rng);
    polygon.push_back(v);
    polygon.push_back(negate(v));
  }
  Polytope p;
  p.rank = rank;
  if (rank == 2) {
    p.vertices = std::move(polygon);
    return p;
  }
  std::uniform_int_distribution<int> h(1, 4);
  Int height(h(rng));
  IntMat u = random_unimodular(rng, 3);
  for (const IntVec& v : polygon)
    for (int sign : {1, -1}) p.vertices.push_back(u.apply({v[0], v[1], Int(sign) * height}));
  return p;
}

}  // namespace fixtures
