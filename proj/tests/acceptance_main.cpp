// Acceptance suite: one criterion per block, each printed as a single
// PASS/FAIL line (with indented details on failure). Exit code is the number
// of failed criteria. Time limits are asserted where stated.

#include <toric/additive.hpp>
#include <toric/cox.hpp>
#include <toric/fan.hpp>
#include <toric/json_io.hpp>
#include <toric/lp.hpp>
#include <toric/projectivity.hpp>

#include "support/fixtures.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace toric;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Criterion {
  explicit Criterion(std::string n) : name(std::move(n)) {}

  std::string name;
  bool ok = true;
  std::vector<std::string> details;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details.push_back(what);
    }
  }

  void finish() {
    std::cout << (ok ? "PASS" : "FAIL") << " " << name << "\n";
    for (const auto& d : details) std::cout << "       - " << d << "\n";
    if (!ok) ++failures;
  }
};

std::string fmt(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

}  // namespace

static void criterion1() {
  Criterion c{"criterion 1: family fan structure (n = 3,4,5: validates, 2n+1 rays, n^2+1 cones, < 1 s)"};
  for (std::size_t n : {3, 4, 5}) {
    auto t0 = std::chrono::steady_clock::now();
    Fan f = build_paper_fan(n);
    auto report = fan_validate(f);
    double elapsed = seconds_since(t0);
    c.require(f.rays().size() == 2 * n + 1, "n=" + std::to_string(n) + ": ray count");
    c.require(f.max_cones().size() == n * n + 1, "n=" + std::to_string(n) + ": cone count");
    c.require(elapsed < 1.0, "n=" + std::to_string(n) + ": runtime " + fmt(elapsed));
    c.require(report.ok,
              "n=" + std::to_string(n) + ": fan_validate reports " +
                  std::to_string(report.violations.size()) +
                  " overlapping cone pair(s); the cyclic subdivision is not a fan for n >= 4");
  }
  c.finish();
}

static void criterion2() {
  Criterion c{"criterion 2: smooth, complete and non-projective with verified certificate (n = 3,4,5)"};
  const double limits[] = {1.0, 5.0, 30.0};
  std::size_t idx = 0;
  for (std::size_t n : {3, 4, 5}) {
    Fan f = build_paper_fan(n);
    c.require(is_smooth(f), "n=" + std::to_string(n) + ": is_smooth");
    bool complete = is_complete(f);
    c.require(complete,
              "n=" + std::to_string(n) +
                  ": is_complete is false (walls of the cyclic subdivision are singly covered "
                  "for n >= 4)");
    if (complete) {
      auto t0 = std::chrono::steady_clock::now();
      auto verdict = is_projective(f);
      double elapsed = seconds_since(t0);
      c.require(!verdict.projective, "n=" + std::to_string(n) + ": expected non-projective");
      c.require(verdict.certificate.has_value() &&
                    verify_farkas(verdict.system, *verdict.certificate),
                "n=" + std::to_string(n) + ": certificate verification");
      c.require(elapsed < limits[idx],
                "n=" + std::to_string(n) + ": runtime " + fmt(elapsed) + " exceeds " +
                    fmt(limits[idx]));
    } else {
      c.require(false, "n=" + std::to_string(n) + ": projectivity undecidable on an incomplete fan");
    }
    ++idx;
  }
  c.finish();
}

static void criterion3() {
  Criterion c{"criterion 3: hand-built certificate chain verifies exactly (n = 3..6)"};
  for (std::size_t n : {3, 4, 5, 6}) {
    auto rep = verify_paper_certificate(n);
    c.require(rep.ok, "n=" + std::to_string(n) + ": chain check failed");
    c.require(rep.steps.size() == n, "n=" + std::to_string(n) + ": step count");
    for (const auto& step : rep.steps) {
      c.require(step.identity_ok, "n=" + std::to_string(n) + ": lattice identity at i=" +
                                      std::to_string(step.i));
      c.require(step.negative_coefficient < 0,
                "n=" + std::to_string(n) + ": exclusion coefficient at i=" + std::to_string(step.i));
    }
  }
  c.finish();
}

static void criterion4() {
  Criterion c{"criterion 4: primitive collections of the n = 3 fan (exact set equality)"};
  Fan f = build_paper_fan(3);
  auto pcs = primitive_collections(f);
  std::set<std::set<std::string>> got;
  for (const auto& pc : pcs) {
    std::set<std::string> labels;
    for (std::size_t i : pc) labels.insert(paper_ray_label(3, i));
    got.insert(labels);
  }
  std::set<std::set<std::string>> expect = {{"a1", "b0"}, {"a2", "b0"}, {"a3", "b0"},
                                            {"a1", "b2"}, {"a2", "b3"}, {"a3", "b1"},
                                            {"b1", "b2", "b3"}};
  c.require(got == expect, "collection sets differ");
  c.require(pcs.size() == 7, "expected exactly 7 collections");
  c.finish();
}

static void criterion5() {
  Criterion c{"criterion 5: quasitorus lattice, invariant factors, equivariance (n = 3,4,5)"};
  Fan f3 = build_paper_fan(3);
  QuasitorusData q = quasitorus(f3);
  c.require(q.kernel_basis.rows() == 4, "kernel rank");
  c.require(q.invariant_factors == std::vector<Int>{Int(1), Int(1), Int(1)},
            "invariant factors");
  IntMat paper = IntMat::from_rows({{Int(1), Int(0), Int(0), Int(0), Int(1), Int(1), Int(1)},
                                    {Int(0), Int(1), Int(0), Int(0), Int(0), Int(1), Int(1)},
                                    {Int(0), Int(0), Int(1), Int(0), Int(1), Int(0), Int(1)},
                                    {Int(0), Int(0), Int(0), Int(1), Int(1), Int(1), Int(0)}});
  for (std::size_t i = 0; i < 4; ++i) {
    c.require(lattice_contains(q.kernel_basis, paper.row(i)),
              "parameter vector " + std::to_string(i) + " outside computed lattice");
    c.require(lattice_contains(paper, q.kernel_basis.row(i)),
              "computed basis vector " + std::to_string(i) + " outside parameter lattice");
  }
  for (std::size_t n : {3, 4, 5})
    c.require(check_equivariance(build_paper_fan(n)),
              "equivariance at n=" + std::to_string(n));
  c.finish();
}

static void criterion6() {
  Criterion c{"criterion 6: orbit structure of the n = 3 boundary"};
  Fan f = build_paper_fan(3);
  std::mt19937_64 rng(606);

  OrbitReport rep = ga_orbit_report(3);
  c.require(rep.components.size() == 4, "component count");
  c.require(rep.x0_pointwise_fixed && rep.x0_samples >= 20, "X0 pointwise fixed (20 samples)");
  c.require(rep.pair_intersections_match, "X_j and X_l meet in S_jl");
  c.require(rep.triple_empty, "X1, X2, X3 triple intersection empty");
  c.require(rep.triple_points_distinct, "three distinct triple points with X0");
  c.require(rep.curve_pair_points_distinct, "distinct meeting points of the S curves");
  for (const auto& t : rep.x0_triples)
    c.require(t.point_count == 1, "each X0 triple intersection is a single point");

  // 20 fresh random points on X0 are fixed.
  for (int s = 0; s < 20; ++s) {
    PointY y;
    y.coords.assign(7, Rat(0));
    for (std::size_t i = 1; i < 7; ++i) y.coords[i] = fixtures::random_nonzero_rat(rng);
    c.require(orbit_dimension(quotient_map(y, f), f) == 0, "fixed point sample on X0");
  }
  // generic points of X1, X2, X3 move along one-dimensional orbits
  for (std::size_t j = 1; j <= 3; ++j)
    for (int s = 0; s < 10; ++s) {
      PointY y;
      y.coords.assign(7, Rat(0));
      for (std::size_t i = 0; i < 7; ++i)
        if (i != j) y.coords[i] = fixtures::random_nonzero_rat(rng);
      c.require(orbit_dimension(quotient_map(y, f), f) == 1,
                "one-dimensional orbit sample on X" + std::to_string(j));
    }
  PointY base{{Rat(1), Rat(1), Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)}};
  c.require(orbit_dimension(quotient_map(base, f), f) == 3, "base point has a 3-dimensional orbit");
  c.finish();
}

static void criterion7() {
  Criterion c{"criterion 7: star-fan identifications with unimodular witnesses"};
  auto rep = component_star_check();
  c.require(rep.ok, "star check report");
  c.require(rep.pairwise_isomorphic, "stars at b1, b2, b3 pairwise isomorphic");
  Fan f = build_paper_fan(3);
  for (const auto& entry : rep.entries) {
    Fan star = star_fan(f, ConeRef{{entry.ray_index}}).fan;
    Fan ref = entry.ray_index == 0 ? projective_plane_fan() : f1_blowup_reference_fan();
    const IntMat& a = entry.witness;
    if (a.rows() == 0) {
      c.require(false, "missing witness at b" + std::to_string(entry.ray_index));
      continue;
    }
    Int d = det(a);
    c.require(d == 1 || d == -1, "witness determinant at b" + std::to_string(entry.ray_index));
    std::map<IntVec, std::size_t> target;
    for (std::size_t i = 0; i < ref.rays().size(); ++i) target[ref.ray(i)] = i;
    std::set<std::vector<std::size_t>> ref_cones(ref.max_cones().begin(),
                                                 ref.max_cones().end());
    bool rays_ok = true, cones_ok = true;
    std::vector<std::size_t> ray_map(star.rays().size());
    for (std::size_t i = 0; i < star.rays().size(); ++i) {
      auto it = target.find(a.apply(star.ray(i)));
      if (it == target.end()) rays_ok = false;
      else ray_map[i] = it->second;
    }
    if (rays_ok)
      for (const auto& mc : star.max_cones()) {
        std::vector<std::size_t> img;
        for (std::size_t i : mc) img.push_back(ray_map[i]);
        std::sort(img.begin(), img.end());
        if (!ref_cones.count(img)) cones_ok = false;
      }
    c.require(rays_ok, "witness ray action at b" + std::to_string(entry.ray_index));
    c.require(cones_ok, "witness cone action at b" + std::to_string(entry.ray_index));
  }
  c.finish();
}

static void criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  Criterion c{"criterion 8: property suites (a)-(e)"};
  std::mt19937_64 rng(808);

  // (a) simplex vs Fourier-Motzkin on 200 generated systems
  {
    int agreed = 0;
    for (int trial = 0; trial < 200; ++trial) {
      LinearSystem sys = fixtures::random_system(rng);
      auto res = feasible(sys);
      bool evidence = res.feasible() ? satisfies(sys, *res.witness)
                                     : verify_farkas(sys, *res.certificate);
      if (!evidence) {
        c.require(false, "(a) evidence failed on a generated system");
        continue;
      }
      if (fm_feasible(sys) == res.feasible()) ++agreed;
    }
    c.require(agreed == 200, "(a) simplex/FM agreement " + std::to_string(agreed) + "/200");
  }

  // (b) completeness vs Monte-Carlo on a pool of fans, 1000 directions each
  {
    std::vector<Fan> pool = {fixtures::p1_fan(),      projective_plane_fan(),
                             fixtures::p1xp1_fan(),   fixtures::p3_fan(),
                             fixtures::p1_cubed_fan(), fixtures::c2_fan(),
                             fixtures::c3_fan(),      build_paper_fan(3),
                             f1_blowup_reference_fan()};
    Fan p2 = projective_plane_fan();
    pool.push_back(Fan(2, p2.rays(), {{0, 1}, {1, 2}}));
    Fan p3 = fixtures::p3_fan();
    pool.push_back(Fan(3, p3.rays(), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
    int built = 0;
    while (built < 10) {
      Polytope p = fixtures::random_polytope(rng, 2 + built % 2);
      try {
        pool.push_back(dual_fan_of_polytope(p));
        ++built;
      } catch (const std::invalid_argument&) {
      }
    }
    c.require(pool.size() >= 20, "(b) fan pool size " + std::to_string(pool.size()));
    for (std::size_t i = 0; i < pool.size(); ++i)
      c.require(is_complete(pool[i]) == fixtures::mc_complete(pool[i], rng, 1000),
                "(b) disagreement on pool fan " + std::to_string(i));
  }

  // (c) dual fans of random polytopes are projective
  {
    int built = 0;
    while (built < 20) {
      Polytope p = fixtures::random_polytope(rng, 2 + built % 2);
      try {
        Fan f = dual_fan_of_polytope(p);
        auto verdict = is_projective(f);
        c.require(verdict.projective, "(c) dual fan came out non-projective");
        c.require(verdict.support && verify_support_function(f, *verdict.support),
                  "(c) support function re-check");
        ++built;
      } catch (const std::invalid_argument&) {
      }
    }
  }

  // (d) the quotient is constant on orbits
  {
    Fan f = build_paper_fan(3);
    QuasitorusData q = quasitorus(f);
    for (int trial = 0; trial < 100; ++trial) {
      PointY y = fixtures::random_point_in_Y(rng, f);
      GroupElement g = fixtures::random_group_element(rng, 4);
      c.require(points_equal(quotient_map(y, f), quotient_map(group_act(g, y, q), f), f),
                "(d) quotient moved under the group action");
    }
  }

  // (e) additivity and upstairs/downstairs equivariance
  {
    Fan f = build_paper_fan(3);
    for (int trial = 0; trial < 100; ++trial) {
      PointY y = fixtures::random_point_in_Y(rng, f);
      RatVec c1(3), c2(3);
      for (auto& x : c1) x = fixtures::random_rat(rng, -4, 4, 3);
      for (auto& x : c2) x = fixtures::random_rat(rng, -4, 4, 3);
      RatVec sum(3);
      for (std::size_t j = 0; j < 3; ++j) sum[j] = c1[j] + c2[j];
      PointY lhs = additive_act(AdditiveParams{sum}, y, f);
      PointY rhs = additive_act(AdditiveParams{c1}, additive_act(AdditiveParams{c2}, y, f), f);
      c.require(lhs.coords == rhs.coords, "(e) additivity in the parameters");
      ChartPoint down = additive_act_X(AdditiveParams{c1}, quotient_map(y, f), f);
      ChartPoint up = quotient_map(additive_act(AdditiveParams{c1}, y, f), f);
      c.require(points_equal(down, up, f), "(e) equivariance through the quotient");
    }
  }

  double elapsed = seconds_since(t0);
  c.require(elapsed < 120.0, "property suites took " + fmt(elapsed));
  c.details.push_back("property suites completed in " + fmt(elapsed));
  c.finish();
}

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::cout << "acceptance total: " << fmt(seconds_since(t0)) << ", " << failures
            << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
