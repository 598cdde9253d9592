#include "toric/cox.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<std::size_t> zero_support(const RatVec& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == 0) out.push_back(i);
  return out;
}

// Dual basis of a smooth full-dimensional cone, as rows of the inverse
// generator matrix.
IntMat dual_basis(const Fan& f, const ConeRef& cone) {
  require(cone.ray_indices.size() == f.rank(), "chart cone must be full-dimensional");
  std::vector<IntVec> gens;
  for (std::size_t i : cone.ray_indices) gens.push_back(f.ray(i));
  IntMat g = IntMat::from_columns(gens);
  Int d = det(g);
  require(d == 1 || d == -1, "chart cone generators must form a lattice basis");
  return inverse_unimodular(g);
}

ChartPoint evaluate_chart(const RatVec& y, const Fan& f, const ConeRef& cone) {
  const std::size_t n = f.rank();
  IntMat u = dual_basis(f, cone);
  RatVec coords(n, Rat(1));
  for (std::size_t k = 0; k < n; ++k) {
    Rat value(1);
    bool zero = false;
    for (std::size_t rho = 0; rho < f.rays().size() && !zero; ++rho) {
      Int e = dot(u.row(k), f.ray(rho));
      if (e == 0) continue;
      if (y[rho] == 0) {
        if (e < 0) throw std::logic_error("chart evaluation: zero coordinate with negative exponent");
        zero = true;
      } else {
        value *= rat_pow(y[rho], static_cast<long>(e));
      }
    }
    coords[k] = zero ? Rat(0) : value;
  }
  return {cone, std::move(coords)};
}

}  // namespace

IntMat ray_matrix(const Fan& f) {
  require(!f.rays().empty(), "ray_matrix: fan has no rays");
  return IntMat::from_columns(f.rays());
}

QuasitorusData quasitorus(const Fan& f) {
  IntMat rel = ray_matrix(f);
  require(toric::rank(rel) == f.rank(), "quasitorus: rays do not span the ambient space");
  QuasitorusData q;
  q.kernel_basis = kernel_basis_Z(rel);
  IntMat s = snf(rel).s;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
    if (s(i, i) != 0) q.invariant_factors.push_back(s(i, i));
  q.relations = std::move(rel);
  return q;
}

bool in_Y(const RatVec& x, const Fan& f) {
  require(x.size() == f.rays().size(), "in_Y: coordinate count mismatch");
  auto support = zero_support(x);
  for (const auto& c : f.max_cones())
    if (std::includes(c.begin(), c.end(), support.begin(), support.end())) return true;
  return support.empty();
}

PointY group_act(const GroupElement& g, const PointY& y, const QuasitorusData& q) {
  require(g.params.size() == q.kernel_basis.rows(), "group_act: parameter count mismatch");
  require(y.coords.size() == q.kernel_basis.cols(), "group_act: coordinate count mismatch");
  for (const Rat& t : g.params) require(t != 0, "group_act: zero parameter");
  PointY out;
  out.coords.resize(y.coords.size());
  for (std::size_t rho = 0; rho < y.coords.size(); ++rho) {
    Rat factor(1);
    for (std::size_t k = 0; k < g.params.size(); ++k) {
      Int e = q.kernel_basis(k, rho);
      if (e != 0) factor *= rat_pow(g.params[k], static_cast<long>(e));
    }
    out.coords[rho] = y.coords[rho] * factor;
  }
  return out;
}

PointY group_act(const GroupElement& g, const PointY& y, const Fan& f) {
  return group_act(g, y, quasitorus(f));
}

ChartPoint quotient_map(const PointY& y, const Fan& f) {
  require(y.coords.size() == f.rays().size(), "quotient_map: coordinate count mismatch");
  auto support = zero_support(y.coords);
  const std::vector<std::size_t>* chart = nullptr;
  for (const auto& c : f.max_cones()) {
    if (c.size() != f.rank()) continue;
    if (!std::includes(c.begin(), c.end(), support.begin(), support.end())) continue;
    if (chart == nullptr || c < *chart) chart = &c;
  }
  require(chart != nullptr, "quotient_map: point lies in the irrelevant locus");
  return evaluate_chart(y.coords, f, ConeRef{*chart});
}

PointY lift(const ChartPoint& x, const Fan& f) {
  require(x.cone.ray_indices.size() == x.coords.size(), "lift: chart size mismatch");
  PointY y;
  y.coords.assign(f.rays().size(), Rat(1));
  for (std::size_t k = 0; k < x.cone.ray_indices.size(); ++k)
    y.coords[x.cone.ray_indices[k]] = x.coords[k];
  return y;
}

ChartPoint chart_transition(const ChartPoint& x, const ConeRef& target, const Fan& f) {
  require(is_cone_of(f, target), "chart_transition: target is not a cone of the fan");
  PointY y = lift(x, f);
  auto support = zero_support(y.coords);
  require(std::includes(target.ray_indices.begin(), target.ray_indices.end(), support.begin(),
                        support.end()),
          "chart_transition: point does not lie in the target chart");
  return evaluate_chart(y.coords, f, target);
}

bool points_equal(const ChartPoint& x1, const ChartPoint& x2, const Fan& f) {
  for (const auto& c : f.max_cones()) {
    if (c.size() != f.rank()) continue;
    ConeRef target{c};
    ChartPoint a{target, {}}, b{target, {}};
    try {
      a = chart_transition(x1, target, f);
      b = chart_transition(x2, target, f);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (a.coords == b.coords) return true;
  }
  return false;
}

ConeRef orbit_label(const ChartPoint& x, const Fan&) {
  require(x.cone.ray_indices.size() == x.coords.size(), "orbit_label: chart size mismatch");
  ConeRef label;
  for (std::size_t k = 0; k < x.coords.size(); ++k)
    if (x.coords[k] == 0) label.ray_indices.push_back(x.cone.ray_indices[k]);
  std::sort(label.ray_indices.begin(), label.ray_indices.end());
  return label;
}

}  // namespace toric
