#include "toric/fan.hpp"

#include "toric/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<std::size_t> sorted_union(const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::size_t> sorted_intersection(const std::vector<std::size_t>& a,
                                             const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_all(const std::vector<std::size_t>& super, const std::vector<std::size_t>& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<IntVec> rays, std::vector<std::vector<std::size_t>> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  require(rank_ > 0, "Fan: rank must be positive");
  std::set<IntVec> distinct;
  for (const IntVec& r : rays_) {
    require(r.size() == rank_, "Fan: ray length does not match rank");
    require(!is_zero(r), "Fan: zero ray");
    require(primitive(r) == r, "Fan: ray generator is not primitive");
    require(distinct.insert(r).second, "Fan: duplicate ray");
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<bool> used(rays_.size(), false);
  for (const auto& c : max_cones_) {
    require(!c.empty(), "Fan: empty maximal cone");
    require(std::is_sorted(c.begin(), c.end()), "Fan: cone indices not sorted");
    require(std::adjacent_find(c.begin(), c.end()) == c.end(), "Fan: repeated cone index");
    require(c.back() < rays_.size(), "Fan: cone index out of range");
    require(c.size() <= rank_, "Fan: cone has more generators than the rank allows");
    require(seen.insert(c).second, "Fan: duplicate maximal cone");
    std::vector<IntVec> gens;
    for (std::size_t i : c) {
      gens.push_back(rays_[i]);
      used[i] = true;
    }
    require(toric::rank(IntMat::from_columns(gens)) == c.size(),
            "Fan: cone generators are linearly dependent (fan not simplicial)");
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    require(used[i] || max_cones_.empty(), "Fan: ray not used by any maximal cone");
}

std::optional<RatVec> cone_coordinates(const Fan& f, const ConeRef& c, const RatVec& x) {
  if (c.ray_indices.empty()) {
    if (is_zero(x)) return RatVec{};
    return std::nullopt;
  }
  std::vector<IntVec> gens;
  for (std::size_t i : c.ray_indices) gens.push_back(f.ray(i));
  auto sol = solve_rational(IntMat::from_columns(gens), x);
  if (!sol) return std::nullopt;
  for (const Rat& l : *sol)
    if (l < 0) return std::nullopt;
  return sol;
}

bool cone_contains(const Fan& f, const ConeRef& c, const RatVec& x) {
  return cone_coordinates(f, c, x).has_value();
}

bool is_cone_of(const Fan& f, const ConeRef& c) {
  if (c.ray_indices.empty()) return true;
  if (!std::is_sorted(c.ray_indices.begin(), c.ray_indices.end())) return false;
  if (c.ray_indices.back() >= f.rays().size()) return false;
  for (const auto& mc : f.max_cones())
    if (contains_all(mc, c.ray_indices)) return true;
  return false;
}

ValidationReport fan_validate(const Fan& f) {
  ValidationReport report;
  const std::size_t n = f.rank();
  const auto& cones = f.max_cones();
  for (std::size_t p = 0; p < cones.size(); ++p) {
    for (std::size_t q = p + 1; q < cones.size(); ++q) {
      auto shared = sorted_intersection(cones[p], cones[q]);

      // Separating functional: zero exactly on the shared rays, strictly
      // positive on the rest of cone p, strictly negative on the rest of
      // cone q. It exists iff the two cones meet in the common face spanned
      // by the shared rays.
      LinearSystem sep;
      sep.num_vars = n;
      for (std::size_t i : shared) sep.equalities.emplace_back(to_rat(f.ray(i)), Rat(0));
      for (std::size_t i : cones[p])
        if (!std::binary_search(shared.begin(), shared.end(), i))
          sep.inequalities.emplace_back(to_rat(f.ray(i)), Rat(1));
      for (std::size_t i : cones[q])
        if (!std::binary_search(shared.begin(), shared.end(), i))
          sep.inequalities.emplace_back(to_rat(negate(f.ray(i))), Rat(1));
      if (feasible(sep).feasible()) continue;

      FanViolation v;
      v.cone_a = p;
      v.cone_b = q;
      v.message = "maximal cones " + std::to_string(p) + " and " + std::to_string(q) +
                  " do not intersect in a common face";
      // Hunt for a point witnessing the illegal overlap: a member of both
      // cones whose unique coordinates use a non-shared generator.
      const std::size_t np = cones[p].size(), nq = cones[q].size();
      for (std::size_t off = 0; off < np + nq && !v.overlap_point; ++off) {
        std::size_t ray = off < np ? cones[p][off] : cones[q][off - np];
        if (std::binary_search(shared.begin(), shared.end(), ray)) continue;
        LinearSystem ov;
        ov.num_vars = np + nq;
        for (std::size_t coord = 0; coord < n; ++coord) {
          RatVec row(ov.num_vars, Rat(0));
          for (std::size_t i = 0; i < np; ++i) row[i] = Rat(f.ray(cones[p][i])[coord]);
          for (std::size_t j = 0; j < nq; ++j) row[np + j] = -Rat(f.ray(cones[q][j])[coord]);
          ov.equalities.emplace_back(std::move(row), Rat(0));
        }
        for (std::size_t i = 0; i < ov.num_vars; ++i) {
          RatVec row(ov.num_vars, Rat(0));
          row[i] = 1;
          ov.inequalities.emplace_back(std::move(row), Rat(i == off ? 1 : 0));
        }
        auto res = feasible(ov);
        if (res.feasible()) {
          RatVec point(n, Rat(0));
          for (std::size_t i = 0; i < np; ++i)
            for (std::size_t coord = 0; coord < n; ++coord)
              point[coord] += (*res.witness)[i] * Rat(f.ray(cones[p][i])[coord]);
          v.overlap_point = std::move(point);
        }
      }
      report.ok = false;
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

bool is_smooth(const Fan& f) {
  for (const auto& c : f.max_cones()) {
    std::vector<IntVec> gens;
    for (std::size_t i : c) gens.push_back(f.ray(i));
    IntMat g = IntMat::from_columns(gens);
    if (c.size() == f.rank()) {
      Int d = det(g);
      if (d != 1 && d != -1) return false;
    } else {
      IntMat s = snf(g).s;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (s(i, i) != 1) return false;
    }
  }
  return true;
}

std::vector<Wall> walls(const Fan& f) {
  const std::size_t n = f.rank();
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> incidence;
  for (std::size_t m = 0; m < f.max_cones().size(); ++m) {
    const auto& c = f.max_cones()[m];
    if (c.size() != n) continue;
    for (std::size_t skip = 0; skip < c.size(); ++skip) {
      std::vector<std::size_t> facet;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != skip) facet.push_back(c[i]);
      incidence[facet].push_back(m);
    }
  }
  std::vector<Wall> out;
  for (auto& [shared, inc] : incidence) out.push_back({ConeRef{shared}, std::move(inc)});
  return out;
}

bool is_complete(const Fan& f) {
  if (f.max_cones().empty()) return false;
  for (const auto& c : f.max_cones())
    if (c.size() != f.rank()) return false;
  for (const Wall& w : walls(f))
    if (w.incident.size() != 2) return false;
  return true;
}

std::vector<std::vector<std::size_t>> primitive_collections(const Fan& f) {
  const std::size_t r = f.rays().size();
  require(r <= 63, "primitive_collections: too many rays");
  std::vector<std::uint64_t> cone_masks;
  for (const auto& c : f.max_cones()) {
    std::uint64_t m = 0;
    for (std::size_t i : c) m |= (1ull << i);
    cone_masks.push_back(m);
  }
  auto is_face = [&](std::uint64_t mask) {
    for (std::uint64_t cm : cone_masks)
      if ((mask & ~cm) == 0) return true;
    return false;
  };

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> combo;
  // Lexicographic combinations of each size; a minimal non-face is a
  // non-face all of whose one-smaller subsets are faces.
  auto scan = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
    if (remaining == 0) {
      std::uint64_t mask = 0;
      for (std::size_t i : combo) mask |= (1ull << i);
      if (is_face(mask)) return;
      for (std::size_t i : combo)
        if (!is_face(mask & ~(1ull << i))) return;
      out.push_back(combo);
      return;
    }
    for (std::size_t i = start; i + remaining <= r + 0u; ++i) {
      if (i >= r) break;
      combo.push_back(i);
      self(self, i + 1, remaining - 1);
      combo.pop_back();
    }
  };
  for (std::size_t size = 1; size <= r; ++size) scan(scan, 0, size);
  return out;
}

std::vector<ConeRef> all_cones(const Fan& f) {
  std::set<std::vector<std::size_t>> seen;
  seen.insert(std::vector<std::size_t>{});
  for (const auto& c : f.max_cones()) {
    const std::size_t k = c.size();
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1ull << i)) sub.push_back(c[i]);
      seen.insert(std::move(sub));
    }
  }
  std::vector<ConeRef> out;
  for (const auto& s : seen) out.push_back(ConeRef{s});
  std::sort(out.begin(), out.end(), [](const ConeRef& a, const ConeRef& b) {
    if (a.ray_indices.size() != b.ray_indices.size())
      return a.ray_indices.size() < b.ray_indices.size();
    return a.ray_indices < b.ray_indices;
  });
  return out;
}

StarFan star_fan(const Fan& f, const ConeRef& tau) {
  require(is_cone_of(f, tau), "star_fan: tau is not a cone of the fan");
  const std::size_t n = f.rank();
  const std::size_t k = tau.ray_indices.size();
  require(k < n, "star_fan: tau must be a proper cone");

  if (k == 0) {
    std::vector<std::size_t> ids(f.rays().size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return {f, IntMat::identity(n), std::move(ids)};
  }

  std::vector<IntVec> tau_gens;
  for (std::size_t i : tau.ray_indices) tau_gens.push_back(f.ray(i));
  auto nf = snf(IntMat::from_columns(tau_gens));
  for (std::size_t i = 0; i < k; ++i)
    require(nf.s(i, i) == 1, "star_fan: cone generators do not span a direct summand");
  // T = diag(V, I) * U maps the cone generators onto the first k basis
  // vectors; the quotient projection reads off the remaining coordinates.
  IntMat t = IntMat::identity(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t(i, j) = nf.v(i, j);
  t = t * nf.u;
  IntMat projection(n - k, n);
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) projection(i - k, j) = t(i, j);

  std::vector<IntVec> star_rays;
  std::vector<std::size_t> source;
  std::map<IntVec, std::size_t> ray_index;
  std::set<std::vector<std::size_t>> cone_set;
  for (const auto& c : f.max_cones()) {
    if (!contains_all(c, tau.ray_indices)) continue;
    std::vector<std::size_t> image_cone;
    for (std::size_t i : c) {
      if (std::binary_search(tau.ray_indices.begin(), tau.ray_indices.end(), i)) continue;
      IntVec img = primitive(projection.apply(f.ray(i)));
      auto [it, inserted] = ray_index.try_emplace(img, star_rays.size());
      if (inserted) {
        star_rays.push_back(img);
        source.push_back(i);
      }
      image_cone.push_back(it->second);
    }
    std::sort(image_cone.begin(), image_cone.end());
    cone_set.insert(std::move(image_cone));
  }
  std::vector<std::vector<std::size_t>> star_cones(cone_set.begin(), cone_set.end());
  return {Fan(n - k, std::move(star_rays), std::move(star_cones)), std::move(projection),
          std::move(source)};
}

std::vector<OrbitPosetNode> orbit_poset(const Fan& f) {
  auto cones = all_cones(f);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < cones.size(); ++i) index[cones[i].ray_indices] = i;
  std::vector<OrbitPosetNode> nodes;
  for (const auto& c : cones) {
    OrbitPosetNode node;
    node.cone = c;
    node.orbit_dim = f.rank() - c.ray_indices.size();
    for (std::size_t skip = 0; skip < c.ray_indices.size(); ++skip) {
      std::vector<std::size_t> facet;
      for (std::size_t i = 0; i < c.ray_indices.size(); ++i)
        if (i != skip) facet.push_back(c.ray_indices[i]);
      node.covered.push_back(index.at(facet));
    }
    std::sort(node.covered.begin(), node.covered.end());
    nodes.push_back(std::move(node));
  }
  return nodes;
}

std::vector<ConeRef> closure_intersection(const Fan& f, const ConeRef& tau1, const ConeRef& tau2) {
  require(is_cone_of(f, tau1), "closure_intersection: tau1 is not a cone of the fan");
  require(is_cone_of(f, tau2), "closure_intersection: tau2 is not a cone of the fan");
  auto target = sorted_union(tau1.ray_indices, tau2.ray_indices);
  std::vector<ConeRef> out;
  for (const auto& c : all_cones(f))
    if (contains_all(c.ray_indices, target)) out.push_back(c);
  return out;
}

namespace {

std::vector<RatVec> mapped_generators(const IntMat& a, const Fan& from, const ConeRef& sigma) {
  std::vector<RatVec> images;
  for (std::size_t i : sigma.ray_indices) {
    IntVec img = a.apply(from.ray(i));
    images.push_back(to_rat(img));
  }
  return images;
}

}  // namespace

bool map_compatible(const IntMat& a, const Fan& from, const Fan& to) {
  require(a.cols() == from.rank() && a.rows() == to.rank(), "map_compatible: shape mismatch");
  for (const auto& mc : from.max_cones()) {
    auto images = mapped_generators(a, from, ConeRef{mc});
    bool housed = false;
    for (const auto& tc : to.max_cones()) {
      ConeRef target{tc};
      bool all_in = true;
      for (const auto& img : images)
        if (!cone_contains(to, target, img)) {
          all_in = false;
          break;
        }
      if (all_in) {
        housed = true;
        break;
      }
    }
    if (!housed && !images.empty()) return false;
  }
  return true;
}

ConeRef orbit_image(const IntMat& a, const Fan& from, const Fan& to, const ConeRef& sigma) {
  require(is_cone_of(from, sigma), "orbit_image: sigma is not a cone of the fan");
  auto images = mapped_generators(a, from, sigma);
  if (images.empty()) return ConeRef{};

  for (const auto& tc : to.max_cones()) {
    ConeRef target{tc};
    std::vector<RatVec> coords;
    bool all_in = true;
    for (const auto& img : images) {
      auto c = cone_coordinates(to, target, img);
      if (!c) {
        all_in = false;
        break;
      }
      coords.push_back(std::move(*c));
    }
    if (!all_in) continue;
    // Minimal face: the generators actually used by some image.
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < tc.size(); ++i) {
      bool hit = false;
      for (const auto& c : coords)
        if (c[i] != 0) {
          hit = true;
          break;
        }
      if (hit) used.push_back(tc[i]);
    }
    ConeRef face{used};
    for (const auto& img : images)
      if (!cone_contains(to, face, img))
        throw std::logic_error("orbit_image: minimal face does not contain the image");
    return face;
  }
  throw std::invalid_argument("orbit_image: map is not compatible with the fans on this cone");
}

std::optional<IntMat> fan_isomorphic(const Fan& f1, const Fan& f2) {
  require(f1.rank() == f2.rank(), "fan_isomorphic: rank mismatch");
  require(is_smooth(f1) && is_smooth(f2), "fan_isomorphic: fans must be smooth");
  if (f1.rays().size() != f2.rays().size()) return std::nullopt;
  if (f1.max_cones().size() != f2.max_cones().size()) return std::nullopt;
  {
    std::vector<std::size_t> s1, s2;
    for (const auto& c : f1.max_cones()) s1.push_back(c.size());
    for (const auto& c : f2.max_cones()) s2.push_back(c.size());
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  const std::size_t n = f1.rank();

  const std::vector<std::size_t>* base = nullptr;
  for (const auto& c : f1.max_cones())
    if (c.size() == n) {
      base = &c;
      break;
    }
  require(base != nullptr, "fan_isomorphic: no full-dimensional maximal cone");

  std::vector<IntVec> base_gens;
  for (std::size_t i : *base) base_gens.push_back(f1.ray(i));
  IntMat g1_inv = inverse_unimodular(IntMat::from_columns(base_gens));

  std::map<IntVec, std::size_t> ray_of_f2;
  for (std::size_t i = 0; i < f2.rays().size(); ++i) ray_of_f2[f2.ray(i)] = i;
  std::set<std::vector<std::size_t>> cones_of_f2(f2.max_cones().begin(), f2.max_cones().end());

  for (const auto& c2 : f2.max_cones()) {
    if (c2.size() != n) continue;
    std::vector<std::size_t> perm = c2;
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<IntVec> target_gens;
      for (std::size_t i : perm) target_gens.push_back(f2.ray(i));
      IntMat a = IntMat::from_columns(target_gens) * g1_inv;

      bool good = true;
      std::vector<std::size_t> ray_map(f1.rays().size());
      for (std::size_t i = 0; i < f1.rays().size() && good; ++i) {
        auto it = ray_of_f2.find(a.apply(f1.ray(i)));
        if (it == ray_of_f2.end()) good = false;
        else ray_map[i] = it->second;
      }
      for (const auto& c1 : f1.max_cones()) {
        if (!good) break;
        std::vector<std::size_t> image;
        for (std::size_t i : c1) image.push_back(ray_map[i]);
        std::sort(image.begin(), image.end());
        if (!cones_of_f2.count(image)) good = false;
      }
      if (good) return a;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

namespace {

IntVec cross3(const IntVec& a, const IntVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

Fan dual_fan_of_polytope(const Polytope& p) {
  require(p.rank >= 1 && p.rank <= 3, "dual_fan_of_polytope: rank must be 1, 2 or 3");
  std::vector<IntVec> pts;
  std::set<IntVec> seen;
  for (const auto& v : p.vertices) {
    require(v.size() == p.rank, "dual_fan_of_polytope: vertex length mismatch");
    if (seen.insert(v).second) pts.push_back(v);
  }
  require(pts.size() >= p.rank + 1, "dual_fan_of_polytope: degenerate polytope");
  require(toric::rank(IntMat::from_rows(pts)) == p.rank,
          "dual_fan_of_polytope: polytope is not full-dimensional");

  // Strict interiority of the origin: a strictly positive dependence among
  // the vertices exists iff 0 is interior to a full-dimensional hull.
  {
    LinearSystem interior;
    interior.num_vars = pts.size();
    for (std::size_t coord = 0; coord < p.rank; ++coord) {
      RatVec row(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) row[i] = Rat(pts[i][coord]);
      interior.equalities.emplace_back(std::move(row), Rat(0));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      RatVec row(pts.size(), Rat(0));
      row[i] = 1;
      interior.inequalities.emplace_back(std::move(row), Rat(1));
    }
    require(feasible(interior).feasible(), "dual_fan_of_polytope: origin is not strictly interior");
  }

  // True vertices: points some functional strictly minimizes.
  std::vector<std::size_t> vertex_ids;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    LinearSystem vert;
    vert.num_vars = p.rank;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      vert.inequalities.emplace_back(to_rat(sub(pts[j], pts[i])), Rat(1));
    }
    if (feasible(vert).feasible()) vertex_ids.push_back(i);
  }
  require(vertex_ids.size() >= p.rank + 1, "dual_fan_of_polytope: degenerate polytope");

  std::vector<IntVec> fan_rays;
  std::map<IntVec, std::size_t> ray_index;
  std::vector<std::vector<std::size_t>> max_cones;

  for (std::size_t vi : vertex_ids) {
    std::vector<IntVec> constraints;  // <w, x> >= 0 rows of the normal cone
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == vi) continue;
      IntVec w = sub(pts[j], pts[vi]);
      if (!is_zero(w)) constraints.push_back(w);
    }
    auto admits = [&](const IntVec& d) {
      for (const auto& w : constraints)
        if (dot(w, d) < 0) return false;
      return true;
    };

    std::set<IntVec> extremes;
    if (p.rank == 1) {
      for (IntVec d : {IntVec{Int(1)}, IntVec{Int(-1)}})
        if (admits(d)) extremes.insert(d);
    } else if (p.rank == 2) {
      for (const auto& w : constraints) {
        IntVec d{-w[1], w[0]};
        for (const IntVec& cand : {d, negate(d)})
          if (!is_zero(cand) && admits(cand)) extremes.insert(primitive(cand));
      }
    } else {
      for (std::size_t a = 0; a < constraints.size(); ++a)
        for (std::size_t b = a + 1; b < constraints.size(); ++b) {
          IntVec d = cross3(constraints[a], constraints[b]);
          if (is_zero(d)) continue;
          for (const IntVec& cand : {d, negate(d)})
            if (admits(cand)) extremes.insert(primitive(cand));
        }
    }
    require(extremes.size() >= p.rank, "dual_fan_of_polytope: pinched normal cone");
    require(extremes.size() <= p.rank, "dual_fan_of_polytope: normal fan is not simplicial");

    std::vector<std::size_t> cone;
    for (const IntVec& d : extremes) {
      auto [it, inserted] = ray_index.try_emplace(d, fan_rays.size());
      if (inserted) fan_rays.push_back(d);
      cone.push_back(it->second);
    }
    std::sort(cone.begin(), cone.end());
    max_cones.push_back(std::move(cone));
  }

  Fan fan(p.rank, std::move(fan_rays), std::move(max_cones));
  if (!fan_validate(fan).ok || !is_complete(fan))
    throw std::invalid_argument("dual_fan_of_polytope: construction failed fan validation");
  return fan;
}

}  // namespace toric
