#include "toric/projectivity.hpp"

#include "toric/additive.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SupportSystem build_support_system_detailed(const Fan& f) {
  require(is_complete(f), "build_support_system: fan is not complete");
  const std::size_t n = f.rank();
  const std::size_t m = f.max_cones().size();

  SupportSystem out;
  out.system.num_vars = n * m;
  out.wall_list = walls(f);

  for (const Wall& w : out.wall_list) {
    const std::size_t p = w.incident[0];
    const std::size_t q = w.incident[1];
    for (std::size_t shared_ray : w.shared.ray_indices) {
      RatVec row(out.system.num_vars, Rat(0));
      const IntVec& g = f.ray(shared_ray);
      for (std::size_t c = 0; c < n; ++c) {
        row[p * n + c] += Rat(g[c]);
        row[q * n + c] -= Rat(g[c]);
      }
      out.system.equalities.emplace_back(std::move(row), Rat(0));
    }
    std::size_t off = f.max_cones()[q].front();
    for (std::size_t i : f.max_cones()[q])
      if (!std::binary_search(w.shared.ray_indices.begin(), w.shared.ray_indices.end(), i)) {
        off = i;
        break;
      }
    out.off_ray.push_back(off);
    RatVec row(out.system.num_vars, Rat(0));
    const IntVec& v = f.ray(off);
    for (std::size_t c = 0; c < n; ++c) {
      row[p * n + c] += Rat(v[c]);
      row[q * n + c] -= Rat(v[c]);
    }
    out.system.inequalities.emplace_back(std::move(row), Rat(1));
  }
  return out;
}

LinearSystem build_support_system(const Fan& f) {
  return build_support_system_detailed(f).system;
}

bool verify_support_function(const Fan& f, const SupportFunction& s) {
  const std::size_t n = f.rank();
  if (s.cone_functionals.size() != f.max_cones().size()) return false;
  for (const auto& u : s.cone_functionals)
    if (u.size() != n) return false;
  for (const Wall& w : walls(f)) {
    if (w.incident.size() != 2) return false;
    const RatVec& up = s.cone_functionals[w.incident[0]];
    const RatVec& uq = s.cone_functionals[w.incident[1]];
    for (std::size_t shared_ray : w.shared.ray_indices)
      if (dot(up, f.ray(shared_ray)) != dot(uq, f.ray(shared_ray))) return false;
    for (std::size_t side = 0; side < 2; ++side) {
      // The neighbour's off-wall ray must see a strict jump from either side.
      const std::size_t self = w.incident[side], other = w.incident[1 - side];
      for (std::size_t i : f.max_cones()[other]) {
        if (std::binary_search(w.shared.ray_indices.begin(), w.shared.ray_indices.end(), i))
          continue;
        if (dot(s.cone_functionals[self], f.ray(i)) - dot(s.cone_functionals[other], f.ray(i)) <= 0)
          return false;
      }
    }
  }
  return true;
}

ProjectivityVerdict is_projective(const Fan& f) {
  auto built = build_support_system_detailed(f);
  auto outcome = feasible(built.system);
  ProjectivityVerdict verdict;
  verdict.system = std::move(built.system);
  const std::size_t n = f.rank();
  if (outcome.feasible()) {
    SupportFunction s;
    for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
      RatVec u(n);
      for (std::size_t j = 0; j < n; ++j) u[j] = (*outcome.witness)[c * n + j];
      s.cone_functionals.push_back(std::move(u));
    }
    if (!verify_support_function(f, s))
      throw std::logic_error("is_projective: witness failed re-verification");
    verdict.projective = true;
    verdict.support = std::move(s);
  } else {
    if (!verify_farkas(verdict.system, *outcome.certificate))
      throw std::logic_error("is_projective: certificate failed re-verification");
    verdict.projective = false;
    verdict.certificate = std::move(outcome.certificate);
  }
  return verdict;
}

PaperCertificateReport verify_paper_certificate(std::size_t n) {
  require(n >= 3, "verify_paper_certificate: n must be at least 3");
  Fan f = build_paper_fan(n);

  // Ray layout of the family fan: b_i at index i (0..n), a_j at index n+j.
  auto b = [&](std::size_t i) { return i; };
  auto a = [&](std::size_t j) { return n + j; };
  // Maximal cone over A'_{row,col}, rows and columns both 1-based.
  auto cone_at = [&](std::size_t row, std::size_t col) { return 1 + (row - 1) * n + (col - 1); };

  PaperCertificateReport report;
  report.n = n;
  report.ok = true;

  for (std::size_t i = 1; i <= n; ++i) {
    PaperChainStep step;
    step.i = i;
    step.prev = (i == 1) ? n : i - 1;

    IntVec lhs = sub(add(f.ray(a(i)), f.ray(b(step.prev))), f.ray(a(step.prev)));
    step.identity_ok = (lhs == f.ray(b(i)));

    // The triple {a_i, b_{i-1}, a_{i-1}} spans a face of the first cone in
    // row i-2 (cyclically); b_i sits one wall further along the row.
    std::size_t row = ((i + n - 3) % n) + 1;
    step.triple_cone = cone_at(row, 1);
    step.neighbor_cone = cone_at(row, 2);

    const auto& omega = f.max_cones()[step.triple_cone];
    bool triple_inside = std::binary_search(omega.begin(), omega.end(), a(i)) &&
                         std::binary_search(omega.begin(), omega.end(), b(step.prev)) &&
                         std::binary_search(omega.begin(), omega.end(), a(step.prev));

    std::vector<IntVec> gens;
    for (std::size_t idx : omega) gens.push_back(f.ray(idx));
    auto sol = solve_rational(IntMat::from_columns(gens), to_rat(f.ray(b(i))));
    bool excluded = false;
    if (sol) {
      step.expansion = *sol;
      for (const Rat& c : *sol)
        if (c < 0) {
          excluded = true;
          step.negative_coefficient = c;
          break;
        }
    }

    // The neighbour must share a wall with the triple cone and have b_i as
    // its off-wall ray, so the strict drop is literally a wall inequality.
    const auto& tau = f.max_cones()[step.neighbor_cone];
    std::vector<std::size_t> shared;
    std::set_intersection(omega.begin(), omega.end(), tau.begin(), tau.end(),
                          std::back_inserter(shared));
    bool wall_ok = shared.size() == n - 1 && std::binary_search(tau.begin(), tau.end(), b(i)) &&
                   !std::binary_search(shared.begin(), shared.end(), b(i));

    step.inequality = "phi(a" + std::to_string(i) + ") + phi(b" + std::to_string(step.prev) +
                      ") - phi(a" + std::to_string(step.prev) + ") > phi(b" + std::to_string(i) +
                      ")";
    if (!(step.identity_ok && triple_inside && excluded && wall_ok)) report.ok = false;
    report.steps.push_back(std::move(step));
  }

  std::string lhs, rhs;
  for (std::size_t i = 1; i <= n; ++i) {
    lhs += (i == 1 ? "phi(b" : " + phi(b") + std::to_string(i) + ")";
    rhs += (i == 1 ? "phi(b" : " + phi(b") + std::to_string(i) + ")";
  }
  report.contradiction = "summing the chain: " + lhs + " > " + rhs;
  return report;
}

}  // namespace toric
