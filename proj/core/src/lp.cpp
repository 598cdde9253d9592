#include "toric/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toric {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Phase-1 simplex for { rows . t >= rhs } with t free. Either a witness t or
// dual multipliers lambda >= 0 with lambda^T rows = 0 and lambda^T rhs > 0.
struct ReducedOutcome {
  std::optional<RatVec> witness;
  std::optional<RatVec> multipliers;
};

// Free variables are split t = tp - tn; each inequality gets a surplus and an
// artificial, rows are flipped to make the right-hand side nonnegative, and
// sum(artificials) is minimized. Bland's rule picks the lowest-index entering
// column and breaks ratio ties by the lowest basic variable index, so the
// tableau path is deterministic and never cycles.
ReducedOutcome phase1_simplex(const std::vector<RatVec>& rows, const RatVec& rhs, std::size_t k) {
  const std::size_t m = rows.size();
  if (m == 0) return {RatVec(k, Rat(0)), std::nullopt};

  const std::size_t cols = 2 * k + 2 * m;  // tp tn s z
  std::vector<int> eps(m, 1);
  std::vector<RatVec> tab(m, RatVec(cols + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i] < 0) eps[i] = -1;
    for (std::size_t j = 0; j < k; ++j) {
      Rat a = rows[i][j] * eps[i];
      tab[i][j] = a;
      tab[i][k + j] = -a;
    }
    tab[i][2 * k + i] = Rat(-eps[i]);
    tab[i][2 * k + m + i] = 1;
    tab[i][cols] = rhs[i] * eps[i];
  }

  RatVec obj(cols + 1, Rat(0));  // reduced costs; last cell = -objective
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < 2 * k + m) obj[j] -= tab[i][j];
      else if (j == cols) obj[j] -= tab[i][j];

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = 2 * k + m + i;

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rat ratio = tab[i][cols] / tab[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw std::logic_error("phase1_simplex: unbounded phase-1 objective");

    Rat inv = Rat(1) / tab[leave][enter];
    for (std::size_t j = 0; j <= cols; ++j) tab[leave][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rat f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  Rat objective = -obj[cols];
  if (objective == 0) {
    RatVec value(cols, Rat(0));
    for (std::size_t i = 0; i < m; ++i) value[basis[i]] = tab[i][cols];
    RatVec t(k);
    for (std::size_t j = 0; j < k; ++j) t[j] = value[j] - value[k + j];
    return {std::move(t), std::nullopt};
  }

  // Duals from the final reduced costs of the artificial columns.
  RatVec lambda(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rat y = Rat(1) - obj[2 * k + m + i];
    lambda[i] = y * eps[i];
    if (lambda[i] < 0) throw std::logic_error("phase1_simplex: negative dual multiplier");
  }
  return {std::nullopt, std::move(lambda)};
}

FarkasCertificate zero_certificate(const LinearSystem& sys) {
  return {RatVec(sys.equalities.size(), Rat(0)), RatVec(sys.inequalities.size(), Rat(0))};
}

}  // namespace

Feasibility feasible(const LinearSystem& sys) {
  const std::size_t v = sys.num_vars;
  for (const auto& [c, r] : sys.equalities) require(c.size() == v, "feasible: equality width mismatch");
  for (const auto& [c, r] : sys.inequalities) require(c.size() == v, "feasible: inequality width mismatch");

  if (v == 0) {
    for (std::size_t i = 0; i < sys.equalities.size(); ++i)
      if (sys.equalities[i].second != 0) {
        auto cert = zero_certificate(sys);
        cert.eq_multipliers[i] = Rat(1) / sys.equalities[i].second;
        return {std::nullopt, std::move(cert)};
      }
    for (std::size_t i = 0; i < sys.inequalities.size(); ++i)
      if (sys.inequalities[i].second > 0) {
        auto cert = zero_certificate(sys);
        cert.ineq_multipliers[i] = Rat(1) / sys.inequalities[i].second;
        return {std::nullopt, std::move(cert)};
      }
    return {RatVec{}, std::nullopt};
  }

  // Eliminate the equalities first; certificates still refer to the original
  // constraint indices afterwards.
  RatVec x0(v, Rat(0));
  RatMat kernel = RatMat::identity(v);
  const bool has_eq = !sys.equalities.empty();
  RatMat eq_mat;
  if (has_eq) {
    std::vector<RatVec> eq_rows;
    RatVec eq_rhs;
    for (const auto& [c, r] : sys.equalities) {
      eq_rows.push_back(c);
      eq_rhs.push_back(r);
    }
    eq_mat = RatMat::from_rows(eq_rows);
    auto red = rref_with_transform(eq_mat);
    RatVec rhs_red = red.t.apply(eq_rhs);
    for (std::size_t i = red.rank; i < eq_rows.size(); ++i) {
      if (rhs_red[i] != 0) {
        auto cert = zero_certificate(sys);
        Rat scale = Rat(1) / rhs_red[i];
        for (std::size_t j = 0; j < eq_rows.size(); ++j) cert.eq_multipliers[j] = red.t(i, j) * scale;
        return {std::nullopt, std::move(cert)};
      }
    }
    for (std::size_t i = 0; i < red.rank; ++i) x0[red.pivot_cols[i]] = rhs_red[i];
    kernel = kernel_basis_Q(eq_mat);
  }

  const std::size_t k = kernel.rows();
  std::vector<RatVec> red_rows;
  RatVec red_rhs;
  for (const auto& [c, r] : sys.inequalities) {
    RatVec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(c, kernel.row(j));
    red_rows.push_back(std::move(row));
    red_rhs.push_back(r - dot(c, x0));
  }

  auto map_back_infeasible = [&](const RatVec& lambda) -> Feasibility {
    FarkasCertificate cert;
    cert.ineq_multipliers = lambda;
    cert.eq_multipliers.assign(sys.equalities.size(), Rat(0));
    if (has_eq) {
      RatVec g(v, Rat(0));
      for (std::size_t i = 0; i < sys.inequalities.size(); ++i) {
        if (lambda[i] == 0) continue;
        for (std::size_t j = 0; j < v; ++j) g[j] += lambda[i] * sys.inequalities[i].first[j];
      }
      for (Rat& x : g) x = -x;
      auto mu = solve_rational(eq_mat.transposed(), g);
      if (!mu) throw std::logic_error("feasible: certificate lift failed");
      cert.eq_multipliers = *mu;
    }
    return {std::nullopt, std::move(cert)};
  };

  if (k == 0) {
    for (std::size_t i = 0; i < red_rhs.size(); ++i)
      if (red_rhs[i] > 0) {
        RatVec lambda(sys.inequalities.size(), Rat(0));
        lambda[i] = 1;
        return map_back_infeasible(lambda);
      }
    return {std::move(x0), std::nullopt};
  }

  auto outcome = phase1_simplex(red_rows, red_rhs, k);
  if (outcome.witness) {
    RatVec x = x0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((*outcome.witness)[j] == 0) continue;
      for (std::size_t c = 0; c < v; ++c) x[c] += (*outcome.witness)[j] * kernel(j, c);
    }
    return {std::move(x), std::nullopt};
  }
  return map_back_infeasible(*outcome.multipliers);
}

bool verify_farkas(const LinearSystem& sys, const FarkasCertificate& cert) {
  if (cert.eq_multipliers.size() != sys.equalities.size() ||
      cert.ineq_multipliers.size() != sys.inequalities.size())
    throw std::invalid_argument("verify_farkas: multiplier count mismatch");
  for (const Rat& l : cert.ineq_multipliers)
    if (l < 0) return false;
  RatVec lhs(sys.num_vars, Rat(0));
  Rat rhs = 0;
  for (std::size_t i = 0; i < sys.equalities.size(); ++i) {
    const Rat& mu = cert.eq_multipliers[i];
    if (mu == 0) continue;
    for (std::size_t j = 0; j < sys.num_vars; ++j) lhs[j] += mu * sys.equalities[i].first[j];
    rhs += mu * sys.equalities[i].second;
  }
  for (std::size_t i = 0; i < sys.inequalities.size(); ++i) {
    const Rat& l = cert.ineq_multipliers[i];
    if (l == 0) continue;
    for (std::size_t j = 0; j < sys.num_vars; ++j) lhs[j] += l * sys.inequalities[i].first[j];
    rhs += l * sys.inequalities[i].second;
  }
  return is_zero(lhs) && rhs > 0;
}

bool satisfies(const LinearSystem& sys, const RatVec& x) {
  require(x.size() == sys.num_vars, "satisfies: point size mismatch");
  for (const auto& [c, r] : sys.equalities)
    if (dot(c, x) != r) return false;
  for (const auto& [c, r] : sys.inequalities)
    if (dot(c, x) < r) return false;
  return true;
}

namespace {

using Constraint = std::pair<RatVec, Rat>;

// Scale by a positive rational so that all entries (rhs included) are
// integers with content 1; tautologies come back as nullopt.
std::optional<Constraint> normalize_inequality(RatVec coeffs, Rat rhs) {
  Int den_lcm = 1;
  for (const Rat& c : coeffs) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  den_lcm = boost::multiprecision::lcm(den_lcm, denominator(rhs));
  Int content = 0;
  for (Rat& c : coeffs) {
    c *= Rat(den_lcm);
    content = boost::multiprecision::gcd(content, numerator(c));
  }
  rhs *= Rat(den_lcm);
  content = boost::multiprecision::gcd(content, numerator(rhs));
  if (content > 1) {
    for (Rat& c : coeffs) c /= Rat(content);
    rhs /= Rat(content);
  }
  if (is_zero(coeffs) && rhs <= 0) return std::nullopt;  // always true
  return Constraint{std::move(coeffs), std::move(rhs)};
}

RatVec drop_column(const RatVec& v, std::size_t idx) {
  RatVec out;
  out.reserve(v.size() - 1);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (j != idx) out.push_back(v[j]);
  return out;
}

}  // namespace

LinearSystem fm_project(const LinearSystem& sys, std::size_t var_index) {
  require(var_index < sys.num_vars, "fm_project: variable index out of range");
  LinearSystem out;
  out.num_vars = sys.num_vars - 1;

  // Among rows with identical normalized coefficients only the largest
  // right-hand side matters.
  std::map<RatVec, Rat> strongest;
  auto push_ineq = [&](RatVec coeffs, Rat rhs) {
    auto norm = normalize_inequality(std::move(coeffs), std::move(rhs));
    if (!norm) return;
    auto [it, inserted] = strongest.try_emplace(norm->first, norm->second);
    if (!inserted && norm->second > it->second) it->second = norm->second;
  };
  auto flush_ineqs = [&] {
    for (auto& [coeffs, rhs] : strongest) out.inequalities.emplace_back(coeffs, rhs);
  };

  // Substitution step when some equality mentions the variable.
  std::size_t subst = sys.equalities.size();
  for (std::size_t i = 0; i < sys.equalities.size(); ++i)
    if (sys.equalities[i].first[var_index] != 0) {
      subst = i;
      break;
    }

  if (subst < sys.equalities.size()) {
    const RatVec& sc = sys.equalities[subst].first;
    const Rat& sr = sys.equalities[subst].second;
    const Rat& pivot = sc[var_index];
    for (std::size_t i = 0; i < sys.equalities.size(); ++i) {
      if (i == subst) continue;
      const auto& [c, r] = sys.equalities[i];
      Rat f = c[var_index] / pivot;
      RatVec nc(sys.num_vars);
      for (std::size_t j = 0; j < sys.num_vars; ++j) nc[j] = c[j] - f * sc[j];
      out.equalities.emplace_back(drop_column(nc, var_index), r - f * sr);
    }
    for (const auto& [c, r] : sys.inequalities) {
      Rat f = c[var_index] / pivot;
      RatVec nc(sys.num_vars);
      for (std::size_t j = 0; j < sys.num_vars; ++j) nc[j] = c[j] - f * sc[j];
      push_ineq(drop_column(nc, var_index), r - f * sr);
    }
    flush_ineqs();
    return out;
  }

  // All equalities avoid the variable; keep them and combine inequalities.
  for (const auto& [c, r] : sys.equalities) out.equalities.emplace_back(drop_column(c, var_index), r);

  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < sys.inequalities.size(); ++i) {
    const Rat& c = sys.inequalities[i].first[var_index];
    if (c > 0) pos.push_back(i);
    else if (c < 0) neg.push_back(i);
    else push_ineq(drop_column(sys.inequalities[i].first, var_index), sys.inequalities[i].second);
  }
  for (std::size_t p : pos)
    for (std::size_t q : neg) {
      const auto& [cp, rp] = sys.inequalities[p];
      const auto& [cq, rq] = sys.inequalities[q];
      // -cq[var] * P + cp[var] * Q cancels the variable; both scales positive.
      Rat sp = -cq[var_index];
      Rat sq = cp[var_index];
      RatVec nc(sys.num_vars);
      for (std::size_t j = 0; j < sys.num_vars; ++j) nc[j] = sp * cp[j] + sq * cq[j];
      push_ineq(drop_column(nc, var_index), sp * rp + sq * rq);
    }
  flush_ineqs();
  return out;
}

bool fm_feasible(LinearSystem sys) {
  for (;;) {
    for (const auto& [c, r] : sys.equalities)
      if (is_zero(c) && r != 0) return false;
    for (const auto& [c, r] : sys.inequalities)
      if (is_zero(c) && r > 0) return false;
    if (sys.num_vars == 0) return true;

    std::size_t var = sys.num_vars;
    for (const auto& [c, r] : sys.equalities)
      for (std::size_t j = 0; j < sys.num_vars && var == sys.num_vars; ++j)
        if (c[j] != 0) var = j;
    if (var == sys.num_vars) {
      // Greedy: eliminate the variable with the fewest pairwise combinations.
      std::size_t best_cost = 0;
      for (std::size_t j = 0; j < sys.num_vars; ++j) {
        std::size_t p = 0, n = 0;
        for (const auto& [c, r] : sys.inequalities) {
          if (c[j] > 0) ++p;
          else if (c[j] < 0) ++n;
        }
        std::size_t cost = p * n;
        if (var == sys.num_vars || cost < best_cost) {
          var = j;
          best_cost = cost;
        }
      }
    }
    sys = fm_project(sys, var);
  }
}

}  // namespace toric
