#include "c1ham/cone.hpp"

#include <algorithm>

#include "c1ham/fourier_motzkin.hpp"
#include "c1ham/linalg.hpp"

namespace c1ham {

Cone Cone::make(std::size_t ambient_dim, RatVec apex, std::vector<RatVec> subspace_basis,
                std::vector<RatVec> rays, std::vector<bool> ray_open) {
  if (apex.size() != ambient_dim) throw DataError("cone apex has wrong dimension");
  for (const RatVec& v : subspace_basis)
    if (v.size() != ambient_dim) throw DataError("cone subspace vector has wrong dimension");
  for (const RatVec& v : rays)
    if (v.size() != ambient_dim) throw DataError("cone ray has wrong dimension");
  if (ray_open.size() != rays.size()) throw DataError("cone openness flags do not match rays");
  if (!is_independent(subspace_basis)) throw DataError("cone subspace basis is dependent");
  // A zero ray is harmless in a closed cone (the fixed-sphere germ has
  // one) but has no relatively open span.
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (ray_open[i] && is_zero(rays[i]))
      throw DataError("a relatively open cone cell cannot have a zero ray");
  return Cone{ambient_dim, std::move(apex), std::move(subspace_basis), std::move(rays),
              std::move(ray_open)};
}

Cone Cone::closed(std::size_t ambient_dim, RatVec apex, std::vector<RatVec> subspace_basis,
                  std::vector<RatVec> rays) {
  std::vector<bool> open(rays.size(), false);
  return make(ambient_dim, std::move(apex), std::move(subspace_basis), std::move(rays),
              std::move(open));
}

Cone Cone::open_cell(std::size_t ambient_dim, RatVec apex, std::vector<RatVec> subspace_basis,
                     std::vector<RatVec> rays) {
  std::vector<bool> open(rays.size(), true);
  return make(ambient_dim, std::move(apex), std::move(subspace_basis), std::move(rays),
              std::move(open));
}

ConeMembership cone_contains(const Cone& cone, std::span<const Rat> alpha) {
  if (alpha.size() != cone.ambient_dim)
    throw DataError("cone membership query has wrong dimension");

  const std::size_t m = cone.subspace_basis.size();
  const std::size_t k = cone.rays.size();
  const std::size_t nvars = m + k;

  // Variables (s, c):  B^T s + R^T c = alpha - apex,  c_i >= 0 (or > 0).
  std::vector<LinearConstraint> cons;
  cons.reserve(cone.ambient_dim + k);
  for (std::size_t d = 0; d < cone.ambient_dim; ++d) {
    LinearConstraint eq;
    eq.rel = Rel::Eq;
    eq.coeffs.assign(nvars, Rat(0));
    for (std::size_t j = 0; j < m; ++j) eq.coeffs[j] = cone.subspace_basis[j][d];
    for (std::size_t j = 0; j < k; ++j) eq.coeffs[m + j] = cone.rays[j][d];
    eq.rhs = alpha[d] - cone.apex[d];
    cons.push_back(std::move(eq));
  }
  for (std::size_t j = 0; j < k; ++j) {
    LinearConstraint sign;
    sign.rel = cone.ray_open[j] ? Rel::Gt : Rel::Ge;
    sign.coeffs.assign(nvars, Rat(0));
    sign.coeffs[m + j] = 1;
    sign.rhs = 0;
    cons.push_back(std::move(sign));
  }

  Feasibility feas = linear_feasible(cons, nvars);
  ConeMembership out;
  out.contained = feas.feasible;
  if (!feas.feasible) return out;

  out.subspace_coeffs.assign(feas.point.begin(), feas.point.begin() + m);
  out.ray_coeffs.assign(feas.point.begin() + m, feas.point.end());

  // The witness must reproduce alpha exactly.
  RatVec check = cone.apex;
  for (std::size_t j = 0; j < m; ++j)
    check = add(check, scale(out.subspace_coeffs[j], cone.subspace_basis[j]));
  for (std::size_t j = 0; j < k; ++j) check = add(check, scale(out.ray_coeffs[j], cone.rays[j]));
  for (std::size_t d = 0; d < cone.ambient_dim; ++d)
    if (check[d] != alpha[d]) throw DataError("internal error: cone witness fails verification");
  return out;
}

GordanResult strict_separator(std::span<const RatVec> weights, std::size_t dim) {
  for (const RatVec& w : weights)
    if (w.size() != dim) throw DataError("weight dimension mismatch in strict_separator");
  if (weights.empty()) return Separator{zero_vec(dim), {}};

  // Homogenized: <eta_i, nu> >= 1. A strict solution of the original
  // system scales to one of this system and conversely.
  std::vector<LinearConstraint> cons;
  cons.reserve(weights.size());
  for (const RatVec& w : weights) cons.push_back({w, Rat(1), Rel::Ge});

  Feasibility feas = fm_feasible(cons, dim);
  if (feas.feasible) {
    Separator sep{feas.point, RatVec(weights.size())};
    for (std::size_t i = 0; i < weights.size(); ++i) {
      sep.pairings[i] = dot(weights[i], sep.nu);
      if (sep.pairings[i] <= 0)
        throw DataError("internal error: separator fails strict positivity");
    }
    return sep;
  }

  if (!feas.has_farkas) throw DataError("internal error: infeasible system without certificate");
  Blocker blocker{primitive_integer_generator(feas.farkas)};
  RatVec combo = zero_vec(dim);
  bool nonzero = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (blocker.x[i] < 0) throw DataError("internal error: blocker has a negative entry");
    if (blocker.x[i] != 0) nonzero = true;
    combo = add(combo, scale(Rat(blocker.x[i]), weights[i]));
  }
  if (!nonzero || !is_zero(combo))
    throw DataError("internal error: blocker fails verification");
  return blocker;
}

bool holds_separator(const GordanResult& r) { return std::holds_alternative<Separator>(r); }

std::vector<IndexSet> independent_subsets(std::span<const RatVec> weights) {
  std::vector<IndexSet> out;
  IndexSet current;
  std::vector<RatVec> chosen;
  // Depth-first in lexicographic order of the index sequences. Subsets
  // of independent sets are independent, so extending only independent
  // prefixes enumerates exactly the independent subsets.
  auto extend = [&](auto&& self, std::size_t from) -> void {
    out.push_back(current);
    for (std::size_t i = from; i < weights.size(); ++i) {
      chosen.push_back(weights[i]);
      if (is_independent(chosen)) {
        current.push_back(i);
        self(self, i + 1);
        current.pop_back();
      }
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<CaratheodoryCell> caratheodory_cells(const RatVec& apex,
                                                 std::span<const RatVec> subspace_basis,
                                                 std::span<const RatVec> weights) {
  std::vector<CaratheodoryCell> cells;
  std::vector<RatVec> subspace(subspace_basis.begin(), subspace_basis.end());
  for (IndexSet& indices : independent_subsets(weights)) {
    std::vector<RatVec> rays;
    rays.reserve(indices.size());
    for (std::size_t i : indices) rays.push_back(weights[i]);
    Cone cell = Cone::open_cell(apex.size(), apex, subspace, std::move(rays));
    cells.push_back({std::move(indices), std::move(cell)});
  }
  return cells;
}

LocateResult locate(std::span<const CaratheodoryCell> cells, std::span<const Rat> alpha) {
  LocateResult result;
  for (const CaratheodoryCell& entry : cells) {
    const Cone& cell = entry.cell;
    if (alpha.size() != cell.ambient_dim) throw DataError("locate query has wrong dimension");

    // Columns: subspace basis then rays. Independence makes the
    // coefficient system uniquely solvable on the affine span.
    std::vector<RatVec> columns = cell.subspace_basis;
    columns.insert(columns.end(), cell.rays.begin(), cell.rays.end());
    const RatMat system = RatMat::from_cols(columns, cell.ambient_dim);
    const RatVec rhs = sub(alpha, cell.apex);
    const SolveResult sol = solve(system, rhs);
    if (sol.kind == SolveResult::Inconsistent) continue;
    if (sol.kind == SolveResult::Underdetermined)
      throw DataError("locate requires cells with independent subspace and rays");

    const std::size_t m = cell.subspace_basis.size();
    bool inside = true;
    for (std::size_t j = 0; j < cell.rays.size(); ++j) {
      if (sol.solution[m + j] <= 0) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;

    result.matches.push_back(entry.indices);
    if (result.matches.size() == 1) {
      result.located = entry.indices;
      result.subspace_coeffs.assign(sol.solution.begin(), sol.solution.begin() + m);
      result.ray_coeffs.assign(sol.solution.begin() + m, sol.solution.end());
    }
  }
  if (result.matches.empty())
    result.kind = LocateResult::None;
  else if (result.matches.size() == 1)
    result.kind = LocateResult::Unique;
  else
    result.kind = LocateResult::Ambiguous;
  return result;
}

}  // namespace c1ham
