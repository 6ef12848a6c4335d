#include "c1ham/fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "c1ham/linalg.hpp"

namespace c1ham {

namespace {

// a . x >= b (strict when `strict`), tagged with multipliers over the
// original constraint list.
struct Row {
  RatVec a;
  Rat b;
  bool strict = false;
  RatVec mult;
};

// Scales by the inverse of |first nonzero coefficient|; positive factor,
// so direction and multipliers stay valid.
void normalize(Row& row) {
  for (const Rat& c : row.a) {
    if (c == 0) continue;
    Rat f = c > 0 ? Rat(1) / c : Rat(-1) / c;
    if (f != 1) {
      for (Rat& x : row.a) x *= f;
      row.b *= f;
      for (Rat& m : row.mult) m *= f;
    }
    return;
  }
}

bool constant_row_violated(const Row& row) {
  // 0 >= b fails when b > 0; 0 > b fails when b >= 0.
  return row.strict ? row.b >= 0 : row.b > 0;
}

struct Bound {
  Rat value;
  bool strict;
};

}  // namespace

Feasibility fm_feasible(std::span<const LinearConstraint> constraints, std::size_t nvars) {
  std::vector<Row> active;
  active.reserve(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const LinearConstraint& c = constraints[i];
    if (c.rel == Rel::Eq) throw DataError("fm_feasible does not accept equality constraints");
    if (c.coeffs.size() != nvars) throw DataError("constraint arity mismatch in fm_feasible");
    RatVec mult(constraints.size(), Rat(0));
    mult[i] = 1;
    active.push_back({c.coeffs, c.rhs, c.rel == Rel::Gt, std::move(mult)});
  }

  // layers[k] holds the rows that bounded x_k when it was eliminated;
  // they only involve x_0..x_k and are reused for back-substitution.
  std::vector<std::vector<Row>> layers(nvars);

  auto check_constant = [](const Row& row, Feasibility& out) {
    if (!is_zero(row.a)) return false;
    if (constant_row_violated(row)) {
      out.feasible = false;
      out.farkas = row.mult;
      out.has_farkas = true;
      return true;
    }
    return false;
  };

  Feasibility result;
  for (const Row& row : active)
    if (check_constant(row, result)) return result;

  for (std::size_t k = nvars; k-- > 0;) {
    std::vector<Row> lowers, uppers, rest;
    for (Row& row : active) {
      if (row.a[k] > 0)
        lowers.push_back(std::move(row));
      else if (row.a[k] < 0)
        uppers.push_back(std::move(row));
      else
        rest.push_back(std::move(row));
    }
    active.clear();

    std::vector<Row> next;
    std::map<std::tuple<RatVec, Rat, bool>, bool> dedup;
    auto push = [&](Row row) {
      normalize(row);
      auto key = std::make_tuple(row.a, row.b, row.strict);
      if (!dedup.emplace(std::move(key), true).second) return true;
      if (check_constant(row, result)) return false;
      if (is_zero(row.a)) return true;  // satisfied constant row
      next.push_back(std::move(row));
      return true;
    };

    for (Row& row : rest)
      if (!push(std::move(row))) return result;
    for (const Row& lo : lowers) {
      for (const Row& up : uppers) {
        const Rat flo = Rat(1) / lo.a[k];
        const Rat fup = Rat(-1) / up.a[k];
        Row comb;
        comb.a.resize(nvars, Rat(0));
        for (std::size_t j = 0; j < nvars; ++j) comb.a[j] = flo * lo.a[j] + fup * up.a[j];
        comb.b = flo * lo.b + fup * up.b;
        comb.strict = lo.strict || up.strict;
        comb.mult.resize(lo.mult.size(), Rat(0));
        for (std::size_t j = 0; j < lo.mult.size(); ++j)
          comb.mult[j] = flo * lo.mult[j] + fup * up.mult[j];
        if (!push(std::move(comb))) return result;
      }
    }
    layers[k].reserve(lowers.size() + uppers.size());
    for (Row& row : lowers) layers[k].push_back(std::move(row));
    for (Row& row : uppers) layers[k].push_back(std::move(row));
    active = std::move(next);
  }

  // Feasible: assign variables in increasing index order; the layer for
  // x_k involves only already-assigned variables below k.
  result.feasible = true;
  result.point.assign(nvars, Rat(0));
  for (std::size_t k = 0; k < nvars; ++k) {
    std::optional<Bound> lo, hi;
    for (const Row& row : layers[k]) {
      Rat residual = row.b;
      for (std::size_t j = 0; j < k; ++j) residual -= row.a[j] * result.point[j];
      const Rat bound = residual / row.a[k];
      if (row.a[k] > 0) {
        if (!lo || bound > lo->value)
          lo = Bound{bound, row.strict};
        else if (bound == lo->value)
          lo->strict = lo->strict || row.strict;
      } else {
        if (!hi || bound < hi->value)
          hi = Bound{bound, row.strict};
        else if (bound == hi->value)
          hi->strict = hi->strict || row.strict;
      }
    }
    Rat value = 0;
    if (lo && hi) {
      if (lo->value == hi->value) {
        if (lo->strict || hi->strict)
          throw DataError("internal error: inconsistent bounds after elimination");
        value = lo->value;
      } else {
        value = (lo->value + hi->value) / 2;
      }
    } else if (lo) {
      value = lo->strict ? Rat(lo->value + 1) : lo->value;
    } else if (hi) {
      value = hi->strict ? Rat(hi->value - 1) : hi->value;
    }
    result.point[k] = value;
  }
  return result;
}

Feasibility linear_feasible(std::span<const LinearConstraint> constraints, std::size_t nvars) {
  std::vector<RatVec> eq_rows;
  RatVec eq_rhs;
  std::vector<const LinearConstraint*> inequalities;
  for (const LinearConstraint& c : constraints) {
    if (c.coeffs.size() != nvars) throw DataError("constraint arity mismatch in linear_feasible");
    if (c.rel == Rel::Eq) {
      eq_rows.push_back(c.coeffs);
      eq_rhs.push_back(c.rhs);
    } else {
      inequalities.push_back(&c);
    }
  }

  Feasibility result;
  // RREF of [E | f]; pivot variables become expressions in the free ones.
  RatMat aug(eq_rows.size(), nvars + 1);
  for (std::size_t i = 0; i < eq_rows.size(); ++i) {
    for (std::size_t j = 0; j < nvars; ++j) aug.at(i, j) = eq_rows[i][j];
    aug.at(i, nvars) = eq_rhs[i];
  }
  std::vector<std::size_t> pivots;
  const RatMat red = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == nvars) return result;  // 0 = nonzero

  std::vector<bool> is_pivot(nvars, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < nvars; ++j)
    if (!is_pivot[j]) free_vars.push_back(j);

  // Substitute x_pivot = red_rhs - sum over free columns.
  std::vector<LinearConstraint> reduced;
  reduced.reserve(inequalities.size());
  for (const LinearConstraint* c : inequalities) {
    LinearConstraint r;
    r.rel = c->rel;
    r.coeffs.assign(free_vars.size(), Rat(0));
    r.rhs = c->rhs;
    for (std::size_t f = 0; f < free_vars.size(); ++f) r.coeffs[f] = c->coeffs[free_vars[f]];
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Rat& cp = c->coeffs[pivots[i]];
      if (cp == 0) continue;
      r.rhs -= cp * red.at(i, nvars);
      for (std::size_t f = 0; f < free_vars.size(); ++f)
        r.coeffs[f] -= cp * red.at(i, free_vars[f]);
    }
    reduced.push_back(std::move(r));
  }

  Feasibility inner = fm_feasible(reduced, free_vars.size());
  if (!inner.feasible) return result;

  result.feasible = true;
  result.point.assign(nvars, Rat(0));
  for (std::size_t f = 0; f < free_vars.size(); ++f) result.point[free_vars[f]] = inner.point[f];
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rat value = red.at(i, nvars);
    for (std::size_t f = 0; f < free_vars.size(); ++f)
      value -= red.at(i, free_vars[f]) * result.point[free_vars[f]];
    result.point[pivots[i]] = value;
  }
  return result;
}

}  // namespace c1ham
