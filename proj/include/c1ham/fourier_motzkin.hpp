#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "c1ham/rational.hpp"

namespace c1ham {

enum class Rel { Ge, Gt, Eq };

/// coeffs . x  REL  rhs
struct LinearConstraint {
  RatVec coeffs;
  Rat rhs;
  Rel rel = Rel::Ge;
};

struct Feasibility {
  bool feasible = false;
  /// A feasible point, chosen deterministically, when feasible.
  RatVec point;
  /// When infeasible and the system had no equalities: nonnegative
  /// multipliers y over the input constraints with  sum y_i coeffs_i = 0
  /// and sum y_i rhs_i violating the combined relation (Farkas witness).
  RatVec farkas;
  bool has_farkas = false;
};

/// Fourier-Motzkin elimination over the rationals. Constraints must be
/// Ge or Gt; each derived inequality carries its multiplier vector over
/// the inputs, so infeasibility comes with a checkable certificate.
Feasibility fm_feasible(std::span<const LinearConstraint> constraints, std::size_t nvars);

/// General feasibility: equalities are eliminated first by exact
/// Gaussian substitution, then fm_feasible runs on the remaining free
/// variables. No Farkas witness in this mode.
Feasibility linear_feasible(std::span<const LinearConstraint> constraints, std::size_t nvars);

}  // namespace c1ham
