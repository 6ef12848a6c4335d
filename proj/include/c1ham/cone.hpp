#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "c1ham/rational.hpp"

namespace c1ham {

/// Anchored polyhedral cone
///   apex + span(subspace_basis) + sum_i R_{>=0 or >0} rays[i],
/// with per-ray openness. Closed moment cones use all-closed rays; the
/// relatively open decomposition cells use all-open rays.
struct Cone {
  std::size_t ambient_dim = 0;
  RatVec apex;
  std::vector<RatVec> subspace_basis;
  std::vector<RatVec> rays;
  std::vector<bool> ray_open;

  /// Validates lengths and independence of the subspace basis.
  static Cone make(std::size_t ambient_dim, RatVec apex, std::vector<RatVec> subspace_basis,
                   std::vector<RatVec> rays, std::vector<bool> ray_open);
  static Cone closed(std::size_t ambient_dim, RatVec apex, std::vector<RatVec> subspace_basis,
                     std::vector<RatVec> rays);
  static Cone open_cell(std::size_t ambient_dim, RatVec apex, std::vector<RatVec> subspace_basis,
                        std::vector<RatVec> rays);
};

struct ConeMembership {
  bool contained = false;
  RatVec subspace_coeffs;  // one witness, deterministic
  RatVec ray_coeffs;
};

/// Exact membership via Fourier-Motzkin feasibility. Throws DataError on
/// dimension mismatch.
ConeMembership cone_contains(const Cone& cone, std::span<const Rat> alpha);

/// nu with <eta_i, nu> > 0 for every queried weight; pairings kept for
/// reports. Verified on construction.
struct Separator {
  RatVec nu;
  RatVec pairings;
};

/// Nonnegative, nonzero x with  sum_i x_i eta_i = 0  exactly; the Gordan
/// obstruction to a separator. Verified on construction.
struct Blocker {
  IntVec x;
};

using GordanResult = std::variant<Separator, Blocker>;

/// The Gordan alternative, decided exactly: a strict separator when one
/// exists, otherwise a blocker extracted from the Farkas multipliers of
/// the infeasible homogenized system <eta_i, nu> >= 1. The empty weight
/// list yields the zero separator (vacuous). A zero weight forces a
/// blocker supported on it.
GordanResult strict_separator(std::span<const RatVec> weights, std::size_t dim);

bool holds_separator(const GordanResult& r);

using IndexSet = std::vector<std::size_t>;  // strictly increasing

struct CaratheodoryCell {
  IndexSet indices;
  Cone cell;  // relatively open
};

/// All index sets I with {weights[i]}_{i in I} linearly independent, in
/// lexicographic order of the index sequences, each paired with the
/// relatively open cell  apex + span(subspace) + sum_{i in I} R_{>0} w_i.
std::vector<CaratheodoryCell> caratheodory_cells(const RatVec& apex,
                                                 std::span<const RatVec> subspace_basis,
                                                 std::span<const RatVec> weights);

/// Enumerates the independent index sets only (no cell geometry).
std::vector<IndexSet> independent_subsets(std::span<const RatVec> weights);

struct LocateResult {
  enum Kind { None, Unique, Ambiguous } kind = None;
  IndexSet located;        // valid when Unique
  RatVec subspace_coeffs;  // valid when Unique
  RatVec ray_coeffs;       // valid when Unique; all strictly positive
  std::vector<IndexSet> matches;  // every matching cell (diagnostic for Ambiguous)
};

/// Membership in each relatively open cell is decided by solving the
/// unique coefficient system and checking strict positivity. More than
/// one match signals a short or otherwise invalid input and is returned
/// as a diagnostic rather than an answer.
LocateResult locate(std::span<const CaratheodoryCell> cells, std::span<const Rat> alpha);

}  // namespace c1ham
