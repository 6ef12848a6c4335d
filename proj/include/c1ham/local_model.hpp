#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "c1ham/cone.hpp"
#include "c1ham/linalg.hpp"
#include "c1ham/rational.hpp"

namespace c1ham {

/// Combinatorial germ of a point in a complexity-one space: the integer
/// vector xi presenting the stabilizer H as the kernel of z -> prod
/// z_i^{xi_i}, the h+1 isotropy weights, the moment value, and
/// (optionally) a basis of the stabilizer algebra inside the torus
/// algebra, identified with Q^dim_T by the standard inner product.
///
/// Weight coordinates come in two accepted encodings: dim-h vectors
/// (coordinates on the dual of the embedded basis) or dim-(h+1) vectors
/// living in the orthogonal complement of xi. Both satisfy
/// sum_i xi_i weights_i = 0 exactly.
class LocalModel {
 public:
  /// Validates all invariants; throws DataError with a description when
  /// one fails. When `weights` is empty they are derived from xi.
  static LocalModel create(std::size_t dim_T, IntVec xi, std::vector<RatVec> weights,
                           RatVec moment_value, std::optional<RatMat> h_embedding);

  std::size_t dim_T() const { return dim_T_; }
  std::size_t h() const { return xi_.size() - 1; }
  const IntVec& xi() const { return xi_; }
  const std::vector<RatVec>& weights() const { return weights_; }
  const RatVec& moment_value() const { return moment_value_; }
  const std::optional<RatMat>& h_embedding() const { return h_embedding_; }
  bool weights_supplied() const { return weights_supplied_; }

 private:
  std::size_t dim_T_ = 0;
  IntVec xi_;
  std::vector<RatVec> weights_;
  RatVec moment_value_;
  std::optional<RatMat> h_embedding_;
  bool weights_supplied_ = false;
};

/// eta_i = e_i - (xi_i/|xi|^2) xi, the projections of the standard basis
/// onto the orthogonal complement of xi. Satisfies sum xi_i eta_i = 0.
std::vector<RatVec> weights_from_xi(std::span<const Int> xi);

/// Primitive sign-normalized generator of the (required 1-dimensional)
/// kernel of the weight matrix. Recovers xi of the connected stabilizer
/// only: torsion carried by a non-primitive xi is invisible to weights.
IntVec xi_from_weights(std::span<const RatVec> weights);

/// true iff the entries of xi are weakly sign-coherent.
bool is_tall(const LocalModel& m);
inline bool is_short(const LocalModel& m) { return !is_tall(m); }

/// true iff xi is not plus-or-minus a standard basis vector (no
/// coordinate of the slice is fixed by the stabilizer action).
bool is_exceptional(const LocalModel& m);

struct Classification {
  bool tall = false;
  bool exceptional = false;
  IntVec xi_normalized;  // sign-normalized; gcd kept (it encodes torsion)
};
Classification classify(const LocalModel& m);

/// Lifts a dim-h weight into the torus dual via the embedded basis: the
/// unique vector of the stabilizer subspace pairing with the basis rows
/// as the weight prescribes. For h = 0 every weight lifts to zero.
RatVec lift_weight(const LocalModel& m, std::span<const Rat> weight);

/// Basis of the annihilator of the embedded stabilizer algebra.
std::vector<RatVec> annihilator_basis(const LocalModel& m);

/// moment_value + annihilator + nonnegative span of the lifted weights.
/// Requires the embedding (h = 0 counts as the trivially present empty
/// embedding) and dim-h weight coordinates.
Cone moment_cone(const LocalModel& m);

/// The Caratheodory decomposition of the moment cone: independent index
/// sets with relatively open lifted cells, in lexicographic order.
std::vector<CaratheodoryCell> moment_cone_cells(const LocalModel& m);

}  // namespace c1ham
