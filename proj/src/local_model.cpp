#include "c1ham/local_model.hpp"

#include <algorithm>

namespace c1ham {

namespace {

bool xi_is_zero(std::span<const Int> xi) {
  return std::all_of(xi.begin(), xi.end(), [](const Int& x) { return x == 0; });
}

RatMat weight_columns(std::span<const RatVec> weights) {
  const std::size_t dim = weights.empty() ? 0 : weights.front().size();
  return RatMat::from_cols(std::vector<RatVec>(weights.begin(), weights.end()), dim);
}

}  // namespace

LocalModel LocalModel::create(std::size_t dim_T, IntVec xi, std::vector<RatVec> weights,
                              RatVec moment_value, std::optional<RatMat> h_embedding) {
  if (dim_T == 0) throw DataError("dim_T must be positive");
  if (xi.empty() || xi_is_zero(xi)) throw DataError("xi must be a nonzero integer vector");
  const std::size_t h = xi.size() - 1;

  LocalModel m;
  m.weights_supplied_ = !weights.empty();
  if (!m.weights_supplied_) weights = weights_from_xi(xi);

  if (weights.size() != xi.size())
    throw DataError("expected " + std::to_string(xi.size()) + " weights, got " +
                    std::to_string(weights.size()));
  const std::size_t wdim = weights.front().size();
  if (wdim != h && wdim != h + 1)
    throw DataError("weights must have dimension h or h+1 (h = " + std::to_string(h) + ")");
  for (const RatVec& w : weights)
    if (w.size() != wdim) throw DataError("weights of unequal dimension");

  // sum xi_i eta_i = 0, exactly.
  RatVec combo = zero_vec(wdim);
  for (std::size_t i = 0; i < weights.size(); ++i)
    combo = add(combo, scale(Rat(xi[i]), weights[i]));
  if (!is_zero(combo))
    throw DataError("sum xi_i weights_i != 0: not a valid stabilizer presentation");

  // Complexity one: the weight matrix has a 1-dimensional kernel. With
  // the identity above this pins the kernel to the span of xi.
  if (rank(weight_columns(weights)) != h)
    throw DataError("weights do not span an h-dimensional space: kernel is not 1-dimensional");

  if (moment_value.size() != dim_T) throw DataError("moment_value must have dimension dim_T");

  if (h_embedding) {
    if (h_embedding->rows() != h) throw DataError("h_embedding must have h rows");
    if (h > 0 && h_embedding->cols() != dim_T)
      throw DataError("h_embedding rows must have dimension dim_T");
    if (rank(*h_embedding) != h) throw DataError("h_embedding rows are dependent");
  }

  m.dim_T_ = dim_T;
  m.xi_ = std::move(xi);
  m.weights_ = std::move(weights);
  m.moment_value_ = std::move(moment_value);
  m.h_embedding_ = std::move(h_embedding);
  return m;
}

std::vector<RatVec> weights_from_xi(std::span<const Int> xi) {
  if (xi.empty() || xi_is_zero(xi)) throw DataError("weights_from_xi requires nonzero xi");
  Rat norm_sq = 0;
  for (const Int& x : xi) norm_sq += Rat(x) * Rat(x);
  std::vector<RatVec> weights(xi.size(), zero_vec(xi.size()));
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const Rat factor = Rat(xi[i]) / norm_sq;
    for (std::size_t j = 0; j < xi.size(); ++j) weights[i][j] = -factor * Rat(xi[j]);
    weights[i][i] += 1;
  }
  return weights;
}

IntVec xi_from_weights(std::span<const RatVec> weights) {
  if (weights.empty()) throw DataError("xi_from_weights requires at least one weight");
  const std::vector<RatVec> basis = kernel_basis(weight_columns(weights));
  if (basis.size() != 1)
    throw DataError("not a complexity-one germ: weight matrix kernel has dimension " +
                    std::to_string(basis.size()));
  return primitive_integer_generator(basis.front());
}

bool is_tall(const LocalModel& m) {
  bool has_pos = false, has_neg = false;
  for (const Int& x : m.xi()) {
    if (x > 0) has_pos = true;
    if (x < 0) has_neg = true;
  }
  return !(has_pos && has_neg);
}

bool is_exceptional(const LocalModel& m) {
  // xi = +-e_i exactly when one entry is +-1 and the rest vanish.
  std::size_t nonzero = 0;
  bool unit = false;
  for (const Int& x : m.xi()) {
    if (x == 0) continue;
    ++nonzero;
    unit = (x == 1 || x == -1);
  }
  return !(nonzero == 1 && unit);
}

Classification classify(const LocalModel& m) {
  Classification c;
  c.tall = is_tall(m);
  c.exceptional = is_exceptional(m);
  c.xi_normalized = sign_normalized(m.xi());
  if (!c.tall && !c.exceptional)
    throw DataError("internal error: short point classified non-exceptional");
  return c;
}

RatVec lift_weight(const LocalModel& m, std::span<const Rat> weight) {
  const std::size_t h = m.h();
  if (h == 0) return zero_vec(m.dim_T());
  if (!m.h_embedding()) throw DataError("weight lift requires h_embedding");
  if (weight.size() != h)
    throw DataError("weight lift requires dim-h weight coordinates (got dimension " +
                    std::to_string(weight.size()) + ")");
  const RatMat& basis = *m.h_embedding();
  // Solve Gram * c = weight, lift = sum c_j basis_j.
  RatMat gram(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) gram.at(i, j) = dot(basis.row(i), basis.row(j));
  const SolveResult sol = solve(gram, weight);
  if (sol.kind != SolveResult::Unique)
    throw DataError("internal error: singular Gram matrix for independent basis");
  RatVec lift = zero_vec(m.dim_T());
  for (std::size_t j = 0; j < h; ++j) lift = add(lift, scale(sol.solution[j], basis.row(j)));
  return lift;
}

std::vector<RatVec> annihilator_basis(const LocalModel& m) {
  const std::size_t h = m.h();
  if (h == 0) {
    // Trivial stabilizer: the annihilator is everything.
    std::vector<RatVec> basis;
    for (std::size_t d = 0; d < m.dim_T(); ++d) {
      RatVec e = zero_vec(m.dim_T());
      e[d] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  if (!m.h_embedding()) throw DataError("moment cone requires h_embedding");
  return kernel_basis(*m.h_embedding());
}

Cone moment_cone(const LocalModel& m) {
  std::vector<RatVec> rays;
  rays.reserve(m.weights().size());
  for (const RatVec& w : m.weights()) rays.push_back(lift_weight(m, w));
  return Cone::closed(m.dim_T(), m.moment_value(), annihilator_basis(m), std::move(rays));
}

std::vector<CaratheodoryCell> moment_cone_cells(const LocalModel& m) {
  std::vector<RatVec> lifted;
  lifted.reserve(m.weights().size());
  for (const RatVec& w : m.weights()) lifted.push_back(lift_weight(m, w));
  const std::vector<RatVec> subspace = annihilator_basis(m);

  // Independence is decided on the abstract weights; the lift is a
  // linear isomorphism onto the embedded subspace, so the answer agrees,
  // but the abstract data stays authoritative for the index sets.
  std::vector<CaratheodoryCell> cells;
  for (IndexSet& indices : independent_subsets(m.weights())) {
    std::vector<RatVec> rays;
    rays.reserve(indices.size());
    for (std::size_t i : indices) rays.push_back(lifted[i]);
    Cone cell = Cone::open_cell(m.dim_T(), m.moment_value(), subspace, std::move(rays));
    cells.push_back({std::move(indices), std::move(cell)});
  }
  return cells;
}

}  // namespace c1ham
