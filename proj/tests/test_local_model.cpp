#include <doctest.h>

#include "c1ham/local_model.hpp"
#include "oracle.hpp"

using namespace c1ham;

namespace {

LocalModel model_from_xi(IntVec xi) {
  const std::size_t d = 1;
  return LocalModel::create(d, std::move(xi), {}, zero_vec(d), std::nullopt);
}

IntVec expected_primitive(IntVec xi) {
  Int g = 0;
  for (const Int& x : xi) g = gcd(g, x);
  for (Int& x : xi) x /= g;
  return sign_normalized(std::move(xi));
}

}  // namespace

TEST_CASE("weights from xi are the projections onto the complement") {
  SUBCASE("diagonal xi") {
    const auto w = weights_from_xi(IntVec{1, 1});
    REQUIRE(w.size() == 2);
    CHECK(w[0] == RatVec{Rat(1, 2), Rat(-1, 2)});
    CHECK(w[1] == RatVec{Rat(-1, 2), Rat(1, 2)});
  }
  SUBCASE("free germ: single zero weight") {
    const auto w = weights_from_xi(IntVec{1});
    REQUIRE(w.size() == 1);
    CHECK(w[0] == RatVec{0});
  }
  SUBCASE("mixed signs") {
    const auto w = weights_from_xi(IntVec{2, -1});
    CHECK(w[0] == RatVec{Rat(1, 5), Rat(2, 5)});
    CHECK(w[1] == RatVec{Rat(2, 5), Rat(4, 5)});
  }
  SUBCASE("zero xi is rejected") { CHECK_THROWS_AS(weights_from_xi(IntVec{0, 0}), DataError); }
}

TEST_CASE("xi from weights") {
  CHECK(xi_from_weights(std::vector<RatVec>{{1}, {-1}}) == IntVec{1, 1});
  CHECK(xi_from_weights(std::vector<RatVec>{{-1}, {-2}}) == IntVec{2, -1});
  CHECK(xi_from_weights(std::vector<RatVec>{{0}, {1}}) == IntVec{1, 0});
  CHECK_THROWS_WITH_AS(xi_from_weights(std::vector<RatVec>{{0, 0}, {0, 0}}),
                       doctest::Contains("not a complexity-one germ"), DataError);
}

TEST_CASE("tall and exceptional predicates") {
  CHECK(is_tall(model_from_xi({1, 1})));
  CHECK_FALSE(is_tall(model_from_xi({2, -1})));
  CHECK(is_tall(model_from_xi({2})));
  CHECK(is_tall(model_from_xi({-1, -3})));

  CHECK(is_exceptional(model_from_xi({1, 1})));
  CHECK_FALSE(is_exceptional(model_from_xi({1, 0})));
  CHECK_FALSE(is_exceptional(model_from_xi({0, -1})));
  CHECK(is_exceptional(model_from_xi({2})));
}

TEST_CASE("classify bundles the predicates and keeps torsion") {
  const Classification tall_exc = classify(model_from_xi({1, 1}));
  CHECK(tall_exc.tall);
  CHECK(tall_exc.exceptional);

  const Classification short_exc = classify(model_from_xi({2, -1}));
  CHECK_FALSE(short_exc.tall);
  CHECK(short_exc.exceptional);
  CHECK(short_exc.xi_normalized == IntVec{2, -1});

  // Sign-normalized, gcd untouched: (−2) encodes a two-element stabilizer.
  CHECK(classify(model_from_xi({-2})).xi_normalized == IntVec{2});

  const Classification plain = classify(model_from_xi({1, 0}));
  CHECK(plain.tall);
  CHECK_FALSE(plain.exceptional);
}

TEST_CASE("model invariants are enforced") {
  CHECK_THROWS_AS(LocalModel::create(1, {0, 0}, {}, {Rat(0)}, std::nullopt), DataError);
  // sum xi_i eta_i != 0
  CHECK_THROWS_AS(
      LocalModel::create(1, {1, 1}, {{Rat(1)}, {Rat(1)}}, {Rat(0)}, std::nullopt), DataError);
  // kernel dimension 2: weights do not span
  CHECK_THROWS_AS(LocalModel::create(1, {1, 1, 0},
                                     {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(0)}},
                                     {Rat(0)}, std::nullopt),
                  DataError);
  // moment value has the wrong dimension
  CHECK_THROWS_AS(LocalModel::create(2, {1, 1}, {}, {Rat(0)}, std::nullopt), DataError);
}

TEST_CASE("moment cones of the worked germs") {
  SUBCASE("downward half line") {
    const LocalModel m = LocalModel::create(1, {1, -1}, {{Rat(-1)}, {Rat(-1)}}, {Rat(2)},
                                            RatMat::from_rows({{Rat(1)}}, 1));
    const Cone cone = moment_cone(m);
    CHECK(cone.subspace_basis.empty());
    CHECK(cone.rays == std::vector<RatVec>{{-1}, {-1}});
    CHECK(cone_contains(cone, RatVec{2}).contained);
    CHECK(cone_contains(cone, RatVec{-10}).contained);
    CHECK_FALSE(cone_contains(cone, RatVec{Rat(5, 2)}).contained);
  }
  SUBCASE("upward half line from a zero weight") {
    const LocalModel m = LocalModel::create(1, {1, 0}, {{Rat(0)}, {Rat(1)}}, {Rat(0)},
                                            RatMat::from_rows({{Rat(1)}}, 1));
    const Cone cone = moment_cone(m);
    CHECK(cone_contains(cone, RatVec{0}).contained);
    CHECK(cone_contains(cone, RatVec{17}).contained);
    CHECK_FALSE(cone_contains(cone, RatVec{Rat(-1, 10)}).contained);
  }
  SUBCASE("free germ covers the whole line") {
    const LocalModel m = LocalModel::create(1, {1}, {RatVec{}}, {Rat(5)}, RatMat(0, 1));
    const Cone cone = moment_cone(m);
    REQUIRE(cone.subspace_basis.size() == 1);
    CHECK(cone_contains(cone, RatVec{-1000}).contained);
    CHECK(cone_contains(cone, RatVec{1000}).contained);
  }
  SUBCASE("missing embedding is an error") {
    const LocalModel m = LocalModel::create(1, {1, 1}, {{Rat(1)}, {Rat(-1)}}, {Rat(0)},
                                            std::nullopt);
    CHECK_THROWS_AS(moment_cone(m), DataError);
  }
}

TEST_CASE("round trip: weights recover the primitive normalized xi") {
  oracle::Rng rng(0x2007);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t len = static_cast<std::size_t>(rng.range(1, 5));
    IntVec xi(len);
    bool nonzero = false;
    for (auto& x : xi) {
      x = Int(rng.range(-9, 9));
      if (x != 0) nonzero = true;
    }
    if (!nonzero) xi[0] = 3;
    const std::vector<RatVec> weights = weights_from_xi(xi);

    // sum xi_i eta_i = 0, exactly
    RatVec combo = zero_vec(len);
    for (std::size_t i = 0; i < len; ++i) combo = add(combo, scale(Rat(xi[i]), weights[i]));
    CHECK(is_zero(combo));

    CHECK(xi_from_weights(weights) == expected_primitive(xi));
  }
}

TEST_CASE("separator alternative tracks tallness") {
  oracle::Rng rng(0x7a11);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t len = static_cast<std::size_t>(rng.range(2, 5));
    IntVec xi(len);
    bool nonzero = false;
    for (auto& x : xi) {
      x = Int(rng.range(-4, 4));
      if (x != 0) nonzero = true;
    }
    if (!nonzero) xi[0] = 1;
    const LocalModel m = LocalModel::create(1, xi, {}, {Rat(0)}, std::nullopt);
    const std::size_t dim = m.weights().front().size();

    // Full weight set: blocker exactly for tall models.
    const GordanResult full = strict_separator(m.weights(), dim);
    CHECK(holds_separator(full) == !is_tall(m));

    // Short implies exceptional.
    if (!is_tall(m)) CHECK(is_exceptional(m));

    // Every independent subset of a tall model separates.
    if (is_tall(m)) {
      for (const IndexSet& subset : independent_subsets(m.weights())) {
        std::vector<RatVec> sub;
        for (std::size_t i : subset) sub.push_back(m.weights()[i]);
        CHECK(holds_separator(strict_separator(sub, dim)));
      }
    }
  }
}
