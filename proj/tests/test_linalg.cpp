#include <doctest.h>

#include "c1ham/linalg.hpp"
#include "oracle.hpp"

using namespace c1ham;

namespace {

RatMat mat(std::vector<RatVec> rows, std::size_t cols) {
  return RatMat::from_rows(std::move(rows), cols);
}

}  // namespace

TEST_CASE("rank of simple matrices") {
  CHECK(rank(mat({{1, 0}, {0, 1}}, 2)) == 2);
  CHECK(rank(mat({{1, -1}, {-2, 2}}, 2)) == 1);
  CHECK(rank(mat({}, 3)) == 0);
  CHECK(rank(mat({{Rat(1, 2), Rat(1, 3)}}, 2)) == 1);
}

TEST_CASE("kernel basis") {
  SUBCASE("1x2 rank one") {
    const auto basis = kernel_basis(mat({{1, -1}}, 2));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == RatVec{1, 1});
  }
  SUBCASE("solve -x0 - 2 x1 = 0") {
    const auto basis = kernel_basis(mat({{-1, -2}}, 2));
    REQUIRE(basis.size() == 1);
    CHECK(primitive_integer_generator(basis[0]) == IntVec{2, -1});
  }
  SUBCASE("identity is injective") {
    CHECK(kernel_basis(mat({{1, 0}, {0, 1}}, 2)).empty());
  }
}

TEST_CASE("primitive integer generator") {
  CHECK(primitive_integer_generator(RatVec{Rat(1, 2), Rat(1, 2)}) == IntVec{1, 1});
  CHECK(primitive_integer_generator(RatVec{-2, 1}) == IntVec{2, -1});
  CHECK(primitive_integer_generator(RatVec{4, 6}) == IntVec{2, 3});
  CHECK_THROWS_AS(primitive_integer_generator(RatVec{0, 0}), DataError);
}

TEST_CASE("independence") {
  CHECK_FALSE(is_independent(std::vector<RatVec>{{1}, {-1}}));
  CHECK(is_independent(std::vector<RatVec>{{1, 0}, {0, 1}}));
  CHECK(is_independent(std::vector<RatVec>{}));
  CHECK_FALSE(is_independent(std::vector<RatVec>{{0, 0}}));
  CHECK_THROWS_AS(is_independent(std::vector<RatVec>{{1}, {1, 0}}), DataError);
}

TEST_CASE("rank-nullity with exact substitution on random matrices") {
  oracle::Rng rng(0xabcd1234);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t rows = static_cast<std::size_t>(rng.range(0, 5));
    const std::size_t cols = static_cast<std::size_t>(rng.range(1, 5));
    std::vector<RatVec> data(rows, RatVec(cols));
    for (auto& row : data)
      for (auto& x : row) x = rng.rational(-4, 4);
    const RatMat m = mat(data, cols);
    const auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.size() == cols);
    for (const RatVec& k : basis) CHECK(is_zero(m.apply(k)));
    CHECK(is_independent(basis));
  }
}

TEST_CASE("generator is invariant under rescaling") {
  oracle::Rng rng(0x5eed);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t dim = static_cast<std::size_t>(rng.range(1, 5));
    RatVec v(dim);
    bool nonzero = false;
    for (auto& x : v) {
      x = rng.rational(-6, 6);
      if (x != 0) nonzero = true;
    }
    if (!nonzero) continue;
    Rat c = rng.rational(-5, 5);
    if (c == 0) c = Rat(7, 3);
    CHECK(primitive_integer_generator(scale(c, v)) == primitive_integer_generator(v));
  }
}

TEST_CASE("textual round trip is exact") {
  oracle::Rng rng(0x717171);
  for (int iter = 0; iter < 200; ++iter) {
    const Rat x = rng.rational(-50, 50, 12);
    CHECK(parse_rational(to_string(x)) == x);
  }
  CHECK(to_string(Rat(-1, 2)) == "-1/2");
  CHECK(to_string(Rat(7)) == "7");
  CHECK(parse_rational("2/4") == Rat(1, 2));
  CHECK(parse_rational("1/-2") == Rat(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), DataError);
  CHECK_THROWS_AS(parse_rational("a"), DataError);
  CHECK_THROWS_AS(parse_rational(""), DataError);
}

TEST_CASE("solve classifies systems") {
  const auto unique = solve(mat({{2, 0}, {0, 4}}, 2), RatVec{1, 1});
  REQUIRE(unique.kind == SolveResult::Unique);
  CHECK(unique.solution == RatVec{Rat(1, 2), Rat(1, 4)});
  CHECK(solve(mat({{1, 1}}, 2), RatVec{1}).kind == SolveResult::Underdetermined);
  CHECK(solve(mat({{1, 1}, {1, 1}}, 2), RatVec{1, 2}).kind == SolveResult::Inconsistent);
}
