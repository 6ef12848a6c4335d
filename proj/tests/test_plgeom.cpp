#include <doctest.h>

#include "c1ham/plgeom.hpp"
#include "oracle.hpp"

using namespace c1ham;

namespace {

PLCell seg(Rat a, Rat b, bool open0, bool open1) {
  return PLCell::make({{std::move(a)}, {std::move(b)}}, {open0, open1});
}

PLSet one_cell(PLCell cell) {
  PLSet s;
  s.cells.push_back(std::move(cell));
  return s;
}

}  // namespace

TEST_CASE("cell membership honors the openness flags") {
  const PLCell point = PLCell::make({{Rat(1, 2)}}, {});
  CHECK(cell_contains(point, RatVec{Rat(1, 2)}));
  CHECK_FALSE(cell_contains(point, RatVec{0}));

  const PLCell half_open = seg(0, 1, false, true);
  CHECK(cell_contains(half_open, RatVec{0}));
  CHECK(cell_contains(half_open, RatVec{Rat(1, 2)}));
  CHECK_FALSE(cell_contains(half_open, RatVec{1}));
  CHECK_FALSE(cell_contains(half_open, RatVec{2}));

  const PLCell tri = PLCell::make({{0, 0}, {1, 0}, {0, 1}}, {false, true, false,
                                                            false, true, false});
  CHECK(cell_contains(tri, RatVec{Rat(1, 4), Rat(1, 4)}));
  CHECK(cell_contains(tri, RatVec{0, 0}));            // closed vertex
  CHECK_FALSE(cell_contains(tri, RatVec{1, 0}));      // open vertex
  CHECK(cell_contains(tri, RatVec{Rat(1, 2), 0}));    // closed edge 01
  CHECK_FALSE(cell_contains(tri, RatVec{Rat(1, 2), Rat(1, 2)}));  // open edge 12
  CHECK(cell_contains(tri, RatVec{0, Rat(1, 2)}));    // closed edge 20
  CHECK_FALSE(cell_contains(tri, RatVec{1, 1}));
}

TEST_CASE("degenerate cells are rejected") {
  CHECK_THROWS_AS(PLCell::make({{Rat(0)}, {Rat(0)}}, {false, false}), DataError);
  CHECK_THROWS_AS(PLCell::make({{0, 0}, {1, 1}, {2, 2}}, {}), DataError);
  CHECK_THROWS_AS(PLCell::make({{Rat(0)}, {Rat(1)}}, {false}), DataError);
}

TEST_CASE("segment intersections") {
  SUBCASE("crossing") {
    const SegHit hit = intersect_segments(RatVec{0, 0}, RatVec{1, 1}, RatVec{0, 1}, RatVec{1, 0});
    REQUIRE(hit.kind == SegHit::Point);
    CHECK(hit.s == Rat(1, 2));
    CHECK(hit.t == Rat(1, 2));
  }
  SUBCASE("skew in the plane") {
    CHECK(intersect_segments(RatVec{0, 0}, RatVec{1, 0}, RatVec{0, 1}, RatVec{1, 1}).kind ==
          SegHit::Empty);
  }
  SUBCASE("collinear overlap") {
    const SegHit hit = intersect_segments(RatVec{0}, RatVec{2}, RatVec{1}, RatVec{3});
    REQUIRE(hit.kind == SegHit::Overlap);
    CHECK(hit.s0 == Rat(1, 2));
    CHECK(hit.s1 == 1);
  }
  SUBCASE("collinear touching at a point") {
    const SegHit hit = intersect_segments(RatVec{0}, RatVec{1}, RatVec{1}, RatVec{2});
    REQUIRE(hit.kind == SegHit::Point);
    CHECK(hit.s == 1);
    CHECK(hit.t == 0);
  }
  SUBCASE("parallel disjoint lines") {
    CHECK(intersect_segments(RatVec{0, 0}, RatVec{1, 0}, RatVec{0, 1}, RatVec{2, 1}).kind ==
          SegHit::Empty);
  }
}

TEST_CASE("delta membership") {
  SUBCASE("half-open interval") {
    const DeltaTall delta = DeltaTall::make({{Rat(0)}, {Rat(2)}}, {false, true});
    CHECK(delta.contains(RatVec{0}));
    CHECK(delta.contains(RatVec{1}));
    CHECK_FALSE(delta.contains(RatVec{2}));
    CHECK(delta.centroid() == RatVec{1});
  }
  SUBCASE("open square with one closed edge") {
    const DeltaTall delta =
        DeltaTall::make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {false, true, true, true});
    CHECK(delta.contains(RatVec{Rat(1, 2), Rat(1, 2)}));
    CHECK(delta.contains(RatVec{Rat(1, 2), 0}));       // on the closed bottom edge
    CHECK_FALSE(delta.contains(RatVec{1, Rat(1, 2)})); // open right edge
    CHECK_FALSE(delta.contains(RatVec{0, 0}));         // vertex adjacent to an open edge
    CHECK(delta.centroid() == RatVec{Rat(1, 2), Rat(1, 2)});
  }
  SUBCASE("clockwise or degenerate polygons are rejected") {
    CHECK_THROWS_AS(DeltaTall::make({{0, 0}, {0, 1}, {1, 1}, {1, 0}}, {}), DataError);
    CHECK_THROWS_AS(DeltaTall::make({{0, 0}, {1, 0}, {2, 0}}, {}), DataError);
  }
}

TEST_CASE("exact cover on an interval") {
  const DeltaTall delta = DeltaTall::make({{Rat(0)}, {Rat(2)}}, {false, true});
  const PLSet left = one_cell(PLCell::make({{Rat(0)}}, {}));
  const PLSet mid = one_cell(seg(0, 1, true, false));
  const PLSet right = one_cell(seg(1, 2, true, true));

  SUBCASE("partition passes") {
    std::vector<CoverMember> members = {{"a", &left}, {"b", &mid}, {"c", &right}};
    CHECK(cover_exactly_once(members, delta).kind == CoverResult::Ok);
  }
  SUBCASE("gap is reported with a witness") {
    const PLSet short_right = one_cell(seg(Rat(3, 2), 2, true, true));
    std::vector<CoverMember> members = {{"a", &left}, {"b", &mid}, {"c", &short_right}};
    const CoverResult r = cover_exactly_once(members, delta);
    REQUIRE(r.kind == CoverResult::Uncovered);
    CHECK(delta.contains(r.witness));
    CHECK(r.witness[0] > 1);
    CHECK(r.witness[0] < Rat(3, 2));
  }
  SUBCASE("overlap is reported with both ids") {
    const PLSet wide = one_cell(seg(Rat(1, 2), 2, false, true));
    std::vector<CoverMember> members = {{"a", &left}, {"b", &mid}, {"c", &wide}};
    const CoverResult r = cover_exactly_once(members, delta);
    REQUIRE(r.kind == CoverResult::Overlap);
    CHECK(r.ids == std::vector<std::string>{"b", "c"});
  }
  SUBCASE("spill past delta is reported") {
    const PLSet long_right = one_cell(seg(1, 3, true, false));
    std::vector<CoverMember> members = {{"a", &left}, {"b", &mid}, {"c", &long_right}};
    const CoverResult r = cover_exactly_once(members, delta);
    REQUIRE(r.kind == CoverResult::Outside);
    CHECK(r.ids == std::vector<std::string>{"c"});
  }
}

TEST_CASE("exact cover of a square by two triangles") {
  const DeltaTall square = DeltaTall::make({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {});
  // Lower triangle keeps the diagonal open; upper triangle owns the open
  // diagonal segment and the remaining boundary.
  const PLSet lower = one_cell(PLCell::make({{0, 0}, {1, 0}, {1, 1}},
                                            {false, false, false, false, false, true}));
  const PLSet upper = one_cell(PLCell::make({{0, 0}, {1, 1}, {0, 1}},
                                            {true, true, false, false, false, false}));

  SUBCASE("partition passes") {
    std::vector<CoverMember> members = {{"low", &lower}, {"up", &upper}};
    CHECK(cover_exactly_once(members, square).kind == CoverResult::Ok);
  }
  SUBCASE("doubly closed diagonal overlaps") {
    const PLSet upper_closed = one_cell(PLCell::make({{0, 0}, {1, 1}, {0, 1}},
                                                     {true, true, false, false, false, false}));
    const PLSet lower_closed = one_cell(PLCell::make({{0, 0}, {1, 0}, {1, 1}}, {}));
    std::vector<CoverMember> members = {{"low", &lower_closed}, {"up", &upper_closed}};
    const CoverResult r = cover_exactly_once(members, square);
    REQUIRE(r.kind == CoverResult::Overlap);
  }
  SUBCASE("doubly open diagonal leaves a gap") {
    const PLSet upper_open = one_cell(PLCell::make({{0, 0}, {1, 1}, {0, 1}},
                                                   {true, true, false, true, false, false}));
    std::vector<CoverMember> members = {{"low", &lower}, {"up", &upper_open}};
    const CoverResult r = cover_exactly_once(members, square);
    REQUIRE(r.kind == CoverResult::Uncovered);
    // The witness sits on the open diagonal.
    CHECK(r.witness[0] == r.witness[1]);
  }
}

TEST_CASE("cover over a segment embedded in the plane") {
  const DeltaTall delta = DeltaTall::make({{0, 0}, {2, 0}}, {false, true});
  const PLSet start = one_cell(PLCell::make({{0, 0}}, {}));
  const PLSet rest = one_cell(PLCell::make({{0, 0}, {2, 0}}, {true, true}));
  SUBCASE("partition passes") {
    std::vector<CoverMember> members = {{"a", &start}, {"b", &rest}};
    CHECK(cover_exactly_once(members, delta).kind == CoverResult::Ok);
  }
  SUBCASE("off-line cell is outside") {
    const PLSet off = one_cell(PLCell::make({{0, 0}, {1, 1}}, {true, true}));
    std::vector<CoverMember> members = {{"a", &start}, {"b", &rest}, {"c", &off}};
    const CoverResult r = cover_exactly_once(members, delta);
    REQUIRE(r.kind == CoverResult::Outside);
    CHECK(r.ids == std::vector<std::string>{"c"});
  }
}

TEST_CASE("cover refuses high ambient dimension") {
  const DeltaTall delta = DeltaTall::make({{0, 0, 0}}, {});
  const PLSet cell = one_cell(PLCell::make({{0, 0, 0}}, {}));
  std::vector<CoverMember> members = {{"a", &cell}};
  CHECK(cover_exactly_once(members, delta).kind == CoverResult::Unsupported);
}

TEST_CASE("vertex stars on the line") {
  SUBCASE("clean junction") {
    const PLSet point = one_cell(PLCell::make({{Rat(0)}}, {}));
    const PLSet left = one_cell(seg(-1, 0, true, true));
    const PLSet right = one_cell(seg(0, 1, true, true));
    std::vector<CoverMember> members = {{"p", &point}, {"l", &left}, {"r", &right}};
    CHECK(check_vertex_stars(members).ok);
  }
  SUBCASE("two edges leaving a vertex in the same direction overlap") {
    const PLSet a = one_cell(seg(0, 1, false, true));
    const PLSet b = one_cell(seg(0, 2, true, true));
    std::vector<CoverMember> members = {{"a", &a}, {"b", &b}};
    const StarVerdict v = check_vertex_stars(members);
    REQUIRE_FALSE(v.ok);
    CHECK(v.vertex == RatVec{0});
  }
  SUBCASE("vertex covered twice") {
    const PLSet a = one_cell(seg(-1, 0, true, false));
    const PLSet b = one_cell(seg(0, 1, false, true));
    std::vector<CoverMember> members = {{"a", &a}, {"b", &b}};
    const StarVerdict v = check_vertex_stars(members);
    REQUIRE_FALSE(v.ok);
    CHECK(v.vertex == RatVec{0});
  }
  SUBCASE("one member may present a region as abutting cells") {
    PLSet joined;
    joined.cells.push_back(seg(-1, 0, true, false));
    joined.cells.push_back(seg(0, 1, true, true));
    std::vector<CoverMember> members = {{"a", &joined}};
    CHECK(check_vertex_stars(members).ok);
  }
}

TEST_CASE("vertex stars in the plane") {
  SUBCASE("disjoint sectors at a shared corner") {
    const PLSet east = one_cell(PLCell::make({{0, 0}, {2, 0}, {2, 2}},
                                             {true, false, false, true, false, true}));
    const PLSet north = one_cell(PLCell::make({{0, 0}, {-2, 2}, {-2, 0}},
                                              {true, false, false, true, false, true}));
    std::vector<CoverMember> members = {{"e", &east}, {"n", &north}};
    CHECK(check_vertex_stars(members).ok);
  }
  SUBCASE("overlapping sectors fail") {
    const PLSet wide = one_cell(PLCell::make({{0, 0}, {2, 0}, {0, 2}},
                                             {true, false, false, true, false, true}));
    const PLSet inner = one_cell(PLCell::make({{0, 0}, {2, 1}, {1, 2}},
                                              {true, false, false, true, false, true}));
    std::vector<CoverMember> members = {{"w", &wide}, {"i", &inner}};
    const StarVerdict v = check_vertex_stars(members);
    REQUIRE_FALSE(v.ok);
    CHECK(v.vertex == RatVec{0, 0});
  }
  SUBCASE("segment ray into a triangle interior fails") {
    const PLSet tri = one_cell(PLCell::make({{0, 0}, {4, 0}, {0, 4}}, {}));
    const PLSet needle = one_cell(PLCell::make({{1, 1}, {2, 2}}, {false, false}));
    std::vector<CoverMember> members = {{"t", &tri}, {"n", &needle}};
    CHECK_FALSE(check_vertex_stars(members).ok);
  }
}
