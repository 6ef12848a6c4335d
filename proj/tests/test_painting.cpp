#include <doctest.h>

#include "c1ham/fixtures.hpp"
#include "c1ham/painting.hpp"
#include "oracle.hpp"

using namespace c1ham;

namespace {

SkeletonComponent simple_component(std::string id, std::vector<std::pair<std::string, Rat>> verts,
                                   std::vector<std::pair<std::string, std::string>> edges,
                                   std::vector<std::string> orbits = {}) {
  SkeletonComponent sc;
  sc.id = std::move(id);
  sc.orbit_ids = std::move(orbits);
  for (auto& [vid, x] : verts) sc.vertices.push_back({vid, {x}});
  sc.edges = std::move(edges);
  return sc;
}

// Rational sampling oracle: collects sample points of each abstract cell
// and flags a collision between distinct abstract points. One-sided: a
// collision it finds is a genuine injectivity failure.
bool sampling_oracle_sees_collision(const SkeletonComponent& sc) {
  struct Sample {
    std::string cell;
    Rat param;
    RatVec image;
  };
  std::map<std::string, RatVec> vertex_image;
  for (const SkeletonVertex& v : sc.vertices) vertex_image[v.id] = v.image;
  std::vector<Sample> samples;
  for (const SkeletonVertex& v : sc.vertices) samples.push_back({"v:" + v.id, Rat(0), v.image});
  const std::vector<Rat> params = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
  for (const auto& [a, b] : sc.edges) {
    for (const Rat& t : params) {
      const RatVec p =
          add(scale(Rat(1) - t, vertex_image.at(a)), scale(t, vertex_image.at(b)));
      samples.push_back({"e:" + a + ":" + b + ":" + to_string(t), t, p});
    }
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].image == samples[j].image) return true;
  return false;
}

}  // namespace

TEST_CASE("component injectivity on the bundled skeletons") {
  for (const Fixture& f : {cp2_fixture(), hirzebruch_fixture()}) {
    for (const InjectivityVerdict& v : component_injectivity(f.skeleton)) CHECK(v.injective);
  }
}

TEST_CASE("injectivity failures") {
  SUBCASE("two vertices with one image") {
    const auto sc = simple_component(
        "dup", {{"a", Rat(0)}, {"b", Rat(1)}, {"c", Rat(0)}}, {{"a", "b"}, {"b", "c"}});
    const auto verdicts = component_injectivity(std::vector<SkeletonComponent>{sc});
    REQUIRE(verdicts.size() == 1);
    CHECK_FALSE(verdicts[0].injective);
  }
  SUBCASE("a loop mapping to the line always fails") {
    const auto sc = simple_component(
        "loop", {{"a", Rat(0)}, {"b", Rat(1)}, {"c", Rat(2)}},
        {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    const auto verdicts = component_injectivity(std::vector<SkeletonComponent>{sc});
    CHECK_FALSE(verdicts[0].injective);
  }
  SUBCASE("constant edge") {
    SkeletonComponent sc;
    sc.id = "flat";
    sc.vertices = {{"a", {0, 0}}, {"b", {0, 0}}};
    sc.edges = {{"a", "b"}};
    const auto verdicts = component_injectivity(std::vector<SkeletonComponent>{sc});
    CHECK_FALSE(verdicts[0].injective);
  }
  SUBCASE("crossing edges in the plane") {
    SkeletonComponent sc;
    sc.id = "cross";
    sc.vertices = {{"a", {0, 0}}, {"b", {1, 1}}, {"c", {1, 0}}, {"d", {0, 1}}};
    sc.edges = {{"a", "b"}, {"b", "c"}, {"c", "d"}};
    const auto verdicts = component_injectivity(std::vector<SkeletonComponent>{sc});
    CHECK_FALSE(verdicts[0].injective);
  }
}

TEST_CASE("malformed skeletons are errors, not verdicts") {
  SkeletonComponent disconnected;
  disconnected.id = "two-islands";
  disconnected.vertices = {{"a", {Rat(0)}}, {"b", {Rat(1)}}};
  CHECK_THROWS_AS(component_injectivity(std::vector<SkeletonComponent>{disconnected}), DataError);

  SkeletonComponent self_loop;
  self_loop.id = "self";
  self_loop.vertices = {{"a", {Rat(0)}}};
  self_loop.edges = {{"a", "a"}};
  CHECK_THROWS_AS(component_injectivity(std::vector<SkeletonComponent>{self_loop}), DataError);

  SkeletonComponent dangling;
  dangling.id = "dangling";
  dangling.vertices = {{"a", {Rat(0)}}};
  dangling.edges = {{"a", "zz"}};
  CHECK_THROWS_AS(component_injectivity(std::vector<SkeletonComponent>{dangling}), DataError);
}

TEST_CASE("implementation dominates the sampling oracle") {
  oracle::Rng rng(0x0bac1e);
  int oracle_hits = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t nverts = static_cast<std::size_t>(rng.range(2, 5));
    SkeletonComponent sc;
    sc.id = "rand";
    for (std::size_t v = 0; v < nverts; ++v)
      sc.vertices.push_back({"v" + std::to_string(v), {rng.rational(-2, 2, 2)}});
    // Random spanning tree keeps it connected; an extra edge sometimes.
    for (std::size_t v = 1; v < nverts; ++v) {
      const std::size_t up = static_cast<std::size_t>(rng.range(0, static_cast<long long>(v) - 1));
      sc.edges.push_back({"v" + std::to_string(up), "v" + std::to_string(v)});
    }
    if (nverts > 2 && rng.range(0, 1)) {
      sc.edges.push_back({"v0", "v" + std::to_string(nverts - 1)});
    }
    const bool oracle_collision = sampling_oracle_sees_collision(sc);
    const auto verdicts = component_injectivity(std::vector<SkeletonComponent>{sc});
    if (oracle_collision) {
      ++oracle_hits;
      CHECK_FALSE(verdicts[0].injective);
    }
  }
  CHECK(oracle_hits > 20);  // the random data does exercise the failing side
}

TEST_CASE("homeomorphism onto delta for the bundled components") {
  for (const Fixture& f : {cp2_fixture(), hirzebruch_fixture()}) {
    for (const auto& component : tall_core_components(f.complex)) {
      const HomeoVerdict v = component_homeo_onto_delta(f.complex, component);
      CHECK(v.kind == HomeoVerdict::Homeo);
    }
    // Global homeomorphisms imply the local check passes.
    CHECK(local_homeo_check(f.complex).ok);
  }
}

namespace {

OrbitComplex with_image(const OrbitComplex& oc, const std::string& id, PLSet image) {
  std::vector<OrbitRecord> orbits = oc.orbits();
  for (OrbitRecord& r : orbits)
    if (r.id == id) r.moment_image = std::move(image);
  return OrbitComplex::create(std::move(orbits), oc.closure_pairs(), oc.delta_tall());
}

}  // namespace

TEST_CASE("coverage gaps carry a witness") {
  const Fixture f = cp2_fixture();
  const OrbitComplex oc = with_image(
      f.complex, "edge-z2", PLSet{{PLCell::make({{Rat(1, 8)}, {Rat(1, 2)}}, {true, true})}});
  const HomeoVerdict v = component_homeo_onto_delta(
      oc, std::vector<std::string>{"edge-z0", "edge-z2", "p1"});
  REQUIRE(v.kind == HomeoVerdict::Fails);
  CHECK(v.cover.kind == CoverResult::Uncovered);
  CHECK(v.cover.witness[0] > 0);
  CHECK(v.cover.witness[0] <= Rat(1, 8));
}

TEST_CASE("local homeomorphism fails on a doubled direction") {
  const Fixture f = cp2_fixture();
  // Second edge re-covers (-1/2, 0): two edges leave the vertex 0 in the
  // same direction.
  const OrbitComplex oc = with_image(
      f.complex, "edge-z2", PLSet{{PLCell::make({{Rat(-1, 2)}, {Rat(0)}}, {true, true})}});
  const LocalHomeoVerdict v = local_homeo_check(oc);
  REQUIRE_FALSE(v.ok);
  // The doubled edge collides at both of its endpoints; the check walks
  // vertices in increasing order and pinpoints the first.
  CHECK(v.vertex == RatVec{Rat(-1, 2)});
}

TEST_CASE("triviality certificate on the bundled fixtures") {
  SUBCASE("two sections") {
    const Fixture f = cp2_fixture();
    const CertificateResult r = triviality_certificate(f.complex, f.skeleton);
    REQUIRE(std::holds_alternative<TrivialityCertificate>(r));
    const auto& cert = std::get<TrivialityCertificate>(r);
    CHECK(cert.basepoint == RatVec{0});
    REQUIRE(cert.sections.size() == 2);
    REQUIRE(cert.labels.size() == 2);
    CHECK(cert.labels[0].skeleton_component == "skel-p1");
    CHECK(cert.labels[0].section == "A1");
    CHECK(cert.labels[0].covering_orbit == "p1");
    CHECK(cert.labels[1].skeleton_component == "skel-sphere");
    CHECK(cert.labels[1].section == "A2");
    CHECK(cert.labels[1].covering_orbit == "sphere-z1");
    CHECK(cert.sample_times.size() == 5);
  }
  SUBCASE("single section") {
    const Fixture f = hirzebruch_fixture();
    const CertificateResult r = triviality_certificate(f.complex, f.skeleton);
    REQUIRE(std::holds_alternative<TrivialityCertificate>(r));
    const auto& cert = std::get<TrivialityCertificate>(r);
    CHECK(cert.basepoint == RatVec{1});
    CHECK(cert.sections.size() == 1);
    REQUIRE(cert.labels.size() == 1);
    CHECK(cert.labels[0].section == "A1");
    CHECK(cert.labels[0].covering_orbit == "p");
  }
}

TEST_CASE("certificate refusals") {
  const Fixture f = cp2_fixture();
  SUBCASE("double cover names the failing component") {
    const OrbitComplex oc = with_image(
        f.complex, "edge-z2", PLSet{{PLCell::make({{Rat(-1, 2)}, {Rat(0)}}, {true, true})}});
    const CertificateResult r = triviality_certificate(oc, f.skeleton);
    REQUIRE(std::holds_alternative<Refusal>(r));
    const Refusal& refusal = std::get<Refusal>(r);
    CHECK(refusal.kind == Refusal::Inconclusive);
    CHECK(refusal.component.find("edge-z0") != std::string::npos);
  }
  SUBCASE("non-injective skeleton: the painting cannot be trivial") {
    std::vector<SkeletonComponent> skeleton = f.skeleton;
    // Fold the sphere component: both endpoints map to the same value.
    skeleton[1].vertices = {{"a", {Rat(1, 4)}}, {"b", {Rat(1, 4)}}};
    const auto verdicts = component_injectivity(skeleton);
    CHECK_FALSE(verdicts[1].injective);
    const CertificateResult r = triviality_certificate(f.complex, skeleton);
    REQUIRE(std::holds_alternative<Refusal>(r));
    CHECK(std::get<Refusal>(r).kind == Refusal::NecessaryConditionFails);
  }
  SUBCASE("skeleton outside every tall-core component is a data error") {
    std::vector<SkeletonComponent> skeleton = f.skeleton;
    skeleton[0].orbit_ids = {"p0"};  // short point: not in the core quotient
    CHECK_THROWS_AS(triviality_certificate(f.complex, skeleton), DataError);
  }
  SUBCASE("colliding components assigned one section are a data error") {
    std::vector<SkeletonComponent> skeleton = f.skeleton;
    skeleton[1].orbit_ids = {"p1"};  // claims the same section as skel-p1
    skeleton[1].vertices = {{"a", {Rat(0)}}};
    skeleton[1].edges.clear();
    CHECK_THROWS_AS(triviality_certificate(f.complex, skeleton), DataError);
  }
}

namespace {

// Synthetic plane complex: a tall exceptional fixed point with weights
// (1,0), (0,1), (-1,-1), three ray orbits, and three sector orbits
// fanning out over a triangular tall image.
struct PlaneComplex {
  OrbitComplex complex;
  std::vector<SkeletonComponent> skeleton;
};

PlaneComplex plane_complex() {
  const RatMat identity = RatMat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  LocalModel fixed = LocalModel::create(
      2, {1, 1, 1}, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}}, {0, 0}, identity);

  auto ray_model = [](RatVec stabilizer, RatVec value) {
    return LocalModel::create(2, {1, 1}, {{Rat(1)}, {Rat(-1)}}, std::move(value),
                              RatMat::from_rows({std::move(stabilizer)}, 2));
  };
  auto free_model = [](RatVec value) {
    return LocalModel::create(2, {1}, {RatVec{}}, std::move(value), RatMat(0, 2));
  };

  auto point_cell = [](Rat x, Rat y) {
    return PLSet{{PLCell::make({{std::move(x), std::move(y)}}, {})}};
  };
  auto half_open_seg = [](RatVec a, RatVec b) {
    // open at a, closed at b
    return PLSet{{PLCell::make({std::move(a), std::move(b)}, {true, false})}};
  };
  auto sector_cell = [](RatVec apex_v, RatVec out1, RatVec out2) {
    // Everything open except the outer edge between out1 and out2.
    return PLSet{{PLCell::make({std::move(apex_v), std::move(out1), std::move(out2)},
                               {true, true, true, true, false, true})}};
  };

  std::vector<OrbitRecord> orbits;
  orbits.push_back({"fixed", fixed, false, std::nullopt, point_cell(0, 0)});
  orbits.push_back({"ray-x", ray_model({Rat(0), Rat(1)}, {1, 0}), false, std::nullopt,
                    half_open_seg({0, 0}, {2, 0})});
  orbits.push_back({"ray-y", ray_model({Rat(1), Rat(0)}, {0, 1}), false, std::nullopt,
                    half_open_seg({0, 0}, {0, 2})});
  orbits.push_back({"ray-diag", ray_model({Rat(1), Rat(-1)}, {-1, -1}), false, std::nullopt,
                    half_open_seg({0, 0}, {-2, -2})});
  orbits.push_back({"sector-xy", free_model({Rat(1, 2), Rat(1, 2)}), false, std::nullopt,
                    sector_cell({0, 0}, {2, 0}, {0, 2})});
  orbits.push_back({"sector-xdiag", free_model({Rat(1, 2), Rat(-1, 4)}), false, std::nullopt,
                    sector_cell({0, 0}, {2, 0}, {-2, -2})});
  orbits.push_back({"sector-ydiag", free_model({Rat(-1, 4), Rat(0)}), false, std::nullopt,
                    sector_cell({0, 0}, {0, 2}, {-2, -2})});

  std::vector<std::pair<std::string, std::string>> closure = {
      {"fixed", "ray-x"},    {"fixed", "ray-y"},      {"fixed", "ray-diag"},
      {"ray-x", "sector-xy"}, {"ray-x", "sector-xdiag"}, {"ray-y", "sector-xy"},
      {"ray-y", "sector-ydiag"}, {"ray-diag", "sector-xdiag"}, {"ray-diag", "sector-ydiag"},
  };

  DeltaTall delta = DeltaTall::make({{2, 0}, {0, 2}, {-2, -2}}, {});

  PlaneComplex out{
      OrbitComplex::create(std::move(orbits), std::move(closure), std::move(delta)), {}};

  SkeletonComponent tripod;
  tripod.id = "skel-tripod";
  tripod.orbit_ids = {"fixed", "ray-diag", "ray-x", "ray-y"};
  tripod.vertices = {{"c", {0, 0}}, {"ex", {2, 0}}, {"ey", {0, 2}}, {"ed", {-2, -2}}};
  tripod.edges = {{"c", "ex"}, {"c", "ey"}, {"c", "ed"}};
  out.skeleton = {tripod};
  return out;
}

}  // namespace

TEST_CASE("two-dimensional complex end to end") {
  const PlaneComplex pc = plane_complex();
  CHECK(validate(pc.complex).empty());

  // One tall-core component covering the whole triangle.
  const auto components = tall_core_components(pc.complex);
  REQUIRE(components.size() == 1);
  CHECK(components[0].size() == 7);
  CHECK(component_homeo_onto_delta(pc.complex, components[0]).kind == HomeoVerdict::Homeo);
  CHECK(local_homeo_check(pc.complex).ok);

  // The ray germs decompose the plane around their moment values; each
  // sector image sits inside exactly one open cell.
  const auto cells = moment_cone_cells(*pc.complex.record("fixed").model);
  REQUIRE(cells.size() == 7);
  const LocateResult in_sector = locate(cells, RatVec{Rat(1, 2), Rat(1, 2)});
  REQUIRE(in_sector.kind == LocateResult::Unique);
  CHECK(in_sector.located == IndexSet{0, 1});

  // A ray germ decomposes the plane into its axis and two open half
  // planes; location solves through the subspace part.
  const auto ray_cells = moment_cone_cells(*pc.complex.record("ray-x").model);
  REQUIRE(ray_cells.size() == 3);
  const LocateResult on_axis = locate(ray_cells, RatVec{-5, 0});
  REQUIRE(on_axis.kind == LocateResult::Unique);
  CHECK(on_axis.located == IndexSet{});
  const LocateResult below_axis = locate(ray_cells, RatVec{3, -2});
  REQUIRE(below_axis.kind == LocateResult::Unique);
  CHECK(below_axis.located == IndexSet{1});

  const CertificateResult result = triviality_certificate(pc.complex, pc.skeleton);
  REQUIRE(std::holds_alternative<TrivialityCertificate>(result));
  const auto& cert = std::get<TrivialityCertificate>(result);
  CHECK(cert.basepoint == RatVec{0, 0});
  REQUIRE(cert.labels.size() == 1);
  CHECK(cert.labels[0].section == "A1");
  CHECK(cert.labels[0].covering_orbit == "fixed");

  // Break the fan: opening the outer edge of one sector leaves the
  // boundary uncovered and the certificate is refused.
  std::vector<OrbitRecord> orbits = pc.complex.orbits();
  for (OrbitRecord& r : orbits) {
    if (r.id == "sector-xy")
      r.moment_image =
          PLSet{{PLCell::make({{0, 0}, {2, 0}, {0, 2}}, {true, true, true, true, true, true})}};
  }
  const OrbitComplex broken = OrbitComplex::create(std::move(orbits), pc.complex.closure_pairs(),
                                                   pc.complex.delta_tall());
  const HomeoVerdict verdict = component_homeo_onto_delta(broken, components[0]);
  REQUIRE(verdict.kind == HomeoVerdict::Fails);
  CHECK(verdict.cover.kind == CoverResult::Uncovered);
  const CertificateResult refused = triviality_certificate(broken, pc.skeleton);
  REQUIRE(std::holds_alternative<Refusal>(refused));
  CHECK(std::get<Refusal>(refused).kind == Refusal::Inconclusive);
}

TEST_CASE("dimension above two is reported, not silently wrong") {
  PLSet image;
  image.cells.push_back(PLCell::make({{0, 0, 0}}, {}));
  std::vector<OrbitRecord> orbits;
  orbits.push_back({"family", std::nullopt, true, OrbitFlags{true, true}, image});
  const OrbitComplex oc = OrbitComplex::create(
      std::move(orbits), {}, DeltaTall::make({{0, 0, 0}}, {}));
  CHECK(validate(oc).empty());
  const HomeoVerdict v =
      component_homeo_onto_delta(oc, std::vector<std::string>{"family"});
  CHECK(v.kind == HomeoVerdict::Unsupported);
  const LocalHomeoVerdict local = local_homeo_check(oc);
  CHECK(local.unsupported);
}

TEST_CASE("certificate success implies skeleton injectivity") {
  for (const Fixture& f : {cp2_fixture(), hirzebruch_fixture()}) {
    const CertificateResult r = triviality_certificate(f.complex, f.skeleton);
    if (std::holds_alternative<TrivialityCertificate>(r)) {
      for (const InjectivityVerdict& v : component_injectivity(f.skeleton)) CHECK(v.injective);
    }
  }
}

TEST_CASE("labels are stable under barycentric subdivision") {
  const Fixture f = cp2_fixture();
  std::vector<SkeletonComponent> subdivided = f.skeleton;
  SkeletonComponent& sphere = subdivided[1];
  REQUIRE(sphere.edges.size() == 1);
  sphere.vertices.push_back({"m", {Rat(0)}});
  sphere.edges = {{"a", "m"}, {"m", "b"}};

  const CertificateResult before = triviality_certificate(f.complex, f.skeleton);
  const CertificateResult after = triviality_certificate(f.complex, subdivided);
  REQUIRE(std::holds_alternative<TrivialityCertificate>(before));
  REQUIRE(std::holds_alternative<TrivialityCertificate>(after));
  const auto& cb = std::get<TrivialityCertificate>(before);
  const auto& ca = std::get<TrivialityCertificate>(after);
  CHECK(cb.basepoint == ca.basepoint);
  REQUIRE(cb.labels.size() == ca.labels.size());
  for (std::size_t i = 0; i < cb.labels.size(); ++i) {
    CHECK(cb.labels[i].section == ca.labels[i].section);
    CHECK(cb.labels[i].covering_orbit == ca.labels[i].covering_orbit);
  }
}
