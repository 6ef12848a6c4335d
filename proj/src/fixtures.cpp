#include "c1ham/fixtures.hpp"

namespace c1ham {

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

PLSet point_image(const Rat& x) {
  PLSet s;
  s.cells.push_back(PLCell::make({{x}}, {}));
  return s;
}

PLSet open_interval_image(const Rat& a, const Rat& b) {
  PLSet s;
  s.cells.push_back(PLCell::make({{a}, {b}}, {true, true}));
  return s;
}

LocalModel fixed_point_model(const Rat& w0, const Rat& w1, const Rat& value) {
  // d = 1, full circle stabilizer, two slice weights.
  IntVec xi = xi_from_weights(std::vector<RatVec>{{w0}, {w1}});
  return LocalModel::create(1, std::move(xi), {{w0}, {w1}}, {value},
                            RatMat::from_rows({{Rat(1)}}, 1));
}

LocalModel free_orbit_model(const Rat& value) {
  // Trivial stabilizer: one empty weight, xi = (1).
  return LocalModel::create(1, {Int(1)}, {RatVec{}}, {value}, RatMat(0, 1));
}

LocalModel torsion_sphere_model(const Rat& value) {
  // Zero-dimensional stabilizer of order two: xi = (2) keeps the torsion
  // the weights cannot see.
  return LocalModel::create(1, {Int(2)}, {RatVec{}}, {value}, RatMat(0, 1));
}

}  // namespace

Fixture cp2_fixture() {
  std::vector<OrbitRecord> orbits;

  orbits.push_back({"p0", fixed_point_model(-1, -2, Rat(1, 2)), false, std::nullopt,
                    point_image(Rat(1, 2))});
  orbits.push_back(
      {"p1", fixed_point_model(1, -1, Rat(0)), false, std::nullopt, point_image(Rat(0))});
  orbits.push_back({"p2", fixed_point_model(2, 1, Rat(-1, 2)), false, std::nullopt,
                    point_image(Rat(-1, 2))});
  orbits.push_back({"edge-z0", free_orbit_model(Rat(-1, 4)), false, std::nullopt,
                    open_interval_image(Rat(-1, 2), Rat(0))});
  orbits.push_back({"edge-z2", free_orbit_model(Rat(1, 4)), false, std::nullopt,
                    open_interval_image(Rat(0), Rat(1, 2))});
  orbits.push_back({"sphere-z1", torsion_sphere_model(Rat(0)), false, std::nullopt,
                    open_interval_image(Rat(-1, 2), Rat(1, 2))});
  orbits.push_back({"generic", std::nullopt, true, OrbitFlags{true, false},
                    open_interval_image(Rat(-1, 2), Rat(1, 2))});

  std::vector<std::pair<std::string, std::string>> closure = {
      {"p1", "edge-z0"}, {"p2", "edge-z0"}, {"p0", "edge-z2"},    {"p1", "edge-z2"},
      {"p0", "sphere-z1"}, {"p2", "sphere-z1"}, {"p0", "generic"}, {"p2", "generic"},
  };

  DeltaTall delta = DeltaTall::make({rv({Rat(-1, 2)}), rv({Rat(1, 2)})}, {true, true});

  Fixture f;
  f.name = "cp2";
  f.complex = OrbitComplex::create(std::move(orbits), std::move(closure), std::move(delta));

  SkeletonComponent isolated;
  isolated.id = "skel-p1";
  isolated.orbit_ids = {"p1"};
  isolated.vertices = {{"v0", rv({Rat(0)})}};

  SkeletonComponent sphere;
  sphere.id = "skel-sphere";
  sphere.orbit_ids = {"sphere-z1"};
  sphere.vertices = {{"a", rv({Rat(-1, 2)})}, {"b", rv({Rat(1, 2)})}};
  sphere.edges = {{"a", "b"}};

  f.skeleton = {isolated, sphere};
  f.expected = {3, 4, 6, 2, 2};
  return f;
}

Fixture hirzebruch_fixture() {
  std::vector<OrbitRecord> orbits;

  orbits.push_back(
      {"p", fixed_point_model(-1, 1, Rat(1)), false, std::nullopt, point_image(Rat(1))});
  orbits.push_back(
      {"q", fixed_point_model(-1, -1, Rat(2)), false, std::nullopt, point_image(Rat(2))});
  // A point of the fixed sphere: one zero weight along the sphere, one
  // transverse weight.
  IntVec n0_xi = xi_from_weights(std::vector<RatVec>{{Rat(0)}, {Rat(1)}});
  orbits.push_back({"n0",
                    LocalModel::create(1, std::move(n0_xi), {{Rat(0)}, {Rat(1)}}, {Rat(0)},
                                       RatMat::from_rows({{Rat(1)}}, 1)),
                    false, std::nullopt, point_image(Rat(0))});
  orbits.push_back({"edge-z1", free_orbit_model(Rat(3, 2)), false, std::nullopt,
                    open_interval_image(Rat(1), Rat(2))});
  orbits.push_back({"edge-z3", free_orbit_model(Rat(1, 2)), false, std::nullopt,
                    open_interval_image(Rat(0), Rat(1))});
  orbits.push_back({"generic", std::nullopt, true, OrbitFlags{true, false},
                    open_interval_image(Rat(0), Rat(2))});

  std::vector<std::pair<std::string, std::string>> closure = {
      {"p", "edge-z1"}, {"q", "edge-z1"}, {"p", "edge-z3"}, {"n0", "edge-z3"}, {"q", "generic"},
  };

  DeltaTall delta = DeltaTall::make({rv({Rat(0)}), rv({Rat(2)})}, {false, true});

  Fixture f;
  f.name = "hirzebruch";
  f.complex = OrbitComplex::create(std::move(orbits), std::move(closure), std::move(delta));

  SkeletonComponent isolated;
  isolated.id = "skel-p";
  isolated.orbit_ids = {"p"};
  isolated.vertices = {{"v0", rv({Rat(1)})}};

  f.skeleton = {isolated};
  f.expected = {3, 3, 5, 1, 1};
  return f;
}

Fixture fixture_by_name(const std::string& name) {
  if (name == "cp2") return cp2_fixture();
  if (name == "hirzebruch") return hirzebruch_fixture();
  std::string names;
  for (const std::string& n : fixture_names()) {
    if (!names.empty()) names += ", ";
    names += n;
  }
  throw DataError("unknown fixture '" + name + "'; available: " + names);
}

std::vector<std::string> fixture_names() { return {"cp2", "hirzebruch"}; }

}  // namespace c1ham
