#pragma once

#include <string>
#include <vector>

#include "c1ham/orbit_complex.hpp"
#include "c1ham/painting.hpp"

namespace c1ham {

/// Bundled worked example: a complete orbit complex with its skeleton
/// and the values the pipeline must reproduce exactly.
struct Fixture {
  std::string name;
  OrbitComplex complex;
  std::vector<SkeletonComponent> skeleton;

  struct Expected {
    std::size_t catchment_of_first_tall_exceptional = 0;
    std::size_t core_orbits = 0;
    std::size_t core_closure_orbits = 0;
    std::size_t tall_components = 0;
    std::size_t certificate_sections = 0;
  } expected;
};

/// A circle acting on the projective plane with three fixed points and a
/// doubly-covered fixed sphere: two short fixed points, one tall
/// exceptional fixed point, and a tall exceptional sphere orbit.
Fixture cp2_fixture();

/// A circle acting on a Hirzebruch surface: one short fixed point, one
/// tall exceptional fixed point, and a pointwise fixed sphere of tall
/// non-exceptional points.
Fixture hirzebruch_fixture();

Fixture fixture_by_name(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace c1ham
