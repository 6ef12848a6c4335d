#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "c1ham/cone.hpp"
#include "c1ham/local_model.hpp"
#include "c1ham/orbit_complex.hpp"
#include "c1ham/painting.hpp"
#include "c1ham/plgeom.hpp"

namespace c1ham::io {

using Json = nlohmann::ordered_json;

// Rationals travel as strings "p/q" ("/q" omitted when q = 1) in every
// schema; integers as JSON numbers when they fit, strings otherwise.

Json rational_to_json(const Rat& r);
Rat rational_from_json(const Json& j, const std::string& context);
Json integer_to_json(const Int& n);
Int integer_from_json(const Json& j, const std::string& context);

Json vec_to_json(std::span<const Rat> v);
RatVec vec_from_json(const Json& j, const std::string& context);

// { "dim_T", "xi", "weights"?, "moment_value", "h_embedding"? }
Json local_model_to_json(const LocalModel& m);
LocalModel local_model_from_json(const Json& j);
LocalModel load_local_model(const std::string& path);

// { "ambient_dim", "apex", "subspace_basis", "rays", "open_rays" }
Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j);

// { "cells": [ { "vertices", "open_faces" } ] }
Json plset_to_json(const PLSet& s);
PLSet plset_from_json(const Json& j, const std::string& context);

// { "vertices", "open_faces" }
Json delta_to_json(const DeltaTall& d);
DeltaTall delta_from_json(const Json& j);

// { "orbits": [...], "closure": [[below, above]], "delta_tall": {...} }
Json orbit_complex_to_json(const OrbitComplex& oc);
OrbitComplex orbit_complex_from_json(const Json& j);
OrbitComplex load_orbit_complex(const std::string& path);

// { "components": [ { "id", "orbits", "vertices", "edges" } ] }
Json skeleton_to_json(std::span<const SkeletonComponent> components);
std::vector<SkeletonComponent> skeleton_from_json(const Json& j);
std::vector<SkeletonComponent> load_skeleton(const std::string& path);

Json parse_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace c1ham::io
