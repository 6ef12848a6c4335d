#include "c1ham/painting.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace c1ham {

namespace {

struct ComponentGeometry {
  std::map<std::string, RatVec> vertex_image;
  // edges as (vertex id, vertex id), validated
  std::vector<std::pair<std::string, std::string>> edges;
};

ComponentGeometry check_component_shape(const SkeletonComponent& sc) {
  if (sc.vertices.empty())
    throw DataError("skeleton component '" + sc.id + "' has no vertices");
  ComponentGeometry geo;
  const std::size_t dim = sc.vertices.front().image.size();
  for (const SkeletonVertex& v : sc.vertices) {
    if (v.image.size() != dim)
      throw DataError("skeleton component '" + sc.id + "': vertex images of unequal dimension");
    if (!geo.vertex_image.emplace(v.id, v.image).second)
      throw DataError("skeleton component '" + sc.id + "': duplicate vertex id '" + v.id + "'");
  }
  for (const auto& [a, b] : sc.edges) {
    if (!geo.vertex_image.count(a) || !geo.vertex_image.count(b))
      throw DataError("skeleton component '" + sc.id + "': edge references unknown vertex");
    if (a == b)
      throw DataError("skeleton component '" + sc.id + "': edge endpoints coincide");
    geo.edges.push_back({a, b});
  }

  // Connectivity of the underlying complex.
  std::map<std::string, std::string> parent;
  for (const auto& [id, image] : geo.vertex_image) parent[id] = id;
  auto find = [&](std::string x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : geo.edges) parent[find(a)] = find(b);
  std::set<std::string> roots;
  for (const auto& [id, image] : geo.vertex_image) roots.insert(find(id));
  if (roots.size() > 1)
    throw DataError("skeleton component '" + sc.id + "' is not connected");
  return geo;
}

bool shares_vertex(const std::pair<std::string, std::string>& e, const std::string& v) {
  return e.first == v || e.second == v;
}

InjectivityVerdict check_injectivity(const SkeletonComponent& sc) {
  const ComponentGeometry geo = check_component_shape(sc);
  InjectivityVerdict verdict{sc.id, true, ""};
  auto fail = [&](std::string detail) {
    verdict.injective = false;
    verdict.detail = std::move(detail);
  };

  // Degenerate edges first: a constant edge map is never injective.
  for (const auto& [a, b] : geo.edges) {
    if (geo.vertex_image.at(a) == geo.vertex_image.at(b)) {
      fail("edge (" + a + ", " + b + ") has a constant image");
      return verdict;
    }
  }

  const std::vector<std::string> vertex_ids = [&] {
    std::vector<std::string> ids;
    for (const auto& [id, image] : geo.vertex_image) ids.push_back(id);
    return ids;
  }();

  // vertex vs vertex
  for (std::size_t i = 0; i < vertex_ids.size() && verdict.injective; ++i) {
    for (std::size_t j = i + 1; j < vertex_ids.size(); ++j) {
      if (geo.vertex_image.at(vertex_ids[i]) == geo.vertex_image.at(vertex_ids[j])) {
        fail("vertices '" + vertex_ids[i] + "' and '" + vertex_ids[j] +
             "' share the image point " +
             to_string(std::span<const Rat>(geo.vertex_image.at(vertex_ids[i]))));
        break;
      }
    }
  }
  if (!verdict.injective) return verdict;

  // vertex vs edge not containing it
  for (const std::string& v : vertex_ids) {
    for (const auto& e : geo.edges) {
      if (shares_vertex(e, v)) continue;
      const RatVec& p = geo.vertex_image.at(v);
      const auto t = segment_param(geo.vertex_image.at(e.first), geo.vertex_image.at(e.second), p);
      if (t && *t >= 0 && *t <= 1) {
        fail("vertex '" + v + "' lands on the image of edge (" + e.first + ", " + e.second + ")");
        return verdict;
      }
    }
  }

  // edge vs edge
  for (std::size_t i = 0; i < geo.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < geo.edges.size(); ++j) {
      const auto& e = geo.edges[i];
      const auto& f = geo.edges[j];
      const SegHit hit =
          intersect_segments(geo.vertex_image.at(e.first), geo.vertex_image.at(e.second),
                             geo.vertex_image.at(f.first), geo.vertex_image.at(f.second));
      if (hit.kind == SegHit::Empty) {
        if (shares_vertex(f, e.first) || shares_vertex(f, e.second)) {
          throw DataError("skeleton component '" + sc.id +
                          "': edges share a vertex but their images do not meet");
        }
        continue;
      }
      std::vector<std::string> shared;
      for (const std::string& v : {e.first, e.second})
        if (shares_vertex(f, v)) shared.push_back(v);
      if (hit.kind == SegHit::Overlap) {
        fail("edges (" + e.first + ", " + e.second + ") and (" + f.first + ", " + f.second +
             ") overlap along a segment");
        return verdict;
      }
      // A single intersection point must be the image of a shared vertex.
      bool accounted = false;
      for (const std::string& v : shared) {
        const RatVec& p = geo.vertex_image.at(v);
        RatVec at = add(geo.vertex_image.at(e.first),
                        scale(hit.s, sub(geo.vertex_image.at(e.second),
                                         geo.vertex_image.at(e.first))));
        if (at == p) accounted = true;
      }
      if (!accounted) {
        fail("edges (" + e.first + ", " + e.second + ") and (" + f.first + ", " + f.second +
             ") cross away from a shared vertex");
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace

std::vector<InjectivityVerdict> component_injectivity(
    std::span<const SkeletonComponent> components) {
  std::vector<InjectivityVerdict> verdicts;
  verdicts.reserve(components.size());
  for (const SkeletonComponent& sc : components) verdicts.push_back(check_injectivity(sc));
  return verdicts;
}

HomeoVerdict component_homeo_onto_delta(const OrbitComplex& oc,
                                        std::span<const std::string> component) {
  std::vector<CoverMember> members;
  members.reserve(component.size());
  for (const std::string& id : component)
    members.push_back({id, &oc.record(id).moment_image});
  const CoverResult cover = cover_exactly_once(members, oc.delta_tall());
  HomeoVerdict verdict;
  verdict.cover = cover;
  if (cover.kind == CoverResult::Ok)
    verdict.kind = HomeoVerdict::Homeo;
  else if (cover.kind == CoverResult::Unsupported)
    verdict.kind = HomeoVerdict::Unsupported;
  else
    verdict.kind = HomeoVerdict::Fails;
  return verdict;
}

LocalHomeoVerdict local_homeo_check(const OrbitComplex& oc) {
  for (const std::vector<std::string>& component : tall_core_components(oc)) {
    std::vector<CoverMember> members;
    for (const std::string& id : component)
      members.push_back({id, &oc.record(id).moment_image});
    const StarVerdict star = check_vertex_stars(members);
    if (star.unsupported) return {false, true, component.front(), {}, star.message};
    if (!star.ok) return {false, false, component.front(), star.vertex, star.message};
  }
  return {};
}

namespace {

std::string join_ids(std::span<const std::string> ids) {
  std::string out;
  for (const std::string& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

// Exact emptiness of the pairwise intersections of the two components'
// closed cell images (vertices and segments).
bool skeleton_images_meet(const SkeletonComponent& a, const SkeletonComponent& b) {
  const ComponentGeometry ga = check_component_shape(a);
  const ComponentGeometry gb = check_component_shape(b);
  for (const auto& [ida, pa] : ga.vertex_image) {
    for (const auto& [idb, pb] : gb.vertex_image)
      if (pa == pb) return true;
    for (const auto& e : gb.edges) {
      const auto t = segment_param(gb.vertex_image.at(e.first), gb.vertex_image.at(e.second), pa);
      if (t && *t >= 0 && *t <= 1) return true;
    }
  }
  for (const auto& e : ga.edges) {
    for (const auto& [idb, pb] : gb.vertex_image) {
      const auto t = segment_param(ga.vertex_image.at(e.first), ga.vertex_image.at(e.second), pb);
      if (t && *t >= 0 && *t <= 1) return true;
    }
    for (const auto& f : gb.edges) {
      const SegHit hit =
          intersect_segments(ga.vertex_image.at(e.first), ga.vertex_image.at(e.second),
                             gb.vertex_image.at(f.first), gb.vertex_image.at(f.second));
      if (hit.kind != SegHit::Empty) return true;
    }
  }
  return false;
}

}  // namespace

CertificateResult triviality_certificate(const OrbitComplex& oc,
                                         std::span<const SkeletonComponent> skeleton) {
  {
    const std::vector<Violation> violations = validate(oc);
    if (!violations.empty())
      throw DataError("orbit complex fails validation: " + violations.front().message);
  }

  const std::vector<std::vector<std::string>> components = tall_core_components(oc);

  // Assign each skeleton component its section by orbit membership.
  std::vector<std::size_t> assignment(skeleton.size());
  for (std::size_t s = 0; s < skeleton.size(); ++s) {
    const SkeletonComponent& sc = skeleton[s];
    if (sc.orbit_ids.empty())
      throw DataError("skeleton component '" + sc.id + "' lists no orbits");
    bool found = false;
    for (std::size_t c = 0; c < components.size() && !found; ++c) {
      const auto& comp = components[c];
      bool all = true;
      for (const std::string& id : sc.orbit_ids) {
        (void)oc.index_of(id);  // unknown ids are data errors
        if (!std::binary_search(comp.begin(), comp.end(), id)) all = false;
      }
      if (all) {
        assignment[s] = c;
        found = true;
      }
    }
    if (!found)
      throw DataError("skeleton component '" + sc.id +
                      "' is not contained in any tall-core component");
  }

  // Necessary condition: the orbital moment map must be injective on
  // every skeleton component.
  for (const InjectivityVerdict& v : component_injectivity(skeleton)) {
    if (!v.injective)
      return Refusal{Refusal::NecessaryConditionFails, v.component,
                     "orbital moment map is not injective on skeleton component '" + v.component +
                         "' (" + v.detail + "); the painting cannot be trivial"};
  }

  // Certificate route: every tall-core component must map
  // homeomorphically onto delta_tall.
  for (std::size_t c = 0; c < components.size(); ++c) {
    const HomeoVerdict verdict = component_homeo_onto_delta(oc, components[c]);
    if (verdict.kind != HomeoVerdict::Homeo) {
      return Refusal{Refusal::Inconclusive, join_ids(components[c]),
                     "tall-core component {" + join_ids(components[c]) +
                         "} does not map homeomorphically onto delta_tall (" +
                         verdict.cover.message +
                         "); the certificate route is unavailable (inconclusive)"};
    }
  }

  // Two skeleton components in one section would have to occupy disjoint
  // fibers of an injective section map; colliding images are
  // inconsistent data.
  for (std::size_t s = 0; s < skeleton.size(); ++s) {
    for (std::size_t t = s + 1; t < skeleton.size(); ++t) {
      if (assignment[s] != assignment[t]) continue;
      if (skeleton_images_meet(skeleton[s], skeleton[t]))
        throw DataError("skeleton components '" + skeleton[s].id + "' and '" + skeleton[t].id +
                        "' share a section but their moment images meet");
    }
  }

  TrivialityCertificate cert;
  cert.basepoint = oc.delta_tall().centroid();
  cert.sections = components;
  cert.sample_times = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};

  // Straight-line deformation: verify exactly, at each sample time, that
  // every skeleton cell midpoint stays inside the convex delta_tall.
  for (const SkeletonComponent& sc : skeleton) {
    const ComponentGeometry geo = check_component_shape(sc);
    std::vector<RatVec> probes;
    if (geo.edges.empty()) {
      for (const auto& [id, image] : geo.vertex_image) probes.push_back(image);
    } else {
      for (const auto& [a, b] : geo.edges)
        probes.push_back(scale(Rat(1, 2), add(geo.vertex_image.at(a), geo.vertex_image.at(b))));
    }
    for (const RatVec& p : probes) {
      for (const Rat& t : cert.sample_times) {
        const RatVec moved = add(scale(Rat(1) - t, p), scale(t, cert.basepoint));
        if (!oc.delta_tall().contains(moved))
          throw DataError("skeleton component '" + sc.id +
                          "' leaves delta_tall along the retraction (time " + to_string(t) + ")");
      }
    }
  }

  for (std::size_t s = 0; s < skeleton.size(); ++s) {
    SectionLabel label;
    label.skeleton_component = skeleton[s].id;
    label.section = "A" + std::to_string(assignment[s] + 1);
    for (const std::string& id : components[assignment[s]]) {
      if (oc.record(id).moment_image.contains(cert.basepoint)) {
        label.covering_orbit = id;
        break;
      }
    }
    cert.labels.push_back(std::move(label));
  }
  return cert;
}

}  // namespace c1ham
