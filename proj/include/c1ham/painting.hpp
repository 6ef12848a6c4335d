#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "c1ham/orbit_complex.hpp"
#include "c1ham/plgeom.hpp"
#include "c1ham/rational.hpp"

namespace c1ham {

struct SkeletonVertex {
  std::string id;
  RatVec image;
};

/// Connected abstract 1-complex with an affine map per cell, plus the
/// orbit ids whose quotients it comprises. Section assignment is
/// set-theoretic: overlapping moment images cannot distinguish the
/// components, the orbit identities can.
struct SkeletonComponent {
  std::string id;
  std::vector<std::string> orbit_ids;
  std::vector<SkeletonVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct InjectivityVerdict {
  std::string component;
  bool injective = true;
  std::string detail;  // failing pair and image point when not injective
};

/// Exact pairwise cell-image intersection on each component; the map is
/// injective exactly when images of disjoint abstract cells are disjoint
/// and shared vertices account for every remaining intersection. Throws
/// DataError on malformed complexes.
std::vector<InjectivityVerdict> component_injectivity(
    std::span<const SkeletonComponent> components);

struct HomeoVerdict {
  enum Kind { Homeo, Fails, Unsupported } kind = Homeo;
  CoverResult cover;  // witness detail for Fails / Unsupported
};

/// true verdict iff the member orbit images are pairwise disjoint and
/// cover delta_tall exactly.
HomeoVerdict component_homeo_onto_delta(const OrbitComplex& oc,
                                        std::span<const std::string> component);

struct LocalHomeoVerdict {
  bool ok = true;
  bool unsupported = false;
  std::string component;  // failing component (smallest member id)
  RatVec vertex;
  std::string detail;
};

/// Star injectivity at every vertex of every tall-core orbit image,
/// component by component. Failure pinpoints the vertex.
LocalHomeoVerdict local_homeo_check(const OrbitComplex& oc);

struct SectionLabel {
  std::string skeleton_component;
  std::string section;        // A1, A2, ... in component order
  std::string covering_orbit; // member orbit whose image contains the basepoint
};

struct TrivialityCertificate {
  RatVec basepoint;  // interior point of delta_tall (vertex average)
  std::vector<std::vector<std::string>> sections;  // tall-core components
  std::vector<SectionLabel> labels;                // one constant label per component
  std::vector<Rat> sample_times;  // deformation times at which the check ran
};

struct Refusal {
  enum Kind {
    /// The orbital moment map is not injective on a skeleton component:
    /// the painting cannot be trivial.
    NecessaryConditionFails,
    /// A tall-core component does not map homeomorphically onto
    /// delta_tall: the certificate route is unavailable (inconclusive,
    /// not a proof of non-triviality).
    Inconclusive,
  } kind = Inconclusive;
  std::string component;
  std::string message;
};

using CertificateResult = std::variant<TrivialityCertificate, Refusal>;

/// Emits the homotopy-to-locally-constant certificate when every
/// tall-core component maps homeomorphically onto the convex delta_tall:
/// the straight-line retraction to the basepoint deforms the painting,
/// and injectivity along the way reduces to per-component injectivity of
/// the section maps, which the homeomorphism verdicts establish. The
/// deformed basepoint membership is verified exactly at the recorded
/// sample times.
CertificateResult triviality_certificate(const OrbitComplex& oc,
                                         std::span<const SkeletonComponent> skeleton);

}  // namespace c1ham
