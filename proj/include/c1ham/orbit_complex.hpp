#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "c1ham/cone.hpp"
#include "c1ham/local_model.hpp"
#include "c1ham/plgeom.hpp"
#include "c1ham/rational.hpp"

namespace c1ham {

struct OrbitFlags {
  bool tall = false;
  bool exceptional = false;
};

/// One torus-orbit record: either a modeled special orbit (flags derived
/// from the germ) or a generic family marker with declared flags.
struct OrbitRecord {
  std::string id;
  std::optional<LocalModel> model;
  bool generic = false;
  std::optional<OrbitFlags> declared_flags;
  PLSet moment_image;

  OrbitFlags flags() const;
};

/// Finite poset of orbit records with closure relations (below, above):
/// below lies in the closure of above. The relation is closed
/// transitively on construction; strictness is checked by validate, not
/// by the constructor, so that defective data can be reported as
/// violations.
class OrbitComplex {
 public:
  static OrbitComplex create(std::vector<OrbitRecord> orbits,
                             std::vector<std::pair<std::string, std::string>> closure,
                             DeltaTall delta_tall);

  const std::vector<OrbitRecord>& orbits() const { return orbits_; }
  const std::vector<std::pair<std::string, std::string>>& closure_pairs() const {
    return closure_;
  }
  const DeltaTall& delta_tall() const { return delta_tall_; }

  std::size_t index_of(const std::string& id) const;
  const OrbitRecord& record(const std::string& id) const { return orbits_[index_of(id)]; }

  /// Transitive reachability: below is in the closure of above.
  bool below(std::size_t below_idx, std::size_t above_idx) const;
  bool has_cycle() const { return has_cycle_; }

 private:
  std::vector<OrbitRecord> orbits_;
  std::vector<std::pair<std::string, std::string>> closure_;
  DeltaTall delta_tall_;
  std::vector<std::vector<bool>> reach_;  // reach_[b][a]: b in closure of a
  bool has_cycle_ = false;
};

/// The index sets of the finitely many orbits whose closures contain the
/// modeled point, in lexicographic order; the empty set is the orbit of
/// the point itself. Short points are refused: their catchment is not
/// finite.
std::vector<IndexSet> catchment_orbits(const LocalModel& m);

struct CatchmentPoset {
  std::vector<IndexSet> patterns;
  /// Hasse edges as (smaller, larger) indices into `patterns`.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
};
CatchmentPoset catchment_poset(const LocalModel& m);

/// true iff the support indexes a single orbit (independent weights);
/// false marks a positive-dimensional family.
bool pattern_is_single_orbit(const LocalModel& m, const IndexSet& support);

/// true iff the origin of the slice lies in the closure of the orbit
/// with the given support, decided by the separator alternative.
bool origin_in_orbit_closure(const LocalModel& m, const IndexSet& support);

/// Orbits whose closure contains a tall exceptional orbit (possibly
/// themselves). Sorted by id.
std::vector<std::string> core(const OrbitComplex& oc);

/// Downward closure of the core under the closure order. Sorted by id.
std::vector<std::string> core_closure(const OrbitComplex& oc);

/// Tall orbits of the core closure, grouped into connected components of
/// the comparability graph. Components ordered by smallest member id;
/// members sorted by id.
std::vector<std::vector<std::string>> tall_core_components(const OrbitComplex& oc);

/// Covering pairs of the closure order restricted to the given ids.
std::vector<std::pair<std::string, std::string>> closure_hasse(const OrbitComplex& oc,
                                                               std::span<const std::string> ids);

struct Violation {
  std::string kind;
  std::string message;
};

/// Consistency rules the data must satisfy: strictness of the order,
/// declared flags against the model classification, moment images inside
/// the moment cones of orbits below them, and catchment counts and
/// grading above every tall modeled orbit. Violations are data, not
/// exceptions.
std::vector<Violation> validate(const OrbitComplex& oc);

}  // namespace c1ham
