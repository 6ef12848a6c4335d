#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "c1ham/rational.hpp"

namespace c1ham {

/// Simplex of dimension 0, 1, or 2 with rational vertices and an
/// openness flag per proper face.
///   point:    no flags
///   segment:  flags (endpoint 0, endpoint 1)
///   triangle: flags (vertex 0, vertex 1, vertex 2,
///                    edge 01, edge 12, edge 20)
/// Relative interiors are always included; a set flag marks the face as
/// excluded (open).
struct PLCell {
  std::vector<RatVec> vertices;
  std::vector<bool> face_open;

  std::size_t dim() const { return vertices.size() - 1; }
  std::size_t ambient() const { return vertices.front().size(); }

  /// Validates shape, nondegeneracy, and flag arity.
  static PLCell make(std::vector<RatVec> vertices, std::vector<bool> face_open);
};

struct PLSet {
  std::vector<PLCell> cells;
  bool contains(std::span<const Rat> p) const;
};

bool cell_contains(const PLCell& cell, std::span<const Rat> p);

/// Convex polytope of dimension <= 2 with per-facet openness:
///   1 vertex: a point (no facets)
///   2 vertices: a segment (facets = the endpoints)
///   >= 3 vertices: a strictly convex polygon in ambient dimension 2,
///     listed counterclockwise (facet i = edge from vertex i to i+1).
/// A vertex of a polygon belongs to the set exactly when both adjacent
/// facets are closed.
struct DeltaTall {
  std::vector<RatVec> vertices;
  std::vector<bool> facet_open;

  std::size_t ambient() const { return vertices.front().size(); }
  std::size_t dim() const { return vertices.size() <= 2 ? vertices.size() - 1 : 2; }

  static DeltaTall make(std::vector<RatVec> vertices, std::vector<bool> facet_open);
  bool contains(std::span<const Rat> p) const;
  /// Vertex average; lies in the relative interior.
  RatVec centroid() const;
};

/// Exact intersection of two nondegenerate closed segments in any
/// ambient dimension. Params: x = a0 + s (a1 - a0) = b0 + t (b1 - b0).
struct SegHit {
  enum Kind { Empty, Point, Overlap } kind = Empty;
  Rat s, t;          // Point
  Rat s0, s1;        // Overlap: param range on segment a (s0 <= s1)
  Rat t_at_s0, t_at_s1;
};
SegHit intersect_segments(std::span<const Rat> a0, std::span<const Rat> a1,
                          std::span<const Rat> b0, std::span<const Rat> b1);

/// Param of p on the line through a0, a1 when p lies on it.
std::optional<Rat> segment_param(std::span<const Rat> a0, std::span<const Rat> a1,
                                 std::span<const Rat> p);

struct CoverMember {
  std::string id;
  const PLSet* image = nullptr;
};

/// Decides whether the member images are pairwise disjoint and their
/// union equals delta exactly. The test subdivides the plane (or line)
/// by every boundary of every cell and of delta, and evaluates one
/// exact sample per face of the subdivision; coverage is constant on
/// each face, so the verdict is exact, not approximate.
struct CoverResult {
  enum Kind { Ok, Uncovered, Overlap, Outside, Unsupported } kind = Ok;
  RatVec witness;                // sample point for the failing kinds
  std::vector<std::string> ids;  // covering members at the witness
  std::string message;
};
CoverResult cover_exactly_once(std::span<const CoverMember> members, const DeltaTall& delta);

/// Injectivity of the union of the member images near each cell vertex:
/// the germs of all incident cells at the vertex must be pairwise
/// disjoint. Supports ambient dimension <= 2.
struct StarVerdict {
  bool ok = true;
  bool unsupported = false;
  RatVec vertex;  // failing vertex
  std::string message;
};
StarVerdict check_vertex_stars(std::span<const CoverMember> members);

}  // namespace c1ham
