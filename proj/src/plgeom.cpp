#include "c1ham/plgeom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "c1ham/linalg.hpp"

namespace c1ham {

namespace {

constexpr std::size_t kTriVertexFace = 0;  // faces 0..2: vertices
constexpr std::size_t kTriEdgeFace = 3;    // faces 3..5: edges 01, 12, 20

bool contains_impl(const PLCell& cell, std::span<const Rat> p, bool ignore_flags) {
  if (p.size() != cell.ambient()) throw DataError("point dimension mismatch in cell membership");
  switch (cell.dim()) {
    case 0: {
      return std::equal(p.begin(), p.end(), cell.vertices[0].begin());
    }
    case 1: {
      const auto t = segment_param(cell.vertices[0], cell.vertices[1], p);
      if (!t) return false;
      if (*t < 0 || *t > 1) return false;
      if (*t == 0) return ignore_flags || !cell.face_open[0];
      if (*t == 1) return ignore_flags || !cell.face_open[1];
      return true;
    }
    default: {
      // Barycentric coordinates; the system is consistent and unique for
      // a nondegenerate triangle when p lies in its affine hull.
      std::vector<RatVec> cols = {sub(cell.vertices[1], cell.vertices[0]),
                                  sub(cell.vertices[2], cell.vertices[0])};
      const SolveResult sol = solve(RatMat::from_cols(cols, cell.ambient()),
                                    sub(p, cell.vertices[0]));
      if (sol.kind != SolveResult::Unique) return false;
      const Rat l1 = sol.solution[0], l2 = sol.solution[1];
      const Rat l0 = Rat(1) - l1 - l2;
      if (l0 < 0 || l1 < 0 || l2 < 0) return false;
      if (ignore_flags) return true;
      const bool z0 = l0 == 0, z1 = l1 == 0, z2 = l2 == 0;
      if (!z0 && !z1 && !z2) return true;
      if (z1 && z2) return !cell.face_open[kTriVertexFace + 0];
      if (z0 && z2) return !cell.face_open[kTriVertexFace + 1];
      if (z0 && z1) return !cell.face_open[kTriVertexFace + 2];
      if (z2) return !cell.face_open[kTriEdgeFace + 0];  // edge v0 v1
      if (z0) return !cell.face_open[kTriEdgeFace + 1];  // edge v1 v2
      return !cell.face_open[kTriEdgeFace + 2];          // edge v2 v0
    }
  }
}

Rat cross2(std::span<const Rat> a, std::span<const Rat> b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

PLCell PLCell::make(std::vector<RatVec> vertices, std::vector<bool> face_open) {
  if (vertices.empty() || vertices.size() > 3)
    throw DataError("a cell has 1, 2, or 3 vertices");
  const std::size_t dim = vertices.front().size();
  if (dim == 0) throw DataError("cell vertices need a positive ambient dimension");
  for (const RatVec& v : vertices)
    if (v.size() != dim) throw DataError("cell vertices of unequal dimension");
  const std::size_t nfaces = vertices.size() == 1 ? 0 : (vertices.size() == 2 ? 2 : 6);
  if (face_open.empty()) face_open.assign(nfaces, false);
  if (face_open.size() != nfaces)
    throw DataError("cell openness flags: expected " + std::to_string(nfaces) + " entries");
  if (vertices.size() == 2 && vertices[0] == vertices[1])
    throw DataError("degenerate segment cell");
  if (vertices.size() == 3) {
    std::vector<RatVec> edges = {sub(vertices[1], vertices[0]), sub(vertices[2], vertices[0])};
    if (!is_independent(edges)) throw DataError("degenerate triangle cell");
  }
  return PLCell{std::move(vertices), std::move(face_open)};
}

bool cell_contains(const PLCell& cell, std::span<const Rat> p) {
  return contains_impl(cell, p, /*ignore_flags=*/false);
}

bool PLSet::contains(std::span<const Rat> p) const {
  for (const PLCell& cell : cells)
    if (cell_contains(cell, p)) return true;
  return false;
}

DeltaTall DeltaTall::make(std::vector<RatVec> vertices, std::vector<bool> facet_open) {
  if (vertices.empty()) throw DataError("delta_tall needs at least one vertex");
  const std::size_t dim = vertices.front().size();
  for (const RatVec& v : vertices)
    if (v.size() != dim) throw DataError("delta_tall vertices of unequal dimension");
  const std::size_t nfacets = vertices.size() == 1 ? 0 : vertices.size();
  if (facet_open.empty()) facet_open.assign(nfacets, false);
  if (facet_open.size() != nfacets)
    throw DataError("delta_tall openness flags: expected " + std::to_string(nfacets) +
                    " entries");
  if (vertices.size() == 2 && vertices[0] == vertices[1])
    throw DataError("degenerate delta_tall segment");
  if (vertices.size() >= 3) {
    if (dim != 2) throw DataError("a polygonal delta_tall requires ambient dimension 2");
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const RatVec e1 = sub(vertices[(i + 1) % n], vertices[i]);
      const RatVec e2 = sub(vertices[(i + 2) % n], vertices[(i + 1) % n]);
      if (cross2(e1, e2) <= 0)
        throw DataError("delta_tall must be strictly convex and listed counterclockwise");
    }
  }
  return DeltaTall{std::move(vertices), std::move(facet_open)};
}

bool DeltaTall::contains(std::span<const Rat> p) const {
  if (p.size() != ambient()) throw DataError("point dimension mismatch in delta_tall membership");
  if (vertices.size() == 1) return std::equal(p.begin(), p.end(), vertices[0].begin());
  if (vertices.size() == 2) {
    const auto t = segment_param(vertices[0], vertices[1], p);
    if (!t || *t < 0 || *t > 1) return false;
    if (*t == 0) return !facet_open[0];
    if (*t == 1) return !facet_open[1];
    return true;
  }
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Rat side = cross2(sub(vertices[(i + 1) % n], vertices[i]), sub(p, vertices[i]));
    if (side < 0) return false;
    if (side == 0 && facet_open[i]) return false;
  }
  return true;
}

RatVec DeltaTall::centroid() const {
  RatVec c = zero_vec(ambient());
  for (const RatVec& v : vertices) c = add(c, v);
  const Rat inv = Rat(1) / Rat(Int(vertices.size()));
  return scale(inv, c);
}

std::optional<Rat> segment_param(std::span<const Rat> a0, std::span<const Rat> a1,
                                 std::span<const Rat> p) {
  if (a0.size() != a1.size() || a0.size() != p.size())
    throw DataError("dimension mismatch in segment_param");
  std::optional<Rat> t;
  for (std::size_t i = 0; i < a0.size(); ++i) {
    const Rat u = a1[i] - a0[i];
    if (u != 0) {
      t = (p[i] - a0[i]) / u;
      break;
    }
  }
  if (!t) throw DataError("segment_param on a degenerate segment");
  for (std::size_t i = 0; i < a0.size(); ++i)
    if (a0[i] + *t * (a1[i] - a0[i]) != p[i]) return std::nullopt;
  return t;
}

SegHit intersect_segments(std::span<const Rat> a0, std::span<const Rat> a1,
                          std::span<const Rat> b0, std::span<const Rat> b1) {
  const RatVec u = sub(a1, a0);
  const RatVec w = sub(b1, b0);
  if (is_zero(u) || is_zero(w)) throw DataError("degenerate segment in intersection test");

  RatVec neg_w = scale(Rat(-1), w);
  std::vector<RatVec> cols = {u, neg_w};
  const SolveResult sol = solve(RatMat::from_cols(cols, u.size()), sub(b0, a0));

  SegHit hit;
  if (sol.kind == SolveResult::Inconsistent) return hit;  // skew or parallel disjoint
  if (sol.kind == SolveResult::Unique) {
    const Rat s = sol.solution[0], t = sol.solution[1];
    if (s < 0 || s > 1 || t < 0 || t > 1) return hit;
    hit.kind = SegHit::Point;
    hit.s = s;
    hit.t = t;
    return hit;
  }

  // Collinear: parametrize b's endpoints on a.
  const auto tb0 = segment_param(a0, a1, b0);
  const auto tb1 = segment_param(a0, a1, b1);
  if (!tb0 || !tb1) throw DataError("internal error: collinear segments without params");
  Rat lo = *tb0, hi = *tb1;
  if (lo > hi) std::swap(lo, hi);
  const Rat s0 = std::max(Rat(0), lo);
  const Rat s1 = std::min(Rat(1), hi);
  if (s0 > s1) return hit;
  auto t_of_s = [&](const Rat& s) { return (s - *tb0) / (*tb1 - *tb0); };
  if (s0 == s1) {
    hit.kind = SegHit::Point;
    hit.s = s0;
    hit.t = t_of_s(s0);
    return hit;
  }
  hit.kind = SegHit::Overlap;
  hit.s0 = s0;
  hit.s1 = s1;
  hit.t_at_s0 = t_of_s(s0);
  hit.t_at_s1 = t_of_s(s1);
  return hit;
}

// ---------------------------------------------------------------------------
// Exact cover testing
// ---------------------------------------------------------------------------

namespace {

CoverResult evaluate_samples(const std::vector<RatVec>& samples,
                             std::span<const CoverMember> members, const DeltaTall& delta) {
  for (const RatVec& x : samples) {
    const bool inside = delta.contains(x);
    std::vector<std::string> covering;
    for (const CoverMember& m : members)
      if (m.image->contains(x)) covering.push_back(m.id);
    if (inside && covering.empty())
      return {CoverResult::Uncovered, x, {}, "delta_tall point not covered by any member image"};
    if (inside && covering.size() > 1)
      return {CoverResult::Overlap, x, covering, "member images overlap"};
    if (!inside && !covering.empty())
      return {CoverResult::Outside, x, covering, "member image leaves delta_tall"};
  }
  return {};
}

std::vector<RatVec> one_dim_samples(std::set<Rat> breakpoints) {
  std::vector<RatVec> samples;
  std::optional<Rat> prev;
  for (const Rat& b : breakpoints) {
    if (prev) samples.push_back({(*prev + b) / 2});
    samples.push_back({b});
    prev = b;
  }
  return samples;
}

CoverResult cover_1d(std::span<const CoverMember> members, const DeltaTall& delta) {
  std::set<Rat> breakpoints;
  for (const RatVec& v : delta.vertices) breakpoints.insert(v[0]);
  for (const CoverMember& m : members)
    for (const PLCell& cell : m.image->cells)
      for (const RatVec& v : cell.vertices) breakpoints.insert(v[0]);
  return evaluate_samples(one_dim_samples(std::move(breakpoints)), members, delta);
}

// Points in the relative interior of the cell. Any line misses at least
// one of them, and they are pairwise distinct, so a witness off a given
// line or away from a given point always exists among them.
std::vector<RatVec> interior_candidates(const PLCell& cell) {
  if (cell.dim() == 0) return {cell.vertices[0]};
  if (cell.dim() == 1) {
    return {scale(Rat(1, 2), add(cell.vertices[0], cell.vertices[1])),
            add(scale(Rat(3, 4), cell.vertices[0]), scale(Rat(1, 4), cell.vertices[1]))};
  }
  const RatVec c =
      scale(Rat(1, 3), add(add(cell.vertices[0], cell.vertices[1]), cell.vertices[2]));
  std::vector<RatVec> out = {c};
  for (std::size_t i = 0; i < 3; ++i) {
    const RatVec mid = scale(Rat(1, 2), add(cell.vertices[i], cell.vertices[(i + 1) % 3]));
    out.push_back(scale(Rat(1, 2), add(c, mid)));
  }
  return out;
}

// Reduces a cover problem over a segment delta embedded in the plane to
// the 1-dimensional problem along its parameter.
CoverResult cover_on_segment(std::span<const CoverMember> members, const DeltaTall& delta) {
  const RatVec& v0 = delta.vertices[0];
  const RatVec& v1 = delta.vertices[1];

  for (const CoverMember& m : members) {
    for (const PLCell& cell : m.image->cells) {
      bool on_line = true;
      for (const RatVec& v : cell.vertices)
        if (!segment_param(v0, v1, v)) on_line = false;
      if (!on_line) {
        // A cell with a vertex off the affine hull of delta keeps some
        // interior candidate off the hull as well.
        for (const RatVec& cand : interior_candidates(cell)) {
          if (!segment_param(v0, v1, cand))
            return {CoverResult::Outside, cand, {m.id}, "member image leaves delta_tall"};
        }
        throw DataError("internal error: off-hull cell without off-hull candidate");
      }
    }
  }

  // Shadow problem on the parameter line.
  std::vector<PLSet> shadow_sets(members.size());
  std::vector<CoverMember> shadow_members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const PLCell& cell : members[i].image->cells) {
      std::vector<RatVec> params;
      for (const RatVec& v : cell.vertices) params.push_back({*segment_param(v0, v1, v)});
      if (cell.dim() == 1 && params[0][0] > params[1][0]) {
        std::swap(params[0], params[1]);
        shadow_sets[i].cells.push_back(
            PLCell::make(std::move(params), {cell.face_open[1], cell.face_open[0]}));
      } else {
        shadow_sets[i].cells.push_back(PLCell::make(std::move(params), cell.face_open));
      }
    }
    shadow_members.push_back({members[i].id, &shadow_sets[i]});
  }
  const DeltaTall shadow_delta = DeltaTall::make({{Rat(0)}, {Rat(1)}}, delta.facet_open);
  CoverResult res = cover_1d(shadow_members, shadow_delta);
  if (res.kind != CoverResult::Ok && !res.witness.empty()) {
    const Rat t = res.witness[0];
    res.witness = add(v0, scale(t, sub(v1, v0)));
  }
  return res;
}

CoverResult cover_point(std::span<const CoverMember> members, const DeltaTall& delta) {
  const RatVec& pt = delta.vertices[0];
  for (const CoverMember& m : members) {
    for (const PLCell& cell : m.image->cells) {
      if (cell.dim() == 0 && cell.vertices[0] == pt) continue;
      for (const RatVec& cand : interior_candidates(cell)) {
        if (cand != pt)
          return {CoverResult::Outside, cand, {m.id}, "member image leaves delta_tall"};
      }
      throw DataError("internal error: cell without a point away from delta");
    }
  }
  std::vector<std::string> covering;
  for (const CoverMember& m : members)
    if (m.image->contains(pt)) covering.push_back(m.id);
  if (covering.empty())
    return {CoverResult::Uncovered, pt, {}, "delta_tall point not covered by any member image"};
  if (covering.size() > 1) return {CoverResult::Overlap, pt, covering, "member images overlap"};
  return {};
}

// Normalized rational line a x + b y = c with (a, b) primitive integer,
// first nonzero positive.
struct Line {
  Rat a, b, c;
  bool operator<(const Line& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

Line line_through(const RatVec& p, const RatVec& q) {
  RatVec normal = {p[1] - q[1], q[0] - p[0]};
  const IntVec prim = primitive_integer_generator(normal);
  Line l{Rat(prim[0]), Rat(prim[1]), 0};
  l.c = l.a * p[0] + l.b * p[1];
  return l;
}

Line axis_line_x(const Rat& x) { return {1, 0, x}; }
Line axis_line_y(const Rat& y) { return {0, 1, y}; }

std::optional<RatVec> line_intersection(const Line& l1, const Line& l2) {
  const Rat det = l1.a * l2.b - l2.a * l1.b;
  if (det == 0) return std::nullopt;
  return RatVec{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

CoverResult cover_polygon(std::span<const CoverMember> members, const DeltaTall& delta) {
  std::set<Line> lines;
  auto add_vertex_lines = [&](const RatVec& v) {
    lines.insert(axis_line_x(v[0]));
    lines.insert(axis_line_y(v[1]));
  };

  const std::size_t n = delta.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    lines.insert(line_through(delta.vertices[i], delta.vertices[(i + 1) % n]));
    add_vertex_lines(delta.vertices[i]);
  }
  for (const CoverMember& m : members) {
    for (const PLCell& cell : m.image->cells) {
      for (const RatVec& v : cell.vertices) add_vertex_lines(v);
      if (cell.dim() == 1) lines.insert(line_through(cell.vertices[0], cell.vertices[1]));
      if (cell.dim() == 2)
        for (std::size_t i = 0; i < 3; ++i)
          lines.insert(line_through(cell.vertices[i], cell.vertices[(i + 1) % 3]));
    }
  }

  const std::vector<Line> all(lines.begin(), lines.end());
  std::set<RatVec> vertex_set;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (auto p = line_intersection(all[i], all[j])) vertex_set.insert(std::move(*p));

  std::vector<RatVec> samples(vertex_set.begin(), vertex_set.end());

  // Edge midpoints per line, then a point just off each midpoint on both
  // sides; the offset is half the distance to the nearest crossing, so
  // each lands inside an open 2-face of the subdivision.
  for (const Line& l : all) {
    const RatVec dir = {-l.b, l.a};
    std::vector<std::pair<Rat, const RatVec*>> on_line;
    for (const RatVec& v : vertex_set)
      if (l.a * v[0] + l.b * v[1] == l.c) on_line.push_back({dot(dir, v), &v});
    std::sort(on_line.begin(), on_line.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i + 1 < on_line.size(); ++i) {
      const RatVec mid = scale(Rat(1, 2), add(*on_line[i].second, *on_line[i + 1].second));
      samples.push_back(mid);
      const RatVec normal = {l.a, l.b};
      std::optional<Rat> min_abs_t;
      for (const Line& other : all) {
        const Rat denom = other.a * normal[0] + other.b * normal[1];
        if (denom == 0) continue;
        Rat t = (other.c - (other.a * mid[0] + other.b * mid[1])) / denom;
        if (t == 0) continue;
        if (t < 0) t = -t;
        if (!min_abs_t || t < *min_abs_t) min_abs_t = t;
      }
      const Rat eps = min_abs_t ? *min_abs_t / 2 : Rat(1);
      samples.push_back(add(mid, scale(eps, normal)));
      samples.push_back(sub(mid, scale(eps, normal)));
    }
  }

  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  return evaluate_samples(samples, members, delta);
}

}  // namespace

CoverResult cover_exactly_once(std::span<const CoverMember> members, const DeltaTall& delta) {
  const std::size_t ambient = delta.ambient();
  if (ambient > 2)
    return {CoverResult::Unsupported, {}, {},
            "cover test unsupported above ambient dimension 2"};
  for (const CoverMember& m : members)
    for (const PLCell& cell : m.image->cells)
      if (cell.ambient() != ambient)
        throw DataError("member image ambient dimension does not match delta_tall");

  if (delta.dim() == 0) return cover_point(members, delta);
  if (ambient == 1) return cover_1d(members, delta);
  if (delta.dim() == 1) return cover_on_segment(members, delta);
  return cover_polygon(members, delta);
}

// ---------------------------------------------------------------------------
// Vertex stars
// ---------------------------------------------------------------------------

namespace {

// Germ of one cell at a vertex: an open angular part, the included
// boundary rays, and whether the vertex itself is covered.
struct OpenPart {
  enum Kind { NoneK, RayK, SectorK, FullK } kind = NoneK;
  IntVec d1, d2;  // RayK: d1; SectorK: boundary directions, ccw, angle <= pi
};

struct GermPiece {
  std::string owner;
  OpenPart open;
  std::vector<IntVec> rays;  // included boundary rays
  bool covers_vertex = false;
};

// Primitive integer vector with the same orientation (no sign
// normalization: germ directions are oriented).
IntVec direction(std::span<const Rat> from, std::span<const Rat> to) {
  const RatVec diff = sub(to, from);
  if (is_zero(diff)) throw DataError("internal error: zero direction in vertex star");
  Int denom_lcm = 1;
  for (const Rat& x : diff) denom_lcm = lcm(denom_lcm, denominator(x));
  IntVec scaled(diff.size());
  for (std::size_t i = 0; i < diff.size(); ++i)
    scaled[i] = numerator(diff[i]) * (denom_lcm / denominator(diff[i]));
  Int g = 0;
  for (const Int& x : scaled) g = gcd(g, x);
  for (Int& x : scaled) x /= g;
  return scaled;
}

Rat icross(const IntVec& a, const IntVec& b) { return Rat(a[0] * b[1] - a[1] * b[0]); }

bool dir_in_open_sector(const IntVec& d, const OpenPart& s) {
  // Works for angle < pi and, because d2 = -d1 makes both tests agree,
  // for half-planes (angle exactly pi).
  return icross(s.d1, d) > 0 && icross(d, s.d2) > 0;
}

bool ray_in_open(const IntVec& r, const OpenPart& open) {
  switch (open.kind) {
    case OpenPart::NoneK: return false;
    case OpenPart::RayK: return r == open.d1;
    case OpenPart::SectorK: return dir_in_open_sector(r, open);
    case OpenPart::FullK: return true;
  }
  return false;
}

bool open_parts_overlap(const OpenPart& a, const OpenPart& b) {
  if (a.kind == OpenPart::NoneK || b.kind == OpenPart::NoneK) return false;
  if (a.kind == OpenPart::FullK || b.kind == OpenPart::FullK) return true;
  if (a.kind == OpenPart::RayK) return ray_in_open(a.d1, b) || (b.kind == OpenPart::RayK && a.d1 == b.d1);
  if (b.kind == OpenPart::RayK) return ray_in_open(b.d1, a);
  // sector vs sector
  return dir_in_open_sector(a.d1, b) || dir_in_open_sector(a.d2, b) ||
         dir_in_open_sector(b.d1, a) || dir_in_open_sector(b.d2, a) ||
         (a.d1 == b.d1 && a.d2 == b.d2);
}

bool pieces_overlap(const GermPiece& a, const GermPiece& b) {
  if (open_parts_overlap(a.open, b.open)) return true;
  for (const IntVec& r : a.rays) {
    if (ray_in_open(r, b.open)) return true;
    for (const IntVec& s : b.rays)
      if (r == s) return true;
  }
  for (const IntVec& r : b.rays)
    if (ray_in_open(r, a.open)) return true;
  return false;
}

OpenPart make_sector(IntVec d1, IntVec d2) {
  OpenPart s;
  s.kind = OpenPart::SectorK;
  if (icross(d1, d2) < 0) std::swap(d1, d2);
  s.d1 = std::move(d1);
  s.d2 = std::move(d2);
  return s;
}

// Germ pieces of `cell` at v; empty when v is not in the closed cell.
void collect_pieces(const PLCell& cell, const RatVec& v, const std::string& owner,
                    std::vector<GermPiece>& out) {
  if (!contains_impl(cell, v, /*ignore_flags=*/true)) return;
  if (cell.dim() == 0) {
    out.push_back({owner, {}, {}, true});
    return;
  }
  if (cell.dim() == 1) {
    const Rat t = *segment_param(cell.vertices[0], cell.vertices[1], v);
    if (t == 0) {
      GermPiece p{owner, {}, {}, !cell.face_open[0]};
      p.open.kind = OpenPart::RayK;
      p.open.d1 = direction(v, cell.vertices[1]);
      out.push_back(std::move(p));
    } else if (t == 1) {
      GermPiece p{owner, {}, {}, !cell.face_open[1]};
      p.open.kind = OpenPart::RayK;
      p.open.d1 = direction(v, cell.vertices[0]);
      out.push_back(std::move(p));
    } else {
      GermPiece fwd{owner, {}, {}, true};
      fwd.open.kind = OpenPart::RayK;
      fwd.open.d1 = direction(v, cell.vertices[1]);
      GermPiece back{owner, {}, {}, false};
      back.open.kind = OpenPart::RayK;
      back.open.d1 = direction(v, cell.vertices[0]);
      out.push_back(std::move(fwd));
      out.push_back(std::move(back));
    }
    return;
  }

  // Triangle: classify v by barycentric zeros.
  std::vector<RatVec> cols = {sub(cell.vertices[1], cell.vertices[0]),
                              sub(cell.vertices[2], cell.vertices[0])};
  const SolveResult sol =
      solve(RatMat::from_cols(cols, cell.ambient()), sub(v, cell.vertices[0]));
  const Rat l1 = sol.solution[0], l2 = sol.solution[1];
  const Rat l0 = Rat(1) - l1 - l2;
  const bool z0 = l0 == 0, z1 = l1 == 0, z2 = l2 == 0;

  auto corner = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t edge_ij,
                    std::size_t edge_ki) {
    GermPiece p{owner, {}, {}, !cell.face_open[kTriVertexFace + i]};
    const IntVec dj = direction(v, cell.vertices[j]);
    const IntVec dk = direction(v, cell.vertices[k]);
    p.open = make_sector(dj, dk);
    if (!cell.face_open[edge_ij]) p.rays.push_back(dj);
    if (!cell.face_open[edge_ki]) p.rays.push_back(dk);
    out.push_back(std::move(p));
  };
  if (z1 && z2) return corner(0, 1, 2, kTriEdgeFace + 0, kTriEdgeFace + 2);
  if (z0 && z2) return corner(1, 2, 0, kTriEdgeFace + 1, kTriEdgeFace + 0);
  if (z0 && z1) return corner(2, 0, 1, kTriEdgeFace + 2, kTriEdgeFace + 1);

  auto edge_interior = [&](std::size_t i, std::size_t j, std::size_t opposite,
                           std::size_t edge_face) {
    GermPiece p{owner, {}, {}, !cell.face_open[edge_face]};
    IntVec e = direction(cell.vertices[i], cell.vertices[j]);
    IntVec inward = direction(v, cell.vertices[opposite]);
    IntVec neg = e;
    for (Int& x : neg) x = -x;
    if (icross(e, inward) < 0) std::swap(e, neg);
    p.open = make_sector(e, neg);  // half-plane containing the opposite vertex
    if (!cell.face_open[edge_face]) {
      p.rays.push_back(p.open.d1);
      p.rays.push_back(p.open.d2);
    }
    out.push_back(std::move(p));
    return;
  };
  if (z2) return edge_interior(0, 1, 2, kTriEdgeFace + 0);
  if (z0) return edge_interior(1, 2, 0, kTriEdgeFace + 1);
  if (z1) return edge_interior(2, 0, 1, kTriEdgeFace + 2);

  GermPiece p{owner, {}, {}, true};
  p.open.kind = OpenPart::FullK;
  out.push_back(std::move(p));
}

}  // namespace

StarVerdict check_vertex_stars(std::span<const CoverMember> members) {
  std::size_t ambient = 0;
  std::set<RatVec> vertex_set;
  for (const CoverMember& m : members) {
    for (const PLCell& cell : m.image->cells) {
      ambient = cell.ambient();
      for (const RatVec& v : cell.vertices) vertex_set.insert(v);
    }
  }
  if (ambient > 2)
    return {false, true, {}, "vertex star test unsupported above ambient dimension 2"};

  // Each member image is a set, so germs are compared across members
  // only: a member presenting one region as several abutting cells is
  // still injective over it.
  for (const RatVec& v : vertex_set) {
    std::vector<GermPiece> pieces;
    for (const CoverMember& m : members)
      for (const PLCell& cell : m.image->cells) collect_pieces(cell, v, m.id, pieces);

    std::set<std::string> covering_owners;
    for (const GermPiece& p : pieces)
      if (p.covers_vertex) covering_owners.insert(p.owner);
    if (covering_owners.size() > 1) {
      auto it = covering_owners.begin();
      const std::string first = *it++;
      return {false, false, v, "vertex covered more than once (" + first + ", " + *it + ")"};
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        if (pieces[i].owner == pieces[j].owner) continue;
        if (pieces_overlap(pieces[i], pieces[j]))
          return {false, false, v,
                  "overlapping cell germs (" + pieces[i].owner + ", " + pieces[j].owner + ")"};
      }
    }
  }
  return {};
}

}  // namespace c1ham
