#include "c1ham/io.hpp"

#include <fstream>
#include <limits>

namespace c1ham::io {

namespace {

[[noreturn]] void schema_error(const std::string& context, const std::string& what) {
  throw DataError(context + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& context) {
  if (!j.is_object()) schema_error(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(context, "missing field '" + key + "'");
  return *it;
}

bool has_field(const Json& j, const std::string& key) {
  return j.is_object() && j.contains(key);
}

std::string string_field(const Json& j, const std::string& key, const std::string& context) {
  const Json& f = field(j, key, context);
  if (!f.is_string()) schema_error(context, "field '" + key + "' must be a string");
  return f.get<std::string>();
}

}  // namespace

Json rational_to_json(const Rat& r) { return to_string(r); }

Rat rational_from_json(const Json& j, const std::string& context) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const DataError& e) {
      schema_error(context, e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long long>());
  schema_error(context, "expected a rational as \"p/q\" string or integer");
}

Json integer_to_json(const Int& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return static_cast<long long>(n);
  return n.str();
}

Int integer_from_json(const Json& j, const std::string& context) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    const Rat r = parse_rational(j.get<std::string>());
    if (denominator(r) != 1) schema_error(context, "expected an integer");
    return numerator(r);
  }
  schema_error(context, "expected an integer");
}

Json vec_to_json(std::span<const Rat> v) {
  Json arr = Json::array();
  for (const Rat& x : v) arr.push_back(rational_to_json(x));
  return arr;
}

RatVec vec_from_json(const Json& j, const std::string& context) {
  if (!j.is_array()) schema_error(context, "expected an array of rationals");
  RatVec v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_from_json(j[i], context + "[" + std::to_string(i) + "]"));
  return v;
}

namespace {

std::vector<RatVec> vec_list_from_json(const Json& j, const std::string& context) {
  if (!j.is_array()) schema_error(context, "expected an array of vectors");
  std::vector<RatVec> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vec_from_json(j[i], context + "[" + std::to_string(i) + "]"));
  return out;
}

Json vec_list_to_json(std::span<const RatVec> vs) {
  Json arr = Json::array();
  for (const RatVec& v : vs) arr.push_back(vec_to_json(v));
  return arr;
}

}  // namespace

Json local_model_to_json(const LocalModel& m) {
  Json j;
  j["dim_T"] = m.dim_T();
  Json xi = Json::array();
  for (const Int& x : m.xi()) xi.push_back(integer_to_json(x));
  j["xi"] = std::move(xi);
  if (m.weights_supplied()) j["weights"] = vec_list_to_json(m.weights());
  j["moment_value"] = vec_to_json(m.moment_value());
  // The h = 0 embedding is canonical (empty) and never serialized.
  if (m.h() > 0 && m.h_embedding())
    j["h_embedding"] = vec_list_to_json(m.h_embedding()->row_data());
  return j;
}

LocalModel local_model_from_json(const Json& j) {
  const std::string ctx = "local model";
  const Json& dim_field = field(j, "dim_T", ctx);
  if (!dim_field.is_number_unsigned() || dim_field.get<std::size_t>() == 0)
    schema_error(ctx, "dim_T must be a positive integer");
  const std::size_t dim_T = dim_field.get<std::size_t>();

  const Json& xi_field = field(j, "xi", ctx);
  if (!xi_field.is_array()) schema_error(ctx, "xi must be an array of integers");
  IntVec xi;
  for (std::size_t i = 0; i < xi_field.size(); ++i)
    xi.push_back(integer_from_json(xi_field[i], ctx + ".xi[" + std::to_string(i) + "]"));

  std::vector<RatVec> weights;
  if (has_field(j, "weights")) weights = vec_list_from_json(j["weights"], ctx + ".weights");

  RatVec moment_value = vec_from_json(field(j, "moment_value", ctx), ctx + ".moment_value");

  std::optional<RatMat> embedding;
  if (has_field(j, "h_embedding")) {
    std::vector<RatVec> rows = vec_list_from_json(j["h_embedding"], ctx + ".h_embedding");
    embedding = RatMat::from_rows(std::move(rows), dim_T);
  } else if (!xi.empty() && xi.size() == 1) {
    // h = 0: the empty embedding is canonical.
    embedding = RatMat(0, dim_T);
  }

  return LocalModel::create(dim_T, std::move(xi), std::move(weights), std::move(moment_value),
                            std::move(embedding));
}

LocalModel load_local_model(const std::string& path) {
  return local_model_from_json(parse_file(path));
}

Json cone_to_json(const Cone& c) {
  Json j;
  j["ambient_dim"] = c.ambient_dim;
  j["apex"] = vec_to_json(c.apex);
  j["subspace_basis"] = vec_list_to_json(c.subspace_basis);
  j["rays"] = vec_list_to_json(c.rays);
  Json open = Json::array();
  for (std::size_t i = 0; i < c.ray_open.size(); ++i)
    if (c.ray_open[i]) open.push_back(i);
  j["open_rays"] = std::move(open);
  return j;
}

Cone cone_from_json(const Json& j) {
  const std::string ctx = "cone";
  const Json& dim_field = field(j, "ambient_dim", ctx);
  if (!dim_field.is_number_unsigned()) schema_error(ctx, "ambient_dim must be a non-negative integer");
  const std::size_t ambient = dim_field.get<std::size_t>();
  RatVec apex = vec_from_json(field(j, "apex", ctx), ctx + ".apex");
  std::vector<RatVec> subspace = vec_list_from_json(field(j, "subspace_basis", ctx), ctx + ".subspace_basis");
  std::vector<RatVec> rays = vec_list_from_json(field(j, "rays", ctx), ctx + ".rays");
  std::vector<bool> open(rays.size(), false);
  const Json& open_field = field(j, "open_rays", ctx);
  if (!open_field.is_array()) schema_error(ctx, "open_rays must be an array of indices");
  for (const Json& idx : open_field) {
    if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= rays.size())
      schema_error(ctx, "open_rays index out of range");
    open[idx.get<std::size_t>()] = true;
  }
  return Cone::make(ambient, std::move(apex), std::move(subspace), std::move(rays),
                    std::move(open));
}

Json plset_to_json(const PLSet& s) {
  Json cells = Json::array();
  for (const PLCell& cell : s.cells) {
    Json c;
    c["vertices"] = vec_list_to_json(cell.vertices);
    Json open = Json::array();
    for (std::size_t i = 0; i < cell.face_open.size(); ++i)
      if (cell.face_open[i]) open.push_back(i);
    c["open_faces"] = std::move(open);
    cells.push_back(std::move(c));
  }
  Json j;
  j["cells"] = std::move(cells);
  return j;
}

PLSet plset_from_json(const Json& j, const std::string& context) {
  const Json& cells = field(j, "cells", context);
  if (!cells.is_array()) schema_error(context, "cells must be an array");
  PLSet out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string ctx = context + ".cells[" + std::to_string(i) + "]";
    std::vector<RatVec> vertices = vec_list_from_json(field(cells[i], "vertices", ctx), ctx + ".vertices");
    const std::size_t nfaces = vertices.size() == 1 ? 0 : (vertices.size() == 2 ? 2 : 6);
    std::vector<bool> open(nfaces, false);
    if (has_field(cells[i], "open_faces")) {
      const Json& flags = cells[i]["open_faces"];
      if (!flags.is_array()) schema_error(ctx, "open_faces must be an array of indices");
      for (const Json& idx : flags) {
        if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= nfaces)
          schema_error(ctx, "open_faces index out of range");
        open[idx.get<std::size_t>()] = true;
      }
    }
    out.cells.push_back(PLCell::make(std::move(vertices), std::move(open)));
  }
  return out;
}

Json delta_to_json(const DeltaTall& d) {
  Json j;
  j["vertices"] = vec_list_to_json(d.vertices);
  Json open = Json::array();
  for (std::size_t i = 0; i < d.facet_open.size(); ++i)
    if (d.facet_open[i]) open.push_back(i);
  j["open_faces"] = std::move(open);
  return j;
}

DeltaTall delta_from_json(const Json& j) {
  const std::string ctx = "delta_tall";
  std::vector<RatVec> vertices = vec_list_from_json(field(j, "vertices", ctx), ctx + ".vertices");
  const std::size_t nfacets = vertices.size() == 1 ? 0 : vertices.size();
  std::vector<bool> open(nfacets, false);
  if (has_field(j, "open_faces")) {
    const Json& flags = j["open_faces"];
    if (!flags.is_array()) schema_error(ctx, "open_faces must be an array of indices");
    for (const Json& idx : flags) {
      if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= nfacets)
        schema_error(ctx, "open_faces index out of range");
      open[idx.get<std::size_t>()] = true;
    }
  }
  return DeltaTall::make(std::move(vertices), std::move(open));
}

Json orbit_complex_to_json(const OrbitComplex& oc) {
  Json orbits = Json::array();
  for (const OrbitRecord& r : oc.orbits()) {
    Json o;
    o["id"] = r.id;
    if (r.generic) o["generic"] = true;
    if (r.model) o["model"] = local_model_to_json(*r.model);
    if (r.declared_flags) {
      Json f;
      f["tall"] = r.declared_flags->tall;
      f["exceptional"] = r.declared_flags->exceptional;
      o["flags"] = std::move(f);
    }
    o["moment_image"] = plset_to_json(r.moment_image);
    orbits.push_back(std::move(o));
  }
  Json closure = Json::array();
  for (const auto& [below, above] : oc.closure_pairs())
    closure.push_back(Json::array({below, above}));
  Json j;
  j["orbits"] = std::move(orbits);
  j["closure"] = std::move(closure);
  j["delta_tall"] = delta_to_json(oc.delta_tall());
  return j;
}

OrbitComplex orbit_complex_from_json(const Json& j) {
  const std::string ctx = "orbit complex";
  const Json& orbits_field = field(j, "orbits", ctx);
  if (!orbits_field.is_array()) schema_error(ctx, "orbits must be an array");
  std::vector<OrbitRecord> records;
  for (std::size_t i = 0; i < orbits_field.size(); ++i) {
    const Json& o = orbits_field[i];
    const std::string octx = ctx + ".orbits[" + std::to_string(i) + "]";
    OrbitRecord r;
    r.id = string_field(o, "id", octx);
    if (has_field(o, "generic")) {
      if (!o["generic"].is_boolean()) schema_error(octx, "generic must be a boolean");
      r.generic = o["generic"].get<bool>();
    }
    if (has_field(o, "model")) r.model = local_model_from_json(o["model"]);
    if (has_field(o, "flags")) {
      const Json& f = o["flags"];
      if (!f.is_object() || !has_field(f, "tall") || !has_field(f, "exceptional") ||
          !f["tall"].is_boolean() || !f["exceptional"].is_boolean())
        schema_error(octx, "flags must be {\"tall\": bool, \"exceptional\": bool}");
      r.declared_flags = OrbitFlags{f["tall"].get<bool>(), f["exceptional"].get<bool>()};
    }
    r.moment_image = plset_from_json(field(o, "moment_image", octx), octx + ".moment_image");
    records.push_back(std::move(r));
  }

  const Json& closure_field = field(j, "closure", ctx);
  if (!closure_field.is_array()) schema_error(ctx, "closure must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> closure;
  for (std::size_t i = 0; i < closure_field.size(); ++i) {
    const Json& pair = closure_field[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      schema_error(ctx + ".closure[" + std::to_string(i) + "]", "expected [below, above] ids");
    closure.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
  }

  DeltaTall delta = delta_from_json(field(j, "delta_tall", ctx));
  return OrbitComplex::create(std::move(records), std::move(closure), std::move(delta));
}

OrbitComplex load_orbit_complex(const std::string& path) {
  return orbit_complex_from_json(parse_file(path));
}

Json skeleton_to_json(std::span<const SkeletonComponent> components) {
  Json comps = Json::array();
  for (const SkeletonComponent& sc : components) {
    Json c;
    c["id"] = sc.id;
    c["orbits"] = sc.orbit_ids;
    Json vertices = Json::array();
    for (const SkeletonVertex& v : sc.vertices) {
      Json vj;
      vj["id"] = v.id;
      vj["image"] = vec_to_json(v.image);
      vertices.push_back(std::move(vj));
    }
    c["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const auto& [a, b] : sc.edges) edges.push_back(Json::array({a, b}));
    c["edges"] = std::move(edges);
    comps.push_back(std::move(c));
  }
  Json j;
  j["components"] = std::move(comps);
  return j;
}

std::vector<SkeletonComponent> skeleton_from_json(const Json& j) {
  const std::string ctx = "skeleton";
  const Json& comps = field(j, "components", ctx);
  if (!comps.is_array()) schema_error(ctx, "components must be an array");
  std::vector<SkeletonComponent> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Json& c = comps[i];
    const std::string cctx = ctx + ".components[" + std::to_string(i) + "]";
    SkeletonComponent sc;
    sc.id = string_field(c, "id", cctx);
    const Json& orbit_field = field(c, "orbits", cctx);
    if (!orbit_field.is_array()) schema_error(cctx, "orbits must be an array of ids");
    for (const Json& id : orbit_field) {
      if (!id.is_string()) schema_error(cctx, "orbits must be an array of ids");
      sc.orbit_ids.push_back(id.get<std::string>());
    }
    const Json& vertex_field = field(c, "vertices", cctx);
    if (!vertex_field.is_array()) schema_error(cctx, "vertices must be an array");
    for (std::size_t v = 0; v < vertex_field.size(); ++v) {
      const std::string vctx = cctx + ".vertices[" + std::to_string(v) + "]";
      SkeletonVertex vertex;
      vertex.id = string_field(vertex_field[v], "id", vctx);
      vertex.image = vec_from_json(field(vertex_field[v], "image", vctx), vctx + ".image");
      sc.vertices.push_back(std::move(vertex));
    }
    const Json& edge_field = field(c, "edges", cctx);
    if (!edge_field.is_array()) schema_error(cctx, "edges must be an array of pairs");
    for (const Json& e : edge_field) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        schema_error(cctx, "edges entries must be [vertex, vertex]");
      sc.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<SkeletonComponent> load_skeleton(const std::string& path) {
  return skeleton_from_json(parse_file(path));
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("'" + path + "': " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace c1ham::io
