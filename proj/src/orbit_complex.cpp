#include "c1ham/orbit_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace c1ham {

OrbitFlags OrbitRecord::flags() const {
  if (model) {
    const Classification c = classify(*model);
    return {c.tall, c.exceptional};
  }
  if (!declared_flags) throw DataError("orbit '" + id + "' has neither model nor flags");
  return *declared_flags;
}

OrbitComplex OrbitComplex::create(std::vector<OrbitRecord> orbits,
                                  std::vector<std::pair<std::string, std::string>> closure,
                                  DeltaTall delta_tall) {
  OrbitComplex oc;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const OrbitRecord& r = orbits[i];
    if (r.id.empty()) throw DataError("orbit with empty id");
    if (!index.emplace(r.id, i).second) throw DataError("duplicate orbit id '" + r.id + "'");
    if (r.generic && r.model)
      throw DataError("orbit '" + r.id + "' is marked generic but carries a model");
    if (!r.generic && !r.model)
      throw DataError("orbit '" + r.id + "' needs a model or the generic marker");
    if (r.generic && !r.declared_flags)
      throw DataError("generic orbit '" + r.id + "' needs declared flags");
  }
  for (const auto& [below, above] : closure) {
    if (!index.count(below)) throw DataError("closure pair references unknown orbit '" + below + "'");
    if (!index.count(above)) throw DataError("closure pair references unknown orbit '" + above + "'");
  }

  const std::size_t n = orbits.size();
  oc.reach_.assign(n, std::vector<bool>(n, false));
  for (const auto& [below, above] : closure)
    oc.reach_[index.at(below)][index.at(above)] = true;
  // Warshall transitive closure; cycles are recorded, not rejected, so
  // validate can report them.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (oc.reach_[k][a])
        for (std::size_t b = 0; b < n; ++b)
          if (oc.reach_[b][k]) oc.reach_[b][a] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (oc.reach_[i][i]) oc.has_cycle_ = true;

  oc.orbits_ = std::move(orbits);
  oc.closure_ = std::move(closure);
  oc.delta_tall_ = std::move(delta_tall);
  return oc;
}

std::size_t OrbitComplex::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < orbits_.size(); ++i)
    if (orbits_[i].id == id) return i;
  throw DataError("unknown orbit id '" + id + "'");
}

bool OrbitComplex::below(std::size_t below_idx, std::size_t above_idx) const {
  return reach_[below_idx][above_idx];
}

std::vector<IndexSet> catchment_orbits(const LocalModel& m) {
  if (!is_tall(m)) throw DataError("catchment infinite for short points");
  return independent_subsets(m.weights());
}

CatchmentPoset catchment_poset(const LocalModel& m) {
  CatchmentPoset poset;
  poset.patterns = catchment_orbits(m);
  // Subsets of independent sets are independent, so covers in the
  // inclusion order add exactly one index.
  for (std::size_t i = 0; i < poset.patterns.size(); ++i) {
    for (std::size_t j = 0; j < poset.patterns.size(); ++j) {
      const IndexSet& small = poset.patterns[i];
      const IndexSet& large = poset.patterns[j];
      if (large.size() != small.size() + 1) continue;
      if (std::includes(large.begin(), large.end(), small.begin(), small.end()))
        poset.hasse.push_back({i, j});
    }
  }
  return poset;
}

namespace {

std::vector<RatVec> weight_subset(const LocalModel& m, const IndexSet& support) {
  std::vector<RatVec> subset;
  subset.reserve(support.size());
  std::optional<std::size_t> prev;
  for (std::size_t i : support) {
    if (i >= m.weights().size()) throw DataError("orbit pattern index out of range");
    if (prev && i <= *prev) throw DataError("orbit pattern indices must be strictly increasing");
    prev = i;
    subset.push_back(m.weights()[i]);
  }
  return subset;
}

}  // namespace

bool pattern_is_single_orbit(const LocalModel& m, const IndexSet& support) {
  return is_independent(weight_subset(m, support));
}

bool origin_in_orbit_closure(const LocalModel& m, const IndexSet& support) {
  const std::vector<RatVec> subset = weight_subset(m, support);
  const std::size_t dim = m.weights().front().size();
  return holds_separator(strict_separator(subset, dim));
}

std::vector<std::string> core(const OrbitComplex& oc) {
  const auto& orbits = oc.orbits();
  std::vector<std::size_t> seeds;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const OrbitFlags f = orbits[i].flags();
    if (f.tall && f.exceptional) seeds.push_back(i);
  }
  std::set<std::string> out;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (std::size_t s : seeds) {
      if (s == i || oc.below(s, i)) {
        out.insert(orbits[i].id);
        break;
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> core_closure(const OrbitComplex& oc) {
  const auto& orbits = oc.orbits();
  const std::vector<std::string> core_ids = core(oc);
  std::set<std::string> out(core_ids.begin(), core_ids.end());
  for (const std::string& id : core_ids) {
    const std::size_t above = oc.index_of(id);
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (oc.below(i, above)) out.insert(orbits[i].id);
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<std::string>> tall_core_components(const OrbitComplex& oc) {
  std::vector<std::string> members;
  for (const std::string& id : core_closure(oc))
    if (oc.record(id).flags().tall) members.push_back(id);

  // Union-find over comparability.
  std::vector<std::size_t> parent(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::size_t a = oc.index_of(members[i]);
      const std::size_t b = oc.index_of(members[j]);
      if (oc.below(a, b) || oc.below(b, a)) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < members.size(); ++i) groups[find(i)].push_back(members[i]);
  std::vector<std::vector<std::string>> components;
  for (auto& [root, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    components.push_back(std::move(ids));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::vector<std::pair<std::string, std::string>> closure_hasse(const OrbitComplex& oc,
                                                               std::span<const std::string> ids) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const std::string& a : ids) {
    for (const std::string& b : ids) {
      const std::size_t ia = oc.index_of(a), ib = oc.index_of(b);
      if (ia == ib || !oc.below(ia, ib)) continue;
      bool covering = true;
      for (const std::string& mid : ids) {
        const std::size_t im = oc.index_of(mid);
        if (im != ia && im != ib && oc.below(ia, im) && oc.below(im, ib)) {
          covering = false;
          break;
        }
      }
      if (covering) edges.push_back({a, b});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

// Longest chain length from `base` to `target` inside the up-set of
// `base`; well-defined once the order is known acyclic.
std::size_t chain_height(const OrbitComplex& oc, std::size_t base, std::size_t target,
                         std::map<std::size_t, std::size_t>& memo) {
  if (base == target) return 0;
  if (auto it = memo.find(target); it != memo.end()) return it->second;
  std::size_t best = 1;  // direct step from base
  for (std::size_t mid = 0; mid < oc.orbits().size(); ++mid) {
    if (mid == base || mid == target) continue;
    if (oc.below(base, mid) && oc.below(mid, target))
      best = std::max(best, chain_height(oc, base, mid, memo) + 1);
  }
  memo[target] = best;
  return best;
}

}  // namespace

std::vector<Violation> validate(const OrbitComplex& oc) {
  std::vector<Violation> out;
  const auto& orbits = oc.orbits();

  for (const auto& [below, above] : oc.closure_pairs())
    if (below == above)
      out.push_back({"order", "reflexive closure pair for orbit '" + below + "'"});
  if (oc.has_cycle()) {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      if (oc.below(i, i)) {
        out.push_back({"order", "closure order has a cycle through orbit '" + orbits[i].id + "'"});
        break;
      }
    }
  }

  for (const OrbitRecord& r : orbits) {
    if (!r.model || !r.declared_flags) continue;
    const Classification c = classify(*r.model);
    if (c.tall != r.declared_flags->tall || c.exceptional != r.declared_flags->exceptional) {
      out.push_back({"flag-mismatch",
                     "orbit '" + r.id + "' declared {tall=" +
                         (r.declared_flags->tall ? "true" : "false") + ", exceptional=" +
                         (r.declared_flags->exceptional ? "true" : "false") +
                         "} but the model classifies {tall=" + (c.tall ? "true" : "false") +
                         ", exceptional=" + (c.exceptional ? "true" : "false") + "}"});
    }
  }

  // Moment image of every orbit above q lies in the closed moment cone
  // at q.
  for (std::size_t q = 0; q < orbits.size(); ++q) {
    if (!orbits[q].model) continue;
    const LocalModel& model = *orbits[q].model;
    if (model.h() > 0 && !model.h_embedding()) continue;
    const Cone cone = moment_cone(model);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if (!oc.below(q, o)) continue;
      for (const PLCell& cell : orbits[o].moment_image.cells) {
        for (const RatVec& v : cell.vertices) {
          if (!cone_contains(cone, v).contained) {
            out.push_back({"cone-containment",
                           "moment image of orbit '" + orbits[o].id + "' has vertex " +
                               to_string(std::span<const Rat>(v)) +
                               " outside the moment cone of orbit '" + orbits[q].id + "'"});
          }
        }
      }
    }
  }

  // Above every tall modeled orbit the complex must repeat the catchment
  // pattern counts and grading.
  if (!oc.has_cycle()) {
    for (std::size_t base = 0; base < orbits.size(); ++base) {
      if (!orbits[base].model || !is_tall(*orbits[base].model)) continue;
      std::vector<std::size_t> up;
      up.push_back(base);
      bool generic_above = false;
      for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (!oc.below(base, o)) continue;
        up.push_back(o);
        if (orbits[o].generic) generic_above = true;
      }
      if (generic_above) {
        out.push_back({"catchment-generic",
                       "a generic family lies above tall modeled orbit '" + orbits[base].id +
                           "'; its catchment must consist of finitely many orbits"});
        continue;
      }
      const std::vector<IndexSet> patterns = catchment_orbits(*orbits[base].model);
      if (patterns.size() != up.size()) {
        out.push_back({"catchment-count",
                       "orbit '" + orbits[base].id + "' has " + std::to_string(up.size()) +
                           " orbits above it but its germ admits " +
                           std::to_string(patterns.size()) + " catchment patterns"});
        continue;
      }
      std::multiset<std::size_t> pattern_sizes, heights;
      for (const IndexSet& p : patterns) pattern_sizes.insert(p.size());
      std::map<std::size_t, std::size_t> memo;
      for (std::size_t o : up) heights.insert(chain_height(oc, base, o, memo));
      if (pattern_sizes != heights) {
        out.push_back({"catchment-grading",
                       "closure heights above orbit '" + orbits[base].id +
                           "' do not match the catchment pattern sizes"});
      }
    }
  }

  return out;
}

}  // namespace c1ham
