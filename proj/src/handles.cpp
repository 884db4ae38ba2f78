#include "twotree/handles.hpp"

#include <algorithm>
#include <unordered_set>

#include "twotree/families.hpp"

namespace twotree {

namespace {

// Directed edge of `face` covering e, if any.
std::optional<std::pair<VertexId, VertexId>> dart_on_face(const Face& face, const Edge& e) {
  for (std::size_t i = 0; i < face.length(); ++i) {
    VertexId a = face.vertices[i], b = face.vertices[(i + 1) % face.length()];
    if (Edge(a, b) == e) return std::make_pair(a, b);
  }
  return std::nullopt;
}

void replace(std::vector<VertexId>& list, VertexId from, VertexId to) {
  auto it = std::find(list.begin(), list.end(), from);
  if (it == list.end()) throw Error("rotation does not contain " + std::to_string(from));
  *it = to;
}

}  // namespace

HandleResult add_handle(const EmbeddedGraph& eg, const HandleSite& site) {
  if (site.first == site.second) throw Error("a handle needs two distinct edges (same edge would give a multi-edge)");
  for (const Edge* e : {&site.first, &site.second})
    if (!eg.graph().adjacent(e->u, e->v)) throw Error("edge " + to_string(*e) + " not in graph");
  const FaceSet fs(eg);
  std::optional<std::size_t> chosen = site.face;
  if (chosen) {
    if (*chosen >= fs.count()) throw Error("face index out of range");
    if (!dart_on_face(fs[*chosen], site.first) || !dart_on_face(fs[*chosen], site.second))
      throw Error("edges " + to_string(site.first) + " and " + to_string(site.second) + " are not both on face " +
                  std::to_string(*chosen));
  } else {
    for (std::size_t f = 0; f < fs.count() && !chosen; ++f)
      if (dart_on_face(fs[f], site.first) && dart_on_face(fs[f], site.second)) chosen = f;
    if (!chosen) throw Error("edges " + to_string(site.first) + " and " + to_string(site.second) + " share no face");
  }
  const Face& face = fs[*chosen];
  auto [u, v] = *dart_on_face(face, site.first);
  auto [w, x] = *dart_on_face(face, site.second);

  auto rot = eg.rotations();
  const VertexId y = static_cast<VertexId>(eg.order());
  const VertexId z = y + 1;
  replace(rot[u], v, y);
  replace(rot[v], u, y);
  replace(rot[w], x, z);
  replace(rot[x], w, z);
  // The face splits into y v ... w z and z x ... u y.
  rot.push_back({u, z, v});
  rot.push_back({w, y, x});
  return {EmbeddedGraph::from_rotation(std::move(rot)), y, z};
}

HandleResult four_handle(const EmbeddedGraph& eg, std::size_t face, int pair) {
  const FaceSet fs(eg);
  if (face >= fs.count()) throw Error("face index out of range");
  const Face& f = fs[face];
  if (f.length() != 4) throw Error("4-handling needs a face of length 4, face has length " + std::to_string(f.length()));
  if (pair != 0 && pair != 1) throw Error("4-handle pair must be 0 or 1 (opposite edges only)");
  if (!is_4mp_dual(eg)) throw Error("4-handling is defined on 4MP duals");
  const auto& p = f.vertices;
  const std::size_t i = static_cast<std::size_t>(pair);
  HandleSite site{Edge(p[i], p[i + 1]), Edge(p[i + 2], p[(i + 3) % 4]), face};
  return add_handle(eg, site);
}

std::vector<HandleSite> handle_sites(const EmbeddedGraph& eg) {
  std::vector<HandleSite> out;
  const auto fs = faces(eg);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto edges = fs[f].edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (edges[i] != edges[j]) out.push_back({edges[i], edges[j], f});
  }
  return out;
}

std::vector<std::pair<std::size_t, int>> four_handle_sites(const EmbeddedGraph& eg) {
  std::vector<std::pair<std::size_t, int>> out;
  const auto fs = faces(eg);
  for (std::size_t f = 0; f < fs.size(); ++f)
    if (fs[f].length() == 4) {
      out.emplace_back(f, 0);
      out.emplace_back(f, 1);
    }
  return out;
}

EmbeddedGraph remove_handle(const EmbeddedGraph& eg, VertexId y, VertexId z) {
  if (!eg.graph().adjacent(y, z)) throw Error("handle vertices are not adjacent");
  if (eg.graph().degree(y) != 3 || eg.graph().degree(z) != 3) throw Error("handle vertices must have degree 3");
  auto rot = eg.rotations();
  for (VertexId s : {y, z}) {
    std::vector<VertexId> ends;
    for (VertexId w : rot[s])
      if (w != y && w != z) ends.push_back(w);
    if (ends.size() != 2) throw Error("handle vertex has an unexpected neighborhood");
    if (eg.graph().adjacent(ends[0], ends[1])) throw Error("suppressing the handle would create a multi-edge");
    replace(rot[ends[0]], s, ends[1]);
    replace(rot[ends[1]], s, ends[0]);
  }
  std::vector<VertexId> new_id(eg.order(), 0);
  VertexId next = 0;
  for (VertexId v = 0; v < eg.order(); ++v)
    if (v != y && v != z) new_id[v] = next++;
  std::vector<std::vector<VertexId>> out(next);
  for (VertexId v = 0; v < eg.order(); ++v) {
    if (v == y || v == z) continue;
    for (VertexId w : rot[v]) out[new_id[v]].push_back(new_id[w]);
  }
  return EmbeddedGraph::from_rotation(std::move(out));
}

namespace {

std::vector<EmbeddedGraph> one_handle_step(const std::vector<EmbeddedGraph>& level, bool keep_4mp_duals_only) {
  std::vector<EmbeddedGraph> next;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  for (const EmbeddedGraph& eg : level)
    for (const HandleSite& site : handle_sites(eg)) {
      EmbeddedGraph child = add_handle(eg, site).embedding;
      if (keep_4mp_duals_only && !is_4mp_dual(child)) continue;
      if (seen.insert(canonical_form(child.graph())).second) next.push_back(std::move(child));
    }
  return next;
}

}  // namespace

std::map<std::size_t, std::vector<EmbeddedGraph>> handle_closure(std::size_t max_order) {
  std::map<std::size_t, std::vector<EmbeddedGraph>> strata;
  if (max_order < 8) return strata;
  std::vector<EmbeddedGraph> level{prism(4)};
  for (std::size_t order = 8; order <= max_order; order += 2) {
    strata[order] = level;
    if (order + 2 <= max_order) level = one_handle_step(level, true);
  }
  return strata;
}

std::vector<EmbeddedGraph> handle_descendants(const EmbeddedGraph& start, std::size_t steps,
                                              bool keep_4mp_duals_only) {
  std::vector<EmbeddedGraph> level{start};
  for (std::size_t s = 0; s < steps; ++s) level = one_handle_step(level, keep_4mp_duals_only);
  return level;
}

std::vector<EmbeddedGraph> prism_handle_family(std::size_t r, std::size_t h) {
  if (r < 4) throw Error("prism handle family needs r >= 4");
  if (h > 2) throw Error("prism handle family covers at most two handles");
  std::vector<EmbeddedGraph> out;
  for (EmbeddedGraph& eg : handle_descendants(prism(r), h, false))
    if (is_4mp_dual(eg)) out.push_back(std::move(eg));
  return out;
}

}  // namespace twotree
