#include "twotree/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "twotree/handles.hpp"

namespace twotree {

EmbeddedGraph embedding_from_drawing(std::span<const std::pair<double, double>> points, std::span<const Edge> edges) {
  const Graph g = Graph::from_edges(points.size(), edges);
  std::vector<std::vector<VertexId>> rot(points.size());
  for (VertexId v = 0; v < points.size(); ++v) {
    auto nb = std::vector<VertexId>(g.neighbors(v).begin(), g.neighbors(v).end());
    auto angle = [&](VertexId w) {
      return std::atan2(points[w].second - points[v].second, points[w].first - points[v].first);
    };
    std::sort(nb.begin(), nb.end(), [&](VertexId p, VertexId q) { return angle(p) > angle(q); });
    rot[v] = std::move(nb);
  }
  return EmbeddedGraph::from_rotation(std::move(rot));
}

namespace {

std::pair<double, double> polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double step_angle(std::size_t i, std::size_t count) { return 2.0 * std::numbers::pi * static_cast<double>(i) / count; }

}  // namespace

EmbeddedGraph prism(std::size_t r) {
  if (r < 3) throw Error("prism needs r >= 3");
  std::vector<std::pair<double, double>> pts(2 * r);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < r; ++i) {
    pts[i] = polar(2.0, step_angle(i, r));
    pts[r + i] = polar(1.0, step_angle(i, r));
    VertexId j = static_cast<VertexId>((i + 1) % r);
    edges.emplace_back(i, j);
    edges.emplace_back(r + i, r + j);
    edges.emplace_back(i, r + i);
  }
  return embedding_from_drawing(pts, edges);
}

std::vector<Edge> prism_spokes(std::size_t r) {
  std::vector<Edge> out;
  for (VertexId i = 0; i < r; ++i) out.emplace_back(i, static_cast<VertexId>(r + i));
  return out;
}

EmbeddedGraph cube() { return prism(4); }

EmbeddedGraph k4() {
  std::vector<std::pair<double, double>> pts{polar(1, 0), polar(1, step_angle(1, 3)), polar(1, step_angle(2, 3)), {0, 0}};
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  return embedding_from_drawing(pts, edges);
}

EmbeddedGraph cycle(std::size_t n) {
  if (n < 3) throw Error("cycle needs n >= 3");
  std::vector<std::vector<VertexId>> rot(n);
  for (VertexId v = 0; v < n; ++v)
    rot[v] = {static_cast<VertexId>((v + n - 1) % n), static_cast<VertexId>((v + 1) % n)};
  return EmbeddedGraph::from_rotation(std::move(rot));
}

EmbeddedGraph double_wheel(std::size_t n) {
  if (n < 6) throw Error("double wheel needs n >= 6");
  const std::size_t m = n - 2;
  const VertexId inner = static_cast<VertexId>(m), outer = static_cast<VertexId>(m + 1);
  std::vector<std::vector<VertexId>> rot(n);
  for (VertexId i = 0; i < m; ++i) {
    VertexId prev = static_cast<VertexId>((i + m - 1) % m), next = static_cast<VertexId>((i + 1) % m);
    rot[i] = {outer, prev, inner, next};
  }
  for (VertexId i = 0; i < m; ++i) {
    rot[inner].push_back(static_cast<VertexId>(m - 1 - i));
    rot[outer].push_back(i);
  }
  return EmbeddedGraph::from_rotation(std::move(rot));
}

EmbeddedGraph g_k(std::size_t k) {
  if (k < 2) throw Error("g_k needs k >= 2");
  const std::size_t m = 2 * k;
  std::vector<std::pair<double, double>> pts(3 * m);
  std::vector<Edge> edges;
  auto a = [&](std::size_t i) { return static_cast<VertexId>(i % m); };
  auto b = [&](std::size_t i) { return static_cast<VertexId>(m + i % m); };
  auto c = [&](std::size_t i) { return static_cast<VertexId>(2 * m + i % m); };
  for (std::size_t i = 0; i < m; ++i) {
    pts[a(i)] = polar(1.0, step_angle(i, m));
    pts[c(i)] = polar(1.5, step_angle(i, m));
    pts[b(i)] = polar(2.0, step_angle(i, m));
    edges.emplace_back(a(i), a(i + 1));
    edges.emplace_back(b(i), b(i + 1));
    edges.emplace_back(a(i), c(i));
    edges.emplace_back(b(i), c(i));
  }
  for (std::size_t j = 0; j < k; ++j) edges.emplace_back(c(2 * j), c(2 * j + 1));
  return embedding_from_drawing(pts, edges);
}

EmbeddedGraph h_22() {
  std::vector<std::pair<double, double>> pts(22);
  std::vector<Edge> edges;
  const std::size_t c_pos[] = {0, 1, 2, 3, 5, 6};
  std::vector<std::int64_t> c_id(8, -1);
  for (std::size_t j = 0; j < 6; ++j) c_id[c_pos[j]] = static_cast<std::int64_t>(16 + j);
  const double twist = std::numbers::pi / 8;
  for (VertexId i = 0; i < 8; ++i) {
    VertexId next = (i + 1) % 8;
    pts[i] = polar(0.5, step_angle(i, 8) + twist);
    pts[8 + i] = polar(1.5, step_angle(i, 8) + twist);
    edges.emplace_back(i, next);
    edges.emplace_back(8 + i, 8 + next);
    if (c_id[i] >= 0) {
      VertexId c = static_cast<VertexId>(c_id[i]);
      pts[c] = polar(1.0, step_angle(i, 8) + twist);
      edges.emplace_back(i, c);
      edges.emplace_back(8 + i, c);
    } else {
      edges.emplace_back(i, 8 + i);
    }
  }
  auto c = [&](std::size_t pos) { return static_cast<VertexId>(c_id[pos]); };
  edges.emplace_back(c(0), c(1));
  edges.emplace_back(c(2), c(3));
  edges.emplace_back(c(5), c(6));
  return embedding_from_drawing(pts, edges);
}

std::vector<Edge> h_22_spokes() { return {Edge(4, 12), Edge(7, 15)}; }

Graph k_tree(std::size_t k, std::span<const std::vector<VertexId>> attachments) {
  KTreeSequence seq;
  seq.k = k;
  for (VertexId v = 0; v < k; ++v) seq.base.push_back(v);
  for (std::size_t i = 0; i < attachments.size(); ++i)
    seq.steps.push_back({static_cast<VertexId>(k + i), attachments[i]});
  if (auto err = sequence_error(seq)) throw Error("invalid k-tree sequence: " + *err);
  return realize(seq);
}

Graph random_k_tree(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0 || n < k) throw Error("random k-tree needs 1 <= k <= n");
  Rng rng(seed);
  std::vector<std::vector<VertexId>> cliques;
  std::vector<VertexId> base(k);
  for (VertexId v = 0; v < k; ++v) base[v] = v;
  cliques.push_back(base);
  std::vector<std::vector<VertexId>> attachments;
  for (VertexId v = static_cast<VertexId>(k); v < n; ++v) {
    const std::vector<VertexId> host = cliques[rng.below(cliques.size())];
    attachments.push_back(host);
    for (std::size_t drop = 0; drop < k; ++drop) {
      std::vector<VertexId> next;
      for (std::size_t i = 0; i < k; ++i)
        if (i != drop) next.push_back(host[i]);
      next.push_back(v);
      cliques.push_back(std::move(next));
    }
  }
  return k_tree(k, attachments);
}

Graph random_maximal_k_degenerate(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < k) throw Error("random maximal k-degenerate graph needs n >= k");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < k; ++u)
    for (VertexId v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  for (VertexId v = static_cast<VertexId>(k); v < n; ++v) {
    std::vector<VertexId> pool(v);
    for (VertexId u = 0; u < v; ++u) pool[u] = u;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      edges.emplace_back(pool[i], v);
    }
  }
  return Graph::from_edges(n, edges);
}

EmbeddedGraph random_4mp_dual(std::size_t order, std::uint64_t seed) {
  if (order < 8 || order % 2 != 0) throw Error("4MP dual order must be even and at least 8");
  Rng rng(seed);
  EmbeddedGraph eg = cube();
  while (eg.order() < order) {
    std::vector<HandleSite> sites = handle_sites(eg);
    bool grown = false;
    while (!sites.empty() && !grown) {
      std::size_t pick = rng.below(sites.size());
      EmbeddedGraph child = add_handle(eg, sites[pick]).embedding;
      if (is_4mp_dual(child)) {
        eg = std::move(child);
        grown = true;
      } else {
        sites.erase(sites.begin() + static_cast<std::ptrdiff_t>(pick));
      }
    }
    if (!grown) throw InvariantViolation("no handle keeps the graph a 4MP dual");
  }
  return eg;
}

EmbeddedGraph random_4mp(std::size_t n, std::uint64_t seed) {
  if (n < 6) throw Error("a 4MP has at least 6 vertices");
  return dual(random_4mp_dual(2 * n - 4, seed));
}

EmbeddedGraph random_stacked_triangulation(std::size_t order, std::uint64_t seed) {
  if (order < 6) throw Error("stacked triangulation needs order >= 6");
  Rng rng(seed);
  const std::size_t base_order = 6 + rng.below(std::min<std::size_t>(7, order - 5));
  EmbeddedGraph eg = random_4mp(base_order, rng.next());
  while (eg.order() < order) {
    const std::size_t remaining = order - eg.order();
    const std::size_t host_faces = 2 * eg.order() - 4;
    const std::size_t face = rng.below(host_faces);
    if (remaining >= 3 && rng.below(3) == 0) {
      const std::size_t guest_order = 6 + rng.below(std::min<std::size_t>(5, remaining - 2));
      EmbeddedGraph guest = random_4mp(guest_order, rng.next());
      const std::size_t guest_face = rng.below(2 * guest.order() - 4);
      eg = glue_into_face(eg, face, guest, guest_face);
    } else {
      eg = stack_face(eg, face);
    }
  }
  return eg;
}

std::vector<std::vector<VertexId>> find_bricks(const Graph& g) {
  std::set<std::vector<VertexId>> found;
  for (const Edge& chord : g.edges()) {
    const VertexId u = chord.u, v = chord.v;
    // 4-cycles u v x y through the chord.
    std::vector<std::pair<VertexId, VertexId>> squares;
    for (VertexId x : g.neighbors(v)) {
      if (x == u) continue;
      for (VertexId y : g.neighbors(u)) {
        if (y == v || y == x) continue;
        if (g.adjacent(x, y)) squares.emplace_back(x, y);
      }
    }
    for (std::size_t i = 0; i < squares.size(); ++i)
      for (std::size_t j = i + 1; j < squares.size(); ++j) {
        std::vector<VertexId> set{u, v, squares[i].first, squares[i].second, squares[j].first, squares[j].second};
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end()) continue;
        if (induced(g, set).graph.size() == 7) found.insert(set);
      }
  }
  return {found.begin(), found.end()};
}

std::size_t count_bricks(const Graph& g) { return find_bricks(g).size(); }

Graph g4_dual_drawing() {
  // Drawing labels 01 0a 0b 11 1a 1b 21 2a 2b 31 3a 3b 41 x y; 41 is 01.
  enum : VertexId { v01, v0a, v0b, v11, v1a, v1b, v21, v2a, v2b, v31, v3a, v3b, vx, vy, v41 = v01 };
  const std::vector<VertexId> rim{v01, v0a, v11, v1a, v21, v2a, v31, v3a, v41, v3b, v31, v2b, v21, v1b, v11, v0b, v01};
  const std::vector<VertexId> fan{vx,  v01, vy,  v0b, v0a, vx,  v11, vy,  v1b, v1a, vx, v21,
                                  vy,  v2b, v2a, vx,  v31, vy,  v3b, v3a, vx,  v41, vy};
  std::set<Edge> edges;
  for (const auto* walk : {&rim, &fan})
    for (std::size_t i = 0; i + 1 < walk->size(); ++i) edges.emplace((*walk)[i], (*walk)[i + 1]);
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(14, list);
}

FamilyGraph build_family(const FamilySpec& spec) {
  auto embedded = [](EmbeddedGraph eg) {
    FamilyGraph out;
    out.graph = eg.graph();
    out.embedding = std::move(eg);
    return out;
  };
  if (spec.name == "k4") return embedded(k4());
  if (spec.name == "cn") return embedded(cycle(spec.n));
  if (spec.name == "prism") return embedded(prism(spec.r));
  if (spec.name == "cube") return embedded(cube());
  if (spec.name == "double-wheel") return embedded(double_wheel(spec.n));
  if (spec.name == "gk") return embedded(g_k(spec.k));
  if (spec.name == "h22") return embedded(h_22());
  if (spec.name == "random-4mp") return embedded(random_4mp(spec.n, spec.seed));
  if (spec.name == "random-4mp-dual") return embedded(random_4mp_dual(spec.n, spec.seed));
  if (spec.name == "stacked") return embedded(random_stacked_triangulation(spec.n, spec.seed));
  if (spec.name == "ktree") return {random_k_tree(spec.n, spec.k, spec.seed), std::nullopt};
  if (spec.name == "maxkdeg") return {random_maximal_k_degenerate(spec.n, spec.k, spec.seed), std::nullopt};
  throw Error("unknown family '" + spec.name + "'");
}

}  // namespace twotree
